#pragma once

namespace theta {

// Detection and refutation thresholds for k-community partitions with edge
// affinity parameter tau (tau = 0: disassortative planted coloring). All
// functions take real k and validate their domains with std::invalid_argument.

// Kesten-Stigum detection threshold on random regular graphs:
// ((k-1)/(tau-1))^2 + 1. pre: tau != 1.
double kesten_stigum_regular(double k, double tau);

// Same threshold in the sparse Poisson (Erdos-Renyi) normalization, without
// the +1 shift. pre: tau != 1.
double kesten_stigum_poisson(double k, double tau);

// First-moment upper bound for k-colorability: 2k ln k - ln k. pre: k > 1.
double first_moment_coloring(double k);

// Effective color count after unwinding the tau reparametrization:
// (k - tau)/(1 - tau). pre: tau < 1.
double effective_colors(double k, double tau);

// Degree-two SOS refutation of k-partition feasibility is possible (whp,
// asymptotically) when the effective color count drops below the spectral
// bound 1 + d/(2 sqrt(d-1)), and impossible when it exceeds
// 2 + d/(2 sqrt(d-1)). pre: d >= 2, tau < 1.
bool sos2_refutation_possible(double d, double k, double tau);
bool sos2_refutation_impossible(double d, double k, double tau);

// The impossibility condition at tau = 0 rearranged for the degree: no
// degree-two refutation below d = 2(k-2)((k-2) + sqrt((k-2)^2 - 1)).
// pre: k >= 3.
double rearranged_nonrefutable_degree(double k);

// Relaxed-theta reparametrization: forward maps theta_hat to
// (1-tau) theta_hat + tau; inverse undoes it. pre: tau < 1.
double tau_transform_forward(double theta_hat, double tau);
double tau_transform_inverse(double theta_hat_tau, double tau);

// Order-of-magnitude condensation scale k ln k / (tau-1)^2, displayed with
// unit constant; not a calibrated threshold. pre: k > 1, tau != 1.
double condensation_scale(double k, double tau);

}  // namespace theta
