#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thetacert/graph.hpp"

// nlohmann::json, vendored single header
#include <json.hpp>

namespace theta {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Non-backtracking walk counts A^(0)..A^(T):
//   A^(0) = I,  A^(1) = A,  A^(2) = A^2 - d I,
//   A^(t) = A A^(t-1) - (d-1) A^(t-2)   for t >= 3.
// Entry (i,j) of A^(t) is the exact number of length-t walks from i to j that
// never immediately reverse an edge, valid on any simple regular graph.
// When the girth exceeds t+1, A^(t) has zero diagonal and zeros on edges.
std::vector<IntMatrix> nonbacktracking_powers(const RegularGraph& g, int max_t);

// Raised when the primal construction is out of scope for the graph:
// girth (or the gamma override) below 4, degree below 2, or an acyclic
// graph without an explicit gamma override.
struct PrimalUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GirthTooSmallError : PrimalUnavailableError {
    using PrimalUnavailableError::PrimalUnavailableError;
};

// Feasible point for the shift form of the Lovasz theta SDP on the
// complement: P psd, unit diagonal, value -1/(kappa-1) on edges of g,
// certifying theta(complement of g) <= kappa.
//
// Construction: gamma_used = largest even value <= min(girth, override),
// m = gamma_used/2; r_m is the smallest root of q_m; the certified value is
// kappa = 1 + d / (2 (-r_m) sqrt(d-1)). The matrix is the polynomial
// P = I - A/(kappa-1) + sum_{t=2}^{gamma_used-2} a_t A^(t) whose spectral
// profile is the normalized squared node polynomial s(z).
struct PrimalCertificate {
    int n = 0;
    int d = 0;
    int gamma_used = 0;        // even polynomial-degree budget + 2
    double kappa = 0.0;        // certified upper bound on theta
    double r_m = 0.0;          // smallest quadrature node, in (-1, 0)
    double epsilon_gamma = 0.0;  // r_m + 1, the gap to the measure's edge
    std::vector<double> c;     // q-basis coefficients c_t, t = 0..gamma_used-2
    std::vector<double> a;     // walk coefficients a_t, t = 2..gamma_used-2
    Eigen::MatrixXd P;
};

// pre: d >= 2 and min(girth, override) >= 4; acyclic graphs need an explicit
// override. Throws PrimalUnavailableError / GirthTooSmallError otherwise.
PrimalCertificate build_primal_certificate(const RegularGraph& g,
                                           std::optional<int> gamma_override = {});

// Re-checks a certificate entry-wise against the graph, trusting nothing from
// the builder: unit diagonal and edge values within 1e-12, PSD within tol
// (tol < 0 selects the shared default rule).
struct PrimalVerification {
    bool diagonal_ok = false;
    bool edges_ok = false;
    bool psd_ok = false;
    double max_diag_error = 0.0;
    double max_edge_error = 0.0;
    double lambda_min_p = 0.0;
    double tol = 0.0;
    bool pass() const { return diagonal_ok && edges_ok && psd_ok; }
};
PrimalVerification verify_primal(const RegularGraph& g, const PrimalCertificate& cert,
                                 double tol = -1.0);

// Dual spectral witness D = (I + A/|lambda_min(A)|)/n: psd with trace 1,
// supported on the diagonal and edges, certifying
// theta(complement of g) >= <D, J> = 1 + d/|lambda_min(A)|.
// Edgeless graphs get D = I/n with objective 1.
struct DualWitness {
    double eta = 0.0;          // coefficient of A
    Eigen::VectorXd b;         // diagonal, all 1/n
    double objective = 0.0;    // <D, J>
    double adjacency_lambda_min = 0.0;
};
DualWitness build_dual_witness(const RegularGraph& g);

struct DualVerification {
    bool trace_ok = false;
    bool psd_ok = false;
    double trace_error = 0.0;
    double lambda_min_d = 0.0;
    double objective = 0.0;    // recomputed from the graph
    double tol = 0.0;
    bool pass() const { return trace_ok && psd_ok; }
};
DualVerification verify_dual(const RegularGraph& g, const DualWitness& w,
                             double tol = -1.0);

// Degree-two pseudoexpectation for k-coloring built from a feasible P: the
// bordered moment matrix of the color-indicator monomials,
//   top-left 1, border ell = (1/k) 1, and blocks
//   E_ij = (P_ij - 1/k)/(k-1) * (I_q - J_q/q) + J_q/k^2.
// The bordered matrix is PSD iff P - J_n/k is PSD. With integer k the block
// size is q = k and each block has trace P_ij, row sums 1/k, and diagonal
// 1/k; non-integer k > 1 (accepted for boundary probes) uses q = ceil(k),
// which keeps the PSD equivalence but not the per-block sum identities.
struct Pseudoexpectation {
    double k = 0.0;
    int block_size = 0;
    Eigen::VectorXd ell;
    Eigen::MatrixXd moment_matrix;  // (n*block_size + 1) square
};
Pseudoexpectation lift_pseudoexpectation(const Eigen::MatrixXd& p, double k);

// Two-sided bounds on theta(complement of g): dual witness always, primal
// certificate when girth permits (upper empty otherwise). Throws if the
// bounds cross by more than 1e-8.
struct ThetaBounds {
    double lower = 0.0;
    std::optional<double> upper;
    DualWitness dual;
    DualVerification dual_check;
    std::optional<PrimalCertificate> primal;
    std::optional<PrimalVerification> primal_check;
};
ThetaBounds theta_bounds(const RegularGraph& g, std::optional<int> gamma_override = {},
                         double tol = -1.0);

// Certificate serialization: keys n, d, gamma_used, kappa, r_m,
// epsilon_gamma, c, a, lambda_min_P, verified; P embedded row-major when
// n <= 64.
nlohmann::json certificate_json(const PrimalCertificate& cert,
                                const PrimalVerification& verification);

}  // namespace theta
