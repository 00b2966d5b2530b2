#include "thetacert/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace theta {

namespace {

void require_tau_not_one(double tau) {
    if (tau == 1.0) throw std::invalid_argument("tau = 1 is degenerate here");
}

void require_tau_below_one(double tau) {
    if (!(tau < 1.0)) throw std::invalid_argument("tau must be < 1");
}

double spectral_degree_bound(double d) {
    if (!(d >= 2.0)) throw std::invalid_argument("degree must be >= 2");
    return d / (2.0 * std::sqrt(d - 1.0));
}

}  // namespace

double kesten_stigum_regular(double k, double tau) {
    require_tau_not_one(tau);
    const double ratio = (k - 1.0) / (tau - 1.0);
    return ratio * ratio + 1.0;
}

double kesten_stigum_poisson(double k, double tau) {
    require_tau_not_one(tau);
    const double ratio = (k - 1.0) / (tau - 1.0);
    return ratio * ratio;
}

double first_moment_coloring(double k) {
    if (!(k > 1.0)) throw std::invalid_argument("color count must exceed 1");
    return 2.0 * k * std::log(k) - std::log(k);
}

double effective_colors(double k, double tau) {
    require_tau_below_one(tau);
    return (k - tau) / (1.0 - tau);
}

bool sos2_refutation_possible(double d, double k, double tau) {
    return effective_colors(k, tau) < 1.0 + spectral_degree_bound(d);
}

bool sos2_refutation_impossible(double d, double k, double tau) {
    return effective_colors(k, tau) > 2.0 + spectral_degree_bound(d);
}

double rearranged_nonrefutable_degree(double k) {
    if (!(k >= 3.0)) throw std::invalid_argument("rearranged bound needs k >= 3");
    const double s = k - 2.0;
    return 2.0 * s * (s + std::sqrt(s * s - 1.0));
}

double tau_transform_forward(double theta_hat, double tau) {
    require_tau_below_one(tau);
    return (1.0 - tau) * theta_hat + tau;
}

double tau_transform_inverse(double theta_hat_tau, double tau) {
    require_tau_below_one(tau);
    return (theta_hat_tau - tau) / (1.0 - tau);
}

double condensation_scale(double k, double tau) {
    require_tau_not_one(tau);
    if (!(k > 1.0)) throw std::invalid_argument("color count must exceed 1");
    return k * std::log(k) / ((tau - 1.0) * (tau - 1.0));
}

}  // namespace theta
