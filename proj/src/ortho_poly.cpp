#include "thetacert/ortho_poly.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace theta {

namespace {

void check_degree(int d) {
    if (d < 2) throw std::invalid_argument("tree degree must be >= 2");
}

}  // namespace

double kesten_mckay_density(double z, int d) {
    check_degree(d);
    if (!(std::abs(z) <= 1.0))
        throw std::domain_error("density is supported on [-1,1], got z = " +
                                std::to_string(z));
    const double denom = static_cast<double>(d) * d - 4.0 * (d - 1) * z * z;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();  // d=2, z=+-1
    return (2.0 / std::numbers::pi) * d * (d - 1) * std::sqrt(1.0 - z * z) / denom;
}

double q_eval(int t, double z, int d) {
    check_degree(d);
    if (t < 0) throw std::invalid_argument("polynomial index must be >= 0");
    if (t == 0) return 1.0;
    double prev = 1.0;                                  // q_0
    double cur = 2.0 * std::sqrt((d - 1.0) / d) * z;    // q_1
    for (int s = 1; s < t; ++s) {
        const double bridge = (s == 1) ? std::sqrt(d / (d - 1.0)) : 1.0;
        const double next = 2.0 * z * cur - bridge * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

QuadratureRule quadrature_rule(int m, int d) {
    check_degree(d);
    if (m < 1) throw std::invalid_argument("quadrature needs m >= 1 nodes");

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd subdiag = Eigen::VectorXd::Constant(std::max(m - 1, 0), 0.5);
    if (m > 1) subdiag(0) = std::sqrt(static_cast<double>(d)) / (2.0 * std::sqrt(d - 1.0));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Jacobi matrix eigendecomposition failed");

    QuadratureRule rule;
    rule.m = m;
    rule.d = d;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    // Eigen sorts ascending; the rule is reported with nodes descending.
    // Weights are squared first components of the normalized eigenvectors,
    // so they are positive and sum to 1 without renormalization.
    for (int i = 0; i < m; ++i) {
        const int src = m - 1 - i;
        rule.nodes[i] = solver.eigenvalues()(src);
        const double first = solver.eigenvectors()(0, src);
        rule.weights[i] = first * first;
    }
    return rule;
}

double PolyInBasis::eval(double z) const {
    check_degree(d);
    if (coeffs.empty()) return 0.0;
    double acc = coeffs[0];
    if (coeffs.size() == 1) return acc;
    double prev = 1.0;
    double cur = 2.0 * std::sqrt((d - 1.0) / d) * z;
    acc += coeffs[1] * cur;
    for (std::size_t t = 2; t < coeffs.size(); ++t) {
        const double bridge = (t == 2) ? std::sqrt(d / (d - 1.0)) : 1.0;
        const double next = 2.0 * z * cur - bridge * prev;
        prev = cur;
        cur = next;
        acc += coeffs[t] * cur;
    }
    return acc;
}

double inner_product(const PolyInBasis& f, const PolyInBasis& g,
                     const QuadratureRule& rule) {
    if (f.d != rule.d || g.d != rule.d)
        throw std::invalid_argument("polynomials and rule use different degrees d");
    if (f.coeffs.empty() || g.coeffs.empty()) return 0.0;
    if (f.degree() + g.degree() > 2 * rule.m - 1)
        throw std::invalid_argument(
            "rule with m = " + std::to_string(rule.m) +
            " nodes is not exact for degree " + std::to_string(f.degree() + g.degree()));
    double acc = 0.0;
    for (int i = 0; i < rule.m; ++i)
        acc += rule.weights[i] * f.eval(rule.nodes[i]) * g.eval(rule.nodes[i]);
    return acc;
}

}  // namespace theta
