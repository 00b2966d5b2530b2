#pragma once

#include <vector>

namespace theta {

// Spectral density of the degree-d infinite tree with eigenvalues rescaled
// by 2 sqrt(d-1) to [-1,1]:
//   mu(z) = (2/pi) * d(d-1) * sqrt(1-z^2) / (d^2 - 4(d-1) z^2).
// pre: d >= 2, |z| <= 1 (std::domain_error otherwise). At d = 2 the density
// has poles at z = +-1 and +infinity is returned there.
double kesten_mckay_density(double z, int d);

// Orthonormal polynomial family for that measure:
//   q_0 = 1,
//   q_1 = 2 sqrt((d-1)/d) z,
//   q_2 = 2 z q_1 - sqrt(d/(d-1)) q_0,
//   q_{t+1} = 2 z q_t - q_{t-1}          for t >= 2.
// pre: t >= 0, d >= 2.
double q_eval(int t, double z, int d);

struct QuadratureRule {
    int m = 0;
    int d = 0;
    std::vector<double> nodes;    // descending, all inside (-1,1)
    std::vector<double> weights;  // positive, summing to 1
};

// m-point Gauss rule for the measure above, from the eigendecomposition of
// the recurrence's Jacobi matrix: zero diagonal, first off-diagonal entry
// sqrt(d)/(2 sqrt(d-1)), every later off-diagonal 1/2. Nodes are the roots
// of q_m; the rule integrates polynomials of degree <= 2m-1 exactly.
// pre: m >= 1, d >= 2.
QuadratureRule quadrature_rule(int m, int d);

// Polynomial expressed in the q-basis: f(z) = sum_t coeffs[t] * q_t(z).
struct PolyInBasis {
    int d = 0;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double z) const;
};

// <f, g> against the measure, evaluated with `rule`. Errors unless
// deg f + deg g <= 2*rule.m - 1, the rule's exactness range, so the result
// is the exact integral up to rounding.
double inner_product(const PolyInBasis& f, const PolyInBasis& g,
                     const QuadratureRule& rule);

}  // namespace theta
