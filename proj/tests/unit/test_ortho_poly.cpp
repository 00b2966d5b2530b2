#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/test_oracles.hpp"
#include "thetacert/ortho_poly.hpp"

using theta::PolyInBasis;
using theta::QuadratureRule;

TEST_SUITE("ortho_poly") {

TEST_CASE("density: closed-form values and domain gates") {
    // at z = 0 the density is (2/pi)(d-1)/d
    for (int d : {2, 3, 4, 10})
        CHECK(theta::kesten_mckay_density(0.0, d) ==
              doctest::Approx((2.0 / std::numbers::pi) * (d - 1.0) / d).epsilon(1e-14));
    // vanishing square-root edge for d >= 3
    CHECK(theta::kesten_mckay_density(1.0, 3) == 0.0);
    CHECK(theta::kesten_mckay_density(-1.0, 5) == 0.0);
    // d = 2 pole at the edges
    CHECK(std::isinf(theta::kesten_mckay_density(1.0, 2)));
    CHECK(theta::kesten_mckay_density(0.5, 2) ==
          doctest::Approx(1.0 / (std::numbers::pi * std::sqrt(0.75))).epsilon(1e-14));
    CHECK_THROWS_AS(theta::kesten_mckay_density(1.0001, 3), std::domain_error);
    CHECK_THROWS_AS(theta::kesten_mckay_density(-1.1, 3), std::domain_error);
    CHECK_THROWS_AS(theta::kesten_mckay_density(0.0, 1), std::invalid_argument);
}

TEST_CASE("density integrates to one (adaptive oracle)") {
    for (int d : {3, 4, 10}) {
        const double mass = oracle::integrate(
            [d](double phi) {
                return theta::kesten_mckay_density(std::cos(phi), d) * std::sin(phi);
            },
            0.0, std::numbers::pi, 1e-13);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("density matches the oracle's local formula pointwise") {
    for (int d : {3, 7})
        for (int i = 0; i <= 400; ++i) {
            const double z = -1.0 + 2.0 * i / 400.0;
            CHECK(theta::kesten_mckay_density(z, d) ==
                  doctest::Approx(oracle::density_local(z, d)).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("q recurrence agrees with the Chebyshev closed form") {
    for (int d : {2, 3, 4, 7, 12})
        for (int t = 0; t <= 8; ++t)
            for (int i = 0; i <= 80; ++i) {
                const double z = -1.0 + 2.0 * i / 80.0;
                CHECK(theta::q_eval(t, z, d) ==
                      doctest::Approx(oracle::q_closed_form(t, z, d)).epsilon(1e-12));
            }
    CHECK_THROWS_AS(theta::q_eval(-1, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(theta::q_eval(2, 0.0, 1), std::invalid_argument);
}

TEST_CASE("at d = 2 the family collapses to sqrt(2) times the first-kind Chebyshev") {
    for (int t = 1; t <= 8; ++t)
        for (int i = 0; i <= 40; ++i) {
            const double z = -1.0 + 2.0 * i / 40.0;
            CHECK(theta::q_eval(t, z, 2) ==
                  doctest::Approx(std::sqrt(2.0) * oracle::chebyshev_t(t, z)).epsilon(1e-12));
        }
}

TEST_CASE("orthonormality against the independent integration oracle") {
    for (int d : {3, 4})
        for (int s = 0; s <= 4; ++s)
            for (int t = s; t <= 4; ++t) {
                const double v = oracle::integrate_against_density(
                    [&](double z) { return theta::q_eval(s, z, d) * theta::q_eval(t, z, d); },
                    d, 1e-13);
                CHECK(v == doctest::Approx(s == t ? 1.0 : 0.0).epsilon(1e-9).scale(1.0));
            }
}

TEST_CASE("quadrature: closed-form two-point rule at d = 3") {
    const QuadratureRule rule = theta::quadrature_rule(2, 3);
    REQUIRE(rule.nodes.size() == 2);
    CHECK(rule.nodes[0] == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    CHECK(rule.nodes[1] == doctest::Approx(-std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    CHECK(rule.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rule.weights[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("quadrature: one-point rule sits at the origin") {
    const QuadratureRule rule = theta::quadrature_rule(1, 4);
    REQUIRE(rule.nodes.size() == 1);
    CHECK(rule.nodes[0] == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("quadrature structure: descending interior nodes, positive unit-mass weights") {
    for (int d : {2, 3, 5, 10})
        for (int m = 1; m <= 11; ++m) {
            const QuadratureRule rule = theta::quadrature_rule(m, d);
            REQUIRE(static_cast<int>(rule.nodes.size()) == m);
            double mass = 0.0;
            for (int i = 0; i < m; ++i) {
                CHECK(rule.nodes[i] < 1.0);
                CHECK(rule.nodes[i] > -1.0);
                if (i + 1 < m) CHECK(rule.nodes[i] > rule.nodes[i + 1]);
                CHECK(rule.weights[i] > 0.0);
                mass += rule.weights[i];
            }
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
            // nodes are roots of q_m; scale by the derivative-free residual
            for (double z : rule.nodes)
                CHECK(std::abs(theta::q_eval(m, z, d)) < 1e-10);
        }
    CHECK_THROWS_AS(theta::quadrature_rule(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(theta::quadrature_rule(3, 1), std::invalid_argument);
}

TEST_CASE("nodes of consecutive rules interlace") {
    for (int d : {3, 5})
        for (int m = 1; m <= 10; ++m) {
            const auto inner = theta::quadrature_rule(m, d);
            const auto outer = theta::quadrature_rule(m + 1, d);
            // descending order: outer[i] > inner[i] > outer[i+1]
            for (int i = 0; i < m; ++i) {
                CHECK(outer.nodes[i] > inner.nodes[i]);
                CHECK(inner.nodes[i] > outer.nodes[i + 1]);
            }
        }
}

TEST_CASE("quadrature is exact through degree 2m-1 (adaptive oracle)") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int d : {3, 5})
        for (int m : {2, 4, 8}) {
            const QuadratureRule rule = theta::quadrature_rule(m, d);
            for (int trial = 0; trial < 10; ++trial) {
                PolyInBasis f{d, std::vector<double>(2 * m, 0.0)};  // degree 2m-1
                for (double& c : f.coeffs) c = coeff(rng);
                double by_rule = 0.0;
                for (int i = 0; i < m; ++i) by_rule += rule.weights[i] * f.eval(rule.nodes[i]);
                const double by_oracle = oracle::integrate_against_density(
                    [&](double z) { return f.eval(z); }, d, 1e-13);
                CHECK(by_rule == doctest::Approx(by_oracle).epsilon(1e-10).scale(1.0));
            }
        }
}

TEST_CASE("inner_product computes exact integrals inside the degree gate") {
    const int d = 3;
    const QuadratureRule rule = theta::quadrature_rule(6, d);
    for (int s = 0; s <= 5; ++s)
        for (int t = 0; t <= 5; ++t) {
            PolyInBasis f{d, std::vector<double>(s + 1, 0.0)};
            PolyInBasis g{d, std::vector<double>(t + 1, 0.0)};
            f.coeffs[s] = 1.0;
            g.coeffs[t] = 1.0;
            CHECK(theta::inner_product(f, g, rule) ==
                  doctest::Approx(s == t ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
        }
    // degree 6 + 6 = 12 > 2*6 - 1: rejected rather than silently inexact
    PolyInBasis high{d, std::vector<double>(7, 0.0)};
    high.coeffs[6] = 1.0;
    CHECK_THROWS_AS(theta::inner_product(high, high, rule), std::invalid_argument);
}

TEST_CASE("PolyInBasis::eval is the plain q-expansion") {
    PolyInBasis f{4, {0.5, -1.0, 2.0, 0.25}};
    for (double z : {-0.9, -0.3, 0.0, 0.42, 1.0}) {
        const double direct = 0.5 * theta::q_eval(0, z, 4) - theta::q_eval(1, z, 4) +
                              2.0 * theta::q_eval(2, z, 4) + 0.25 * theta::q_eval(3, z, 4);
        CHECK(f.eval(z) == doctest::Approx(direct).epsilon(1e-14));
    }
    CHECK(f.degree() == 3);
}

}  // TEST_SUITE
