#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "thetacert/graph.hpp"
#include "thetacert/spectral.hpp"

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd random_symmetric(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = gauss(rng);
    return m;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("closed-form spectra of the named graphs") {
    const auto k4 = theta::symmetric_eigenvalues(theta::complete_graph(4).adjacency());
    REQUIRE(k4.eigenvalues.size() == 4);
    CHECK(k4.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i)
        CHECK(k4.eigenvalues[i] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k4.lambda_min == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k4.lambda_2 == doctest::Approx(-1.0).epsilon(1e-12));

    // Petersen: {3, 1 x5, -2 x4}
    const auto pet = theta::symmetric_eigenvalues(theta::petersen_graph().adjacency());
    CHECK(pet.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    for (int i = 1; i <= 5; ++i) CHECK(pet.eigenvalues[i] == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 6; i <= 9; ++i) CHECK(pet.eigenvalues[i] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(pet.lambda_min == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(pet.lambda_2 == doctest::Approx(1.0).epsilon(1e-12));

    // C_5: {2, 2cos(2pi/5) x2, 2cos(4pi/5) x2}
    const auto c5 = theta::symmetric_eigenvalues(theta::cycle_graph(5).adjacency());
    const double inner = 2.0 * std::cos(2.0 * std::numbers::pi / 5.0);
    const double outer = 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
    CHECK(c5.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c5.eigenvalues[1] == doctest::Approx(inner).epsilon(1e-12));
    CHECK(c5.eigenvalues[2] == doctest::Approx(inner).epsilon(1e-12));
    CHECK(c5.lambda_min == doctest::Approx(outer).epsilon(1e-12));

    const auto zero = theta::symmetric_eigenvalues(MatrixXd::Zero(5, 5));
    for (double v : zero.eigenvalues) CHECK(v == 0.0);
}

TEST_CASE("eigenvalues are descending and sum to the trace") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixXd m = random_symmetric(6 + trial % 5, rng, 2.0);
        const auto s = theta::symmetric_eigenvalues(m);
        double sum = 0.0;
        for (size_t i = 0; i + 1 < s.eigenvalues.size(); ++i)
            CHECK(s.eigenvalues[i] >= s.eigenvalues[i + 1]);
        for (double v : s.eigenvalues) sum += v;
        CHECK(sum == doctest::Approx(m.trace()).epsilon(1e-8));
        CHECK(s.lambda_min == s.eigenvalues.back());
        CHECK(s.lambda_2 == s.eigenvalues[1]);
    }
}

TEST_CASE("regular graphs have top eigenvalue d with the all-ones eigenvector") {
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        const theta::RegularGraph g = theta::generate_config_model(50, 4, seed);
        const auto s = theta::symmetric_eigenvalues(g.adjacency());
        CHECK(s.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-9));
        const VectorXd ones = VectorXd::Ones(50);
        CHECK((g.adjacency() * ones - 4.0 * ones).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("asymmetric input is rejected; roundoff asymmetry is symmetrized") {
    MatrixXd m = MatrixXd::Zero(3, 3);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(theta::symmetric_eigenvalues(m), std::invalid_argument);
    CHECK_THROWS_AS(theta::symmetric_eigenvalues(MatrixXd::Zero(2, 3)), std::invalid_argument);

    MatrixXd almost = MatrixXd::Identity(3, 3);
    almost(0, 1) = 1e-12;  // below the 1e-10 gate
    CHECK_NOTHROW(theta::symmetric_eigenvalues(almost));
}

TEST_CASE("is_psd explicit verdicts") {
    const auto id = theta::is_psd(MatrixXd::Identity(3, 3), 0.0);
    CHECK(id.psd);
    CHECK(id.lambda_min == doctest::Approx(1.0).epsilon(1e-14));

    MatrixXd neg = MatrixXd::Identity(2, 2);
    neg(1, 1) = -1e-6;
    const auto r = theta::is_psd(neg, 1e-9);
    CHECK_FALSE(r.psd);
    CHECK(r.lambda_min == doctest::Approx(-1e-6).epsilon(1e-9));

    // rank-one projector: mathematically PSD, accepted even at tol = 0
    const MatrixXd j4 = MatrixXd::Ones(4, 4) / 4.0;
    CHECK(theta::is_psd(j4, 0.0).psd);
    CHECK(theta::is_psd(j4, 0.0).lambda_min ==
          doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
}

TEST_CASE("is_psd default tolerance scales with the spectral radius") {
    // tol = 1e-8 * max(1, |lambda|_max): a -50 eigenvalue hides under a 1e10 one
    MatrixXd big = MatrixXd::Zero(2, 2);
    big(0, 0) = 1e10;
    big(1, 1) = -50.0;
    const auto r = theta::is_psd(big);
    CHECK(r.tol == doctest::Approx(100.0));
    CHECK(r.psd);
    // and the same -50 is caught at unit scale
    MatrixXd small = big;
    small(0, 0) = 1.0;
    CHECK_FALSE(theta::is_psd(small).psd);
}

TEST_CASE("psd_project clamps negative eigenvalues") {
    MatrixXd m = MatrixXd::Zero(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = -3.0;
    const MatrixXd p = theta::psd_project(m);
    CHECK(p(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p(1, 1) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixXd x = random_symmetric(7, rng);
        const MatrixXd proj = theta::psd_project(x);
        CHECK(theta::is_psd(proj, 1e-9).psd);
        // idempotent on the already-PSD result
        CHECK((theta::psd_project(proj) - proj).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("bordered PSD reduction: explicit cases") {
    const MatrixXd id = MatrixXd::Identity(3, 3);
    CHECK(theta::bordered_psd_equivalent(1.0, VectorXd::Zero(3), id));
    VectorXd e1 = VectorXd::Zero(3);
    e1(0) = 1.0;
    CHECK(theta::bordered_psd_equivalent(1.0, e1, id));            // projector boundary
    CHECK_FALSE(theta::bordered_psd_equivalent(1.0, std::sqrt(2.0) * e1, id));
    CHECK_THROWS_AS(theta::bordered_psd_reduction(0.0, e1, id), std::invalid_argument);
    CHECK_THROWS_AS(theta::bordered_psd_reduction(-1.0, e1, id), std::invalid_argument);
    CHECK_THROWS_AS(theta::bordered_psd_reduction(1.0, VectorXd::Zero(2), id),
                    std::invalid_argument);
}

TEST_CASE("bordered PSD reduction matches the assembled matrix on 200 random instances") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    int psd_seen = 0, non_psd_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 19);  // dims <= 20
        const double b = unif(rng);
        MatrixXd x = random_symmetric(n, rng);
        if (trial % 2 == 0) x = theta::psd_project(x) + 0.5 * MatrixXd::Identity(n, n);
        VectorXd v(n);
        // a small border keeps even (PSD-lifted) trials on the PSD side:
        // v^T x^{-1} v <= n 3sigma^2 / 0.5 < 0.2 <= b
        std::normal_distribution<double> gauss(0.0, trial % 2 == 0 ? 0.02 : 0.5);
        for (int i = 0; i < n; ++i) v(i) = gauss(rng);

        MatrixXd bordered(n + 1, n + 1);
        bordered(0, 0) = b;
        bordered.row(0).tail(n) = v.transpose();
        bordered.col(0).tail(n) = v;
        bordered.bottomRightCorner(n, n) = x;

        const bool direct = theta::is_psd(bordered, 1e-9).psd;
        const bool reduced = theta::bordered_psd_equivalent(b, v, x);
        CHECK(direct == reduced);
        (direct ? psd_seen : non_psd_seen)++;
    }
    // the sample must exercise both verdicts to mean anything
    CHECK(psd_seen > 10);
    CHECK(non_psd_seen > 10);
}

TEST_CASE("one-dimensional input") {
    MatrixXd one(1, 1);
    one(0, 0) = 2.5;
    const auto s = theta::symmetric_eigenvalues(one);
    CHECK(s.lambda_min == 2.5);
    CHECK(s.lambda_2 == 2.5);
    CHECK(theta::is_psd(one, 0.0).psd);
}

}  // TEST_SUITE
