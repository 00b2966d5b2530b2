#pragma once

#include <Eigen/Dense>
#include <vector>

namespace theta {

// Eigenvalues of a symmetric matrix, sorted descending. `lambda_2` is the
// second-largest eigenvalue (equal to the largest when the matrix is 1x1).
struct SpectrumSummary {
    std::vector<double> eigenvalues;
    double lambda_min = 0.0;
    double lambda_2 = 0.0;
};

// Rejects inputs with max |M - M^T| entry above 1e-10, then works on the
// symmetrized (M + M^T)/2.
SpectrumSummary symmetric_eigenvalues(const Eigen::MatrixXd& m);

struct PsdReport {
    bool psd = false;
    double lambda_min = 0.0;
    double tol = 0.0;  // tolerance actually applied
};

// lambda_min >= -tol, judged with an extra dim * eps * max(1, |lambda|_max)
// slack for eigensolver roundoff so that tol = 0 accepts mathematically PSD
// matrices. Passing tol < 0 selects the default 1e-8 * max(1, |lambda|_max),
// the tolerance rule every verifier shares.
PsdReport is_psd(const Eigen::MatrixXd& m, double tol = -1.0);

// Nearest PSD matrix in Frobenius norm: eigenvalues clamped at zero.
Eigen::MatrixXd psd_project(const Eigen::MatrixXd& m);

// Schur-complement reduction for one bordering row: with b > 0,
// [[b, v^T], [v, X]] is PSD iff X - v v^T / b is PSD. Returns that reduced
// matrix; callers test it with is_psd.
Eigen::MatrixXd bordered_psd_reduction(double b, const Eigen::VectorXd& v,
                                       const Eigen::MatrixXd& x);

// True iff the bordered matrix [[b, v^T], [v, X]] is PSD, decided on the
// reduced matrix at tolerance 1e-9.
bool bordered_psd_equivalent(double b, const Eigen::VectorXd& v, const Eigen::MatrixXd& x);

}  // namespace theta
