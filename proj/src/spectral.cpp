#include "thetacert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace theta {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw std::invalid_argument("matrix is not symmetric: max |M - M^T| = " +
                                    std::to_string(asym));
    return 0.5 * (m + m.transpose());
}

}  // namespace

SpectrumSummary symmetric_eigenvalues(const Eigen::MatrixXd& m) {
    const Eigen::MatrixXd sym = symmetrized(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue iteration failed to converge");

    SpectrumSummary out;
    const auto& vals = solver.eigenvalues();  // ascending
    out.eigenvalues.assign(vals.data(), vals.data() + vals.size());
    std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
    out.lambda_min = out.eigenvalues.back();
    out.lambda_2 = out.eigenvalues.size() > 1 ? out.eigenvalues[1] : out.eigenvalues[0];
    return out;
}

PsdReport is_psd(const Eigen::MatrixXd& m, double tol) {
    const SpectrumSummary spectrum = symmetric_eigenvalues(m);
    const double abs_max =
        std::max(std::abs(spectrum.eigenvalues.front()), std::abs(spectrum.lambda_min));
    if (tol < 0) tol = 1e-8 * std::max(1.0, abs_max);
    // The verdict concerns the true eigenvalue, which the solver only gives
    // up to roundoff of order dim * eps * |lambda|_max; without this slack a
    // rank-deficient PSD matrix would fail at tol = 0.
    const double slack = static_cast<double>(m.rows()) *
                         std::numeric_limits<double>::epsilon() * std::max(1.0, abs_max);
    return {spectrum.lambda_min >= -tol - slack, spectrum.lambda_min, tol};
}

Eigen::MatrixXd psd_project(const Eigen::MatrixXd& m) {
    const Eigen::MatrixXd sym = symmetrized(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue iteration failed to converge");
    const Eigen::VectorXd clamped = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * clamped.asDiagonal() * solver.eigenvectors().transpose();
}

Eigen::MatrixXd bordered_psd_reduction(double b, const Eigen::VectorXd& v,
                                       const Eigen::MatrixXd& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("matrix must be square");
    if (v.size() != x.rows())
        throw std::invalid_argument("border length does not match matrix size");
    if (b <= 0) throw std::invalid_argument("bordering scalar must be positive");
    return x - (v * v.transpose()) / b;
}

bool bordered_psd_equivalent(double b, const Eigen::VectorXd& v, const Eigen::MatrixXd& x) {
    return is_psd(bordered_psd_reduction(b, v, x), 1e-9).psd;
}

}  // namespace theta
