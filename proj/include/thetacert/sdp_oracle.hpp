#pragma once

#include <Eigen/Dense>

#include "thetacert/graph.hpp"

namespace theta {

// Result of the small-scale bisection oracle for theta(complement of g).
// [lower, upper] brackets the exact value; `upper` always carries a
// re-certified feasible matrix in `feasible_p`. `converged` is false when
// a feasibility probe near the boundary was inconclusive and the bracket
// stayed wider than requested.
struct OracleResult {
    double lower = 0.0;
    double upper = 0.0;
    int bisections = 0;
    bool converged = false;
    double feasible_kappa = 0.0;
    Eigen::MatrixXd feasible_p;
};

// Bisection on kappa over feasibility of the shift SDP (P psd, unit
// diagonal, -1/(kappa-1) on edges), each probe decided by Dykstra's
// alternating projection between the affine constraint set and the PSD
// cone. A probe declares feasibility only when the affine-exact iterate
// passes an explicit PSD check (lambda_min >= -1e-7); it declares
// infeasibility when the inter-set residual stalls above 1e-5 for 500
// consecutive sweeps. Intended for cross-checking small cases only.
// pre: n <= 32, precision >= 1e-4.
OracleResult exact_theta(const RegularGraph& g, double precision = 1e-4,
                         int max_iter = 200);

}  // namespace theta
