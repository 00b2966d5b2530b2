#include "thetacert/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thetacert/ortho_poly.hpp"
#include "thetacert/spectral.hpp"

namespace theta {

std::vector<IntMatrix> nonbacktracking_powers(const RegularGraph& g, int max_t) {
    if (max_t < 0) throw std::invalid_argument("walk length must be >= 0");
    const int n = g.vertex_count();
    const auto d = static_cast<std::int64_t>(g.degree());

    std::vector<IntMatrix> powers;
    powers.reserve(max_t + 1);
    powers.push_back(IntMatrix::Identity(n, n));
    if (max_t == 0) return powers;

    IntMatrix adj = IntMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        adj(u, v) = 1;
        adj(v, u) = 1;
    }
    powers.push_back(std::move(adj));

    for (int t = 2; t <= max_t; ++t) {
        const IntMatrix& prev = powers[t - 1];
        const IntMatrix& prev2 = powers[t - 2];
        IntMatrix next = IntMatrix::Zero(n, n);
        // (A * prev) row by row through neighbor lists: O(n^2 d), no GEMM.
        for (int i = 0; i < n; ++i)
            for (int k : g.neighbors(i)) next.row(i) += prev.row(k);
        next -= (t == 2 ? d : d - 1) * prev2;
        powers.push_back(std::move(next));
    }
    return powers;
}

PrimalCertificate build_primal_certificate(const RegularGraph& g,
                                           std::optional<int> gamma_override) {
    const int d = g.degree();
    const int n = g.vertex_count();
    if (d < 2) throw PrimalUnavailableError("primal certificate needs degree >= 2");

    const GirthReport& girth = g.girth();
    if (!girth.length && !gamma_override)
        throw PrimalUnavailableError("acyclic graph: an explicit gamma is required");
    int budget = girth.length ? *girth.length : *gamma_override;
    if (gamma_override) budget = std::min(budget, *gamma_override);
    const int gamma = budget - (budget % 2);
    if (gamma < 4) {
        std::string msg = "effective gamma " + std::to_string(gamma) + " < 4 (girth " +
                          (girth.length ? std::to_string(*girth.length) : "inf");
        if (gamma_override) msg += ", override " + std::to_string(*gamma_override);
        throw GirthTooSmallError(msg + ")");
    }

    const int m = gamma / 2;
    const QuadratureRule roots = quadrature_rule(m, d);
    const double r_m = roots.nodes.back();  // most negative root of q_m
    const double kappa = 1.0 + d / (2.0 * (-r_m) * std::sqrt(d - 1.0));

    // s(z) = prod_{j<m} (z - r_j)^2 / zeta, evaluated pointwise on a rule
    // exact through degree 2*gamma - 3; that covers <q_t, s> for every
    // t <= gamma - 2 and makes zeta the exact normalizer, so c_0 comes out
    // as exactly 1.
    const QuadratureRule rule = quadrature_rule(gamma - 1, d);
    std::vector<double> s_at(rule.m);
    double zeta = 0.0;
    for (int i = 0; i < rule.m; ++i) {
        double prod = 1.0;
        for (int j = 0; j + 1 < m; ++j) {
            const double diff = rule.nodes[i] - roots.nodes[j];
            prod *= diff * diff;
        }
        s_at[i] = prod;
        zeta += rule.weights[i] * prod;
    }
    for (double& v : s_at) v /= zeta;

    PrimalCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.gamma_used = gamma;
    cert.kappa = kappa;
    cert.r_m = r_m;
    cert.epsilon_gamma = r_m + 1.0;

    cert.c.resize(gamma - 1);
    for (int t = 0; t <= gamma - 2; ++t) {
        double acc = 0.0;
        for (int i = 0; i < rule.m; ++i)
            acc += rule.weights[i] * q_eval(t, rule.nodes[i], d) * s_at[i];
        cert.c[t] = acc;
    }

    cert.a.resize(gamma - 3);
    for (int t = 2; t <= gamma - 2; ++t)
        cert.a[t - 2] = cert.c[t] / std::sqrt(d * std::pow(d - 1.0, t - 1));

    // The degree-one coefficient is carried by kappa itself: the q-basis
    // value c_1 = <q_1, s> collapses to q_1(r_m) = -sqrt(d)/(kappa - 1), so
    // assembling the edge weight from kappa keeps edge entries exact.
    const auto powers = nonbacktracking_powers(g, gamma - 2);
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
    p -= g.adjacency() / (kappa - 1.0);
    for (int t = 2; t <= gamma - 2; ++t)
        p += cert.a[t - 2] * powers[t].cast<double>();
    cert.P = std::move(p);
    return cert;
}

PrimalVerification verify_primal(const RegularGraph& g, const PrimalCertificate& cert,
                                 double tol) {
    const int n = g.vertex_count();
    if (cert.P.rows() != n || cert.P.cols() != n)
        throw std::invalid_argument("certificate matrix does not match the graph size");
    if (!(cert.kappa > 1.0)) throw std::invalid_argument("kappa must exceed 1");

    PrimalVerification out;
    for (int i = 0; i < n; ++i)
        out.max_diag_error = std::max(out.max_diag_error, std::abs(cert.P(i, i) - 1.0));
    const double target = -1.0 / (cert.kappa - 1.0);
    for (const auto& [u, v] : g.edges()) {
        out.max_edge_error = std::max(out.max_edge_error, std::abs(cert.P(u, v) - target));
        out.max_edge_error = std::max(out.max_edge_error, std::abs(cert.P(v, u) - target));
    }
    out.diagonal_ok = out.max_diag_error <= 1e-12;
    out.edges_ok = out.max_edge_error <= 1e-12;

    const PsdReport psd = is_psd(cert.P, tol);
    out.psd_ok = psd.psd;
    out.lambda_min_p = psd.lambda_min;
    out.tol = psd.tol;
    return out;
}

DualWitness build_dual_witness(const RegularGraph& g) {
    const int n = g.vertex_count();
    DualWitness w;
    w.b = Eigen::VectorXd::Constant(n, 1.0 / n);
    if (g.edge_count() == 0) {
        w.objective = 1.0;
        return w;
    }
    const SpectrumSummary spectrum = symmetric_eigenvalues(g.adjacency());
    w.adjacency_lambda_min = spectrum.lambda_min;  // < 0 once an edge exists
    w.eta = 1.0 / (n * -spectrum.lambda_min);
    w.objective = 1.0 + g.degree() / -spectrum.lambda_min;
    return w;
}

DualVerification verify_dual(const RegularGraph& g, const DualWitness& w, double tol) {
    const int n = g.vertex_count();
    if (w.b.size() != n)
        throw std::invalid_argument("witness diagonal does not match the graph size");

    Eigen::MatrixXd dmat = w.eta * g.adjacency();
    dmat.diagonal() = w.b;

    DualVerification out;
    out.trace_error = std::abs(dmat.trace() - 1.0);
    out.trace_ok = out.trace_error <= 1e-12;

    const PsdReport psd = is_psd(dmat, tol);
    out.psd_ok = psd.psd;
    out.lambda_min_d = psd.lambda_min;
    out.tol = psd.tol;

    out.objective = w.eta * 2.0 * g.edge_count() + w.b.sum();
    return out;
}

Pseudoexpectation lift_pseudoexpectation(const Eigen::MatrixXd& p, double k) {
    if (p.rows() != p.cols()) throw std::invalid_argument("P must be square");
    if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("P must be symmetric");
    if (!(k > 1.0) || !std::isfinite(k))
        throw std::invalid_argument("color count k must be finite and exceed 1");

    const int n = static_cast<int>(p.rows());
    const double rounded = std::round(k);
    const int q = std::abs(k - rounded) < 1e-9 ? static_cast<int>(rounded)
                                               : static_cast<int>(std::ceil(k));
    const int dim = n * q + 1;

    Pseudoexpectation out;
    out.k = k;
    out.block_size = q;
    out.ell = Eigen::VectorXd::Constant(n * q, 1.0 / k);

    Eigen::MatrixXd mom(dim, dim);
    mom(0, 0) = 1.0;
    mom.row(0).tail(n * q).setConstant(1.0 / k);
    mom.col(0).tail(n * q).setConstant(1.0 / k);
    const double kk = 1.0 / (k * k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double base = (p(i, j) - 1.0 / k) / (k - 1.0);
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                    mom(1 + i * q + a, 1 + j * q + b) =
                        base * ((a == b ? 1.0 : 0.0) - 1.0 / q) + kk;
        }
    }
    out.moment_matrix = std::move(mom);
    return out;
}

ThetaBounds theta_bounds(const RegularGraph& g, std::optional<int> gamma_override,
                         double tol) {
    ThetaBounds out;
    out.dual = build_dual_witness(g);
    out.dual_check = verify_dual(g, out.dual, tol);
    out.lower = out.dual.objective;
    try {
        out.primal = build_primal_certificate(g, gamma_override);
        out.primal_check = verify_primal(g, *out.primal, tol);
        out.upper = out.primal->kappa;
    } catch (const PrimalUnavailableError&) {
        // dual bound only; callers see the empty upper
    }
    if (out.upper && out.lower > *out.upper + 1e-8)
        throw std::runtime_error("bounds crossed: lower " + std::to_string(out.lower) +
                                 " > upper " + std::to_string(*out.upper));
    return out;
}

nlohmann::json certificate_json(const PrimalCertificate& cert,
                                const PrimalVerification& verification) {
    nlohmann::json j;
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["gamma_used"] = cert.gamma_used;
    j["kappa"] = cert.kappa;
    j["r_m"] = cert.r_m;
    j["epsilon_gamma"] = cert.epsilon_gamma;
    j["c"] = cert.c;
    j["a"] = cert.a;
    j["lambda_min_P"] = verification.lambda_min_p;
    j["verified"] = verification.pass();
    if (cert.n <= 64) {
        std::vector<double> flat;
        flat.reserve(static_cast<std::size_t>(cert.n) * cert.n);
        for (int i = 0; i < cert.n; ++i)
            for (int jj = 0; jj < cert.n; ++jj) flat.push_back(cert.P(i, jj));
        j["P"] = flat;
    }
    return j;
}

}  // namespace theta
