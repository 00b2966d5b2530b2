// thetacert: certified two-sided bounds on the Lovasz theta function of the
// complement of a regular graph, plus threshold tables and a small-scale
// SDP cross-check oracle.
//
// Exit codes: 0 success, 1 verification or consistency failure, 2 input error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetacert/certificates.hpp"
#include "thetacert/graph.hpp"
#include "thetacert/ortho_poly.hpp"
#include "thetacert/sdp_oracle.hpp"
#include "thetacert/thresholds.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string();
}

// "A" or "A..B" with A <= B.
std::pair<int, int> parse_int_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int a = std::stoi(text.substr(0, dots));
        const int b = std::stoi(text.substr(dots + 2));
        if (a > b) throw std::invalid_argument("empty range");
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError(what, "expected an integer or A..B range, got '" +
                                             text + "'");
    }
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "expected comma-separated numbers, got '" +
                                                 text + "'");
        }
    }
    if (out.empty())
        throw CLI::ValidationError(what, "expected at least one value");
    return out;
}

std::ostream& open_sink(const std::string& out_path, std::ofstream& file_storage) {
    if (out_path.empty()) return std::cout;
    file_storage.open(out_path, std::ios::binary);
    if (!file_storage)
        throw CLI::ValidationError("--out", "cannot open '" + out_path + "' for writing");
    return file_storage;
}

theta::RegularGraph resolve_graph(const std::string& spec, int n, int d,
                                  std::uint64_t seed, bool have_generator) {
    if (!spec.empty()) {
        if (std::filesystem::exists(spec)) return theta::read_edge_list_file(spec);
        try {
            return theta::named_graph(spec);
        } catch (const std::invalid_argument&) {
            throw theta::EdgeListParseError("'" + spec +
                                            "' is neither a readable file nor a named "
                                            "graph (petersen, complete(q), cycle(q), "
                                            "complete_bipartite(q))");
        }
    }
    if (!have_generator)
        throw CLI::ValidationError("certify",
                                   "pass a graph file / named graph, or --n and --d");
    return theta::generate_config_model(n, d, seed);
}

// ---------------------------------------------------------------- certify --

nlohmann::json certify_document(const theta::RegularGraph& g,
                                const theta::ThetaBounds& bounds) {
    nlohmann::json doc;
    if (bounds.primal) {
        doc = theta::certificate_json(*bounds.primal, *bounds.primal_check);
    } else {
        doc["n"] = g.vertex_count();
        doc["d"] = g.degree();
        for (const char* key : {"gamma_used", "kappa", "r_m", "epsilon_gamma", "c", "a",
                                "lambda_min_P", "verified"})
            doc[key] = nullptr;
        doc["warning"] = "girth below 4: primal certificate unavailable, dual bound only";
    }
    const auto& girth = g.girth();
    doc["girth"] = girth.length ? nlohmann::json(*girth.length) : nlohmann::json();
    doc["lower_bound"] = bounds.lower;
    doc["upper_bound"] = bounds.upper ? nlohmann::json(*bounds.upper) : nlohmann::json();
    doc["dual"] = {{"eta", bounds.dual.eta},
                   {"objective", bounds.dual.objective},
                   {"adjacency_lambda_min", bounds.dual.adjacency_lambda_min},
                   {"lambda_min_D", bounds.dual_check.lambda_min_d},
                   {"trace_error", bounds.dual_check.trace_error},
                   {"verified", bounds.dual_check.pass()}};
    return doc;
}

void print_certify_summary(const theta::RegularGraph& g, const theta::ThetaBounds& b,
                           std::ostream& out) {
    const auto& girth = g.girth();
    out << "graph: n=" << g.vertex_count() << " d=" << g.degree() << " girth="
        << (girth.length ? std::to_string(*girth.length) : std::string("inf")) << "\n";
    out << "lower bound (dual spectral witness): " << fmt_double(b.lower) << "\n";
    out << "  lambda_min(A)=" << fmt_double(b.dual.adjacency_lambda_min)
        << " eta=" << fmt_double(b.dual.eta)
        << " verified=" << (b.dual_check.pass() ? "yes" : "no") << "\n";
    if (!b.primal) {
        out << "upper bound: unavailable (girth below 4), dual bound only\n";
        return;
    }
    const auto& cert = *b.primal;
    out << "upper bound (primal certificate): " << fmt_double(cert.kappa) << "\n";
    out << "  gamma_used=" << cert.gamma_used << " r_m=" << fmt_double(cert.r_m)
        << " epsilon_gamma=" << fmt_double(cert.epsilon_gamma)
        << " lambda_min(P)=" << fmt_double(b.primal_check->lambda_min_p)
        << " verified=" << (b.primal_check->pass() ? "yes" : "no") << "\n";
    if (!cert.a.empty()) {
        out << "  t  a_t  a_t/(t*(2(1-kappa))^-t)   [decay diagnostic]\n";
        for (std::size_t i = 0; i < cert.a.size(); ++i) {
            const int t = static_cast<int>(i) + 2;
            const double ref = t * std::pow(2.0 * (1.0 - cert.kappa), -t);
            out << "  " << t << "  " << fmt_double(cert.a[i]) << "  "
                << fmt_double(cert.a[i] / ref) << "\n";
        }
    }
}

int run_certify(const std::string& spec, int n, int d, std::uint64_t seed,
                bool have_generator, std::optional<int> gamma, double tol,
                const std::string& out_path, const std::string& format) {
    const theta::RegularGraph g = resolve_graph(spec, n, d, seed, have_generator);
    const theta::ThetaBounds bounds = theta::theta_bounds(g, gamma, tol);

    if (!bounds.primal)
        std::cerr << "warning: girth below 4, primal certificate unavailable; "
                     "reporting the dual lower bound only\n";

    const nlohmann::json doc = certify_document(g, bounds);
    if (format == "csv") {
        std::ofstream file;
        std::ostream& sink = open_sink(out_path, file);
        sink << "n,d,girth,gamma_used,lower_bound,upper_bound,lambda_min,verified\n"
             << g.vertex_count() << ',' << g.degree() << ','
             << (g.girth().length ? std::to_string(*g.girth().length) : std::string())
             << ',' << (bounds.primal ? std::to_string(bounds.primal->gamma_used) : std::string())
             << ',' << fmt_double(bounds.lower) << ',' << fmt_opt(bounds.upper) << ','
             << fmt_double(bounds.dual.adjacency_lambda_min) << ','
             << ((bounds.dual_check.pass() &&
                  (!bounds.primal_check || bounds.primal_check->pass()))
                     ? "true"
                     : "false")
             << '\n';
    } else if (!out_path.empty()) {
        std::ofstream file;
        std::ostream& sink = open_sink(out_path, file);
        sink << doc.dump(2) << '\n';
        print_certify_summary(g, bounds, std::cout);
        std::cout << "certificate written to: " << out_path << "\n";
    } else {
        std::cout << doc.dump(2) << '\n';
    }

    const bool verified = bounds.dual_check.pass() &&
                          (!bounds.primal_check || bounds.primal_check->pass());
    return verified ? 0 : kExitVerificationFailure;
}

// ------------------------------------------------------------------ sweep --

struct SweepRow {
    int d = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::optional<int> girth;
    std::optional<int> even_gamma_used;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound;
    std::optional<double> kappa_formula;
    std::optional<double> lambda_min;  // of the adjacency matrix
    double elapsed_ms = 0.0;
    std::string error;
};

SweepRow sweep_one(int d, int n, std::uint64_t seed, std::optional<int> gamma,
                   double tol) {
    SweepRow row;
    row.d = d;
    row.n = n;
    row.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const theta::RegularGraph g = theta::generate_config_model(n, d, seed);
        row.girth = g.girth().length;
        const theta::ThetaBounds bounds = theta::theta_bounds(g, gamma, tol);
        row.lower_bound = bounds.lower;
        row.lambda_min = bounds.dual.adjacency_lambda_min;
        if (bounds.primal) {
            const auto& cert = *bounds.primal;
            row.even_gamma_used = cert.gamma_used;
            row.upper_bound = cert.kappa;
            row.kappa_formula =
                1.0 + cert.d / (2.0 * (1.0 - cert.epsilon_gamma) * std::sqrt(cert.d - 1.0));
            if (!bounds.primal_check->pass()) row.error = "primal verification failed";
        } else {
            row.error = "girth below 4: dual bound only";
        }
        if (!bounds.dual_check.pass()) row.error = "dual verification failed";
    } catch (const std::exception& err) {
        row.error = err.what();
    }
    row.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return row;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, bool timing, std::ostream& out) {
    out << "d,n,seed,girth,even_gamma_used,lower_bound,upper_bound,kappa_formula,"
           "lambda_min,elapsed_ms,error\n";
    for (const auto& r : rows) {
        out << r.d << ',' << r.n << ',' << r.seed << ','
            << (r.girth ? std::to_string(*r.girth) : std::string()) << ','
            << (r.even_gamma_used ? std::to_string(*r.even_gamma_used) : std::string())
            << ',' << fmt_opt(r.lower_bound) << ',' << fmt_opt(r.upper_bound) << ','
            << fmt_opt(r.kappa_formula) << ',' << fmt_opt(r.lambda_min) << ','
            << (timing ? fmt_double(r.elapsed_ms) : std::string("0")) << ',' << r.error
            << '\n';
    }
}

nlohmann::json sweep_json(const std::vector<SweepRow>& rows, bool timing) {
    auto opt = [](const auto& v) {
        return v ? nlohmann::json(*v) : nlohmann::json();
    };
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"d", r.d},
                       {"n", r.n},
                       {"seed", r.seed},
                       {"girth", opt(r.girth)},
                       {"even_gamma_used", opt(r.even_gamma_used)},
                       {"lower_bound", opt(r.lower_bound)},
                       {"upper_bound", opt(r.upper_bound)},
                       {"kappa_formula", opt(r.kappa_formula)},
                       {"lambda_min", opt(r.lambda_min)},
                       {"elapsed_ms", timing ? r.elapsed_ms : 0.0},
                       {"error", r.error}});
    }
    return arr;
}

void print_sweep_quantiles(const std::vector<SweepRow>& rows, std::ostream& out) {
    std::vector<double> gaps;
    for (const auto& r : rows)
        if (r.lower_bound)
            gaps.push_back(*r.lower_bound - (1.0 + r.d / (2.0 * std::sqrt(r.d - 1.0))));
    if (gaps.empty()) {
        out << "no successful rows, no quantile summary\n";
        return;
    }
    std::sort(gaps.begin(), gaps.end());
    auto at = [&](double p) {
        const auto idx = static_cast<std::size_t>(
            std::llround(p * static_cast<double>(gaps.size() - 1)));
        return gaps[idx];
    };
    out << "lower_bound minus tree bound 1+d/(2 sqrt(d-1)), quantiles: min="
        << fmt_double(at(0.0)) << " p25=" << fmt_double(at(0.25))
        << " median=" << fmt_double(at(0.5)) << " p75=" << fmt_double(at(0.75))
        << " max=" << fmt_double(at(1.0)) << "\n";
}

int run_sweep(const std::string& d_range, int n, int seeds, std::uint64_t seed_base,
              std::optional<int> gamma, double tol, bool timing,
              const std::string& out_path, const std::string& format) {
    const auto [d_lo, d_hi] = parse_int_range(d_range, "--d");
    if (seeds < 1) throw CLI::ValidationError("--seeds", "need at least one seed");

    long long dense_limit = 2500;
    if (const char* env = std::getenv("THETA_DENSE_LIMIT")) dense_limit = std::atoll(env);
    if (n > dense_limit)
        throw CLI::ValidationError(
            "--n", "n exceeds the dense limit " + std::to_string(dense_limit) +
                       " (set THETA_DENSE_LIMIT to raise it)");

    struct Job {
        int d;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (int d = d_lo; d <= d_hi; ++d)
        for (int s = 0; s < seeds; ++s) jobs.push_back({d, seed_base + s});

    std::vector<SweepRow> rows(jobs.size());
    const unsigned workers = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()),
        static_cast<unsigned>(jobs.size()));
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            rows[i] = sweep_one(jobs[i].d, n, jobs[i].seed, gamma, tol);
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    std::ofstream file;
    std::ostream& sink = open_sink(out_path, file);
    if (format == "json")
        sink << sweep_json(rows, timing).dump(2) << '\n';
    else
        write_sweep_csv(rows, timing, sink);
    print_sweep_quantiles(rows, out_path.empty() ? std::cerr : std::cout);
    return 0;
}

// --------------------------------------------------------- oracle-compare --

int run_oracle_compare(const std::string& graphs, double precision,
                       const std::string& out_path, const std::string& format) {
    std::vector<std::string> names;
    std::stringstream ss(graphs);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) names.push_back(item);

    struct Row {
        std::string name;
        int n;
        double oracle_lo, oracle_hi, dual_lower;
        std::optional<double> primal_upper;
        bool consistent;
    };
    std::vector<Row> rows;
    bool all_consistent = true;
    for (const auto& name : names) {
        const theta::RegularGraph g = theta::named_graph(name);
        const theta::OracleResult oracle = theta::exact_theta(g, precision);
        const theta::ThetaBounds bounds = theta::theta_bounds(g);
        Row row{name, g.vertex_count(), oracle.lower, oracle.upper, bounds.lower,
                bounds.upper, true};
        if (row.dual_lower > oracle.upper + precision) row.consistent = false;
        if (row.primal_upper && oracle.lower > *row.primal_upper + precision)
            row.consistent = false;
        all_consistent = all_consistent && row.consistent;
        rows.push_back(std::move(row));
    }

    std::ofstream file;
    std::ostream& sink = open_sink(out_path, file);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"graph", r.name},
                           {"n", r.n},
                           {"oracle_lo", r.oracle_lo},
                           {"oracle_hi", r.oracle_hi},
                           {"dual_lower", r.dual_lower},
                           {"primal_upper", r.primal_upper ? nlohmann::json(*r.primal_upper)
                                                           : nlohmann::json()},
                           {"consistent", r.consistent}});
        sink << arr.dump(2) << '\n';
    } else {
        sink << "graph,n,oracle_lo,oracle_hi,dual_lower,primal_upper,consistent\n";
        for (const auto& r : rows)
            sink << r.name << ',' << r.n << ',' << fmt_double(r.oracle_lo) << ','
                 << fmt_double(r.oracle_hi) << ',' << fmt_double(r.dual_lower) << ','
                 << fmt_opt(r.primal_upper) << ',' << (r.consistent ? "true" : "false")
                 << '\n';
    }
    return all_consistent ? 0 : kExitVerificationFailure;
}

// ------------------------------------------------------------- thresholds --

int run_thresholds(const std::string& k_range, const std::string& d_range,
                   const std::string& tau_list, const std::string& out_path,
                   const std::string& format) {
    const auto [k_lo, k_hi] = parse_int_range(k_range, "--k");
    const auto [d_lo, d_hi] = parse_int_range(d_range, "--d");
    const std::vector<double> taus = parse_double_list(tau_list, "--tau");
    if (k_lo < 2) throw CLI::ValidationError("--k", "color counts start at 2");
    if (d_lo < 2) throw CLI::ValidationError("--d", "degrees start at 2");

    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream csv;
    csv << "d,k,tau,effective_k,d_ks_regular,d_ks_poisson,d_first,"
           "refutation_possible_whp,refutation_impossible_whp,condensation_scale\n";
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int k = k_lo; k <= k_hi; ++k) {
            for (double tau : taus) {
                const bool defined = tau < 1.0;
                const double d_first = theta::first_moment_coloring(k);
                nlohmann::json obj = {{"d", d},      {"k", k},
                                      {"tau", tau},  {"d_first", d_first},
                                      {"effective_k", nullptr}, {"d_ks_regular", nullptr},
                                      {"d_ks_poisson", nullptr}, {"refutation_possible_whp", nullptr},
                                      {"refutation_impossible_whp", nullptr}, {"condensation_scale", nullptr}};
                csv << d << ',' << k << ',' << fmt_double(tau) << ',';
                if (defined) {
                    const double eff = theta::effective_colors(k, tau);
                    const double ks_reg = theta::kesten_stigum_regular(k, tau);
                    const double ks_poi = theta::kesten_stigum_poisson(k, tau);
                    const bool possible = theta::sos2_refutation_possible(d, k, tau);
                    const bool impossible = theta::sos2_refutation_impossible(d, k, tau);
                    const double cond = theta::condensation_scale(k, tau);
                    obj["effective_k"] = eff;
                    obj["d_ks_regular"] = ks_reg;
                    obj["d_ks_poisson"] = ks_poi;
                    obj["refutation_possible_whp"] = possible;
                    obj["refutation_impossible_whp"] = impossible;
                    obj["condensation_scale"] = cond;
                    csv << fmt_double(eff) << ',' << fmt_double(ks_reg) << ','
                        << fmt_double(ks_poi) << ',' << fmt_double(d_first) << ','
                        << (possible ? "true" : "false") << ','
                        << (impossible ? "true" : "false") << ',' << fmt_double(cond);
                } else {
                    // tau = 1 collapses the reparametrization; only the
                    // tau-free column survives
                    csv << "undefined,undefined,undefined," << fmt_double(d_first)
                        << ",undefined,undefined,undefined";
                }
                csv << '\n';
                arr.push_back(std::move(obj));
            }
        }
    }

    std::ofstream file;
    std::ostream& sink = open_sink(out_path, file);
    if (format == "json")
        sink << arr.dump(2) << '\n';
    else
        sink << csv.str();
    return 0;
}

// --------------------------------------------------------------- generate --

int run_generate(int n, int d, std::uint64_t seed, int max_resamples,
                 const std::string& out_path) {
    const theta::RegularGraph g = theta::generate_config_model(n, d, seed, max_resamples);
    if (out_path.empty()) {
        theta::write_edge_list(g, std::cout);
    } else {
        theta::write_edge_list_file(g, out_path);
        const auto& girth = g.girth();
        std::cout << "wrote n=" << n << " d=" << d << " seed=" << seed << " girth="
                  << (girth.length ? std::to_string(*girth.length) : std::string("inf"))
                  << " to " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Lovasz theta bounds for regular graphs"};
    app.require_subcommand(1);

    std::string graph_spec, out_path, d_range = "3", k_range = "3..8", tau_list = "0";
    std::string certify_format = "json", table_format = "csv";
    int n = 0, d = 0, seeds = 1, max_resamples = 10000, gamma_flag = 0;
    std::uint64_t seed = 0;
    double tol = -1.0, precision = 1e-4;
    bool timing = false;

    auto* certify = app.add_subcommand(
        "certify", "build and verify both bounds for one graph");
    certify->add_option("graph", graph_spec,
                        "edge-list file or named graph (petersen, complete(q), "
                        "cycle(q), complete_bipartite(q))");
    certify->add_option("--n", n, "vertex count for a generated graph");
    certify->add_option("--d", d, "degree for a generated graph");
    certify->add_option("--seed", seed, "generator seed")->default_val(0);
    certify->add_option("--gamma", gamma_flag,
                        "cap the even polynomial budget (default: girth)");
    certify->add_option("--tol", tol, "PSD tolerance (default: scaled 1e-8 rule)")
        ->envname("THETA_TOL");
    certify->add_option("--out", out_path, "write the certificate document here");
    certify->add_option("--format", certify_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");

    auto* sweep = app.add_subcommand(
        "sweep", "bounds for random regular graphs over a degree range");
    sweep->add_option("--d", d_range, "degree or range, e.g. 3..6")->required();
    sweep->add_option("--n", n, "vertex count")->required();
    sweep->add_option("--seeds", seeds, "number of seeds per degree")->default_val(1);
    sweep->add_option("--seed", seed, "first seed value")->default_val(0);
    sweep->add_option("--gamma", gamma_flag,
                      "cap the even polynomial budget (default: girth)");
    sweep->add_option("--tol", tol, "PSD tolerance (default: scaled 1e-8 rule)")
        ->envname("THETA_TOL");
    sweep->add_flag("--timing", timing,
                    "record wall time per row (off keeps re-runs byte-identical)");
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("csv");

    auto* oracle = app.add_subcommand(
        "oracle-compare", "cross-check certificates against the bisection oracle");
    std::string graphs = "cycle(5),petersen,complete(4),complete_bipartite(3)";
    oracle->add_option("--graphs", graphs, "comma-separated named graphs");
    oracle->add_option("--precision", precision, "oracle interval width, >= 1e-4")
        ->default_val(1e-4);
    oracle->add_option("--out", out_path, "output file (default stdout)");
    oracle->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("csv");

    auto* thresholds = app.add_subcommand(
        "thresholds", "detection/refutation threshold table over (d, k, tau)");
    thresholds->add_option("--k", k_range, "color count or range, e.g. 2..10")
        ->default_val("3..8");
    thresholds->add_option("--d", d_range, "degree or range")->default_val("3..8");
    thresholds->add_option("--tau", tau_list, "comma-separated affinities, tau=1 allowed")
        ->default_val("0");
    thresholds->add_option("--out", out_path, "output file (default stdout)");
    thresholds->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("csv");

    auto* generate = app.add_subcommand(
        "generate", "write a random regular graph as an edge list");
    generate->add_option("--n", n, "vertex count")->required();
    generate->add_option("--d", d, "degree")->required();
    generate->add_option("--seed", seed, "generator seed")->default_val(0);
    generate->add_option("--max-resamples", max_resamples,
                         "configuration-model resample budget")
        ->default_val(10000);
    generate->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    const std::optional<int> gamma =
        gamma_flag > 0 ? std::optional<int>(gamma_flag) : std::nullopt;

    try {
        if (certify->parsed())
            return run_certify(graph_spec, n, d, seed,
                               certify->count("--n") && certify->count("--d"), gamma,
                               tol, out_path, certify_format);
        if (sweep->parsed())
            return run_sweep(d_range, n, seeds, seed, gamma, tol, timing, out_path,
                             table_format);
        if (oracle->parsed()) return run_oracle_compare(graphs, precision, out_path, table_format);
        if (thresholds->parsed())
            return run_thresholds(k_range, d_range, tau_list, out_path, table_format);
        if (generate->parsed())
            return run_generate(n, d, seed, max_resamples, out_path);
    } catch (const theta::EdgeListParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const theta::ResampleLimitError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitVerificationFailure;
    }
    return 0;
}
