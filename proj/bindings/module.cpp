#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "thetacert/certificates.hpp"
#include "thetacert/graph.hpp"
#include "thetacert/ortho_poly.hpp"
#include "thetacert/sdp_oracle.hpp"
#include "thetacert/spectral.hpp"
#include "thetacert/thresholds.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "certified Lovasz theta bounds for regular graphs";

    py::register_exception<theta::EdgeListParseError>(m, "EdgeListParseError",
                                                      PyExc_ValueError);
    py::register_exception<theta::ResampleLimitError>(m, "ResampleLimitError",
                                                      PyExc_RuntimeError);
    py::register_exception<theta::PrimalUnavailableError>(m, "PrimalUnavailableError",
                                                          PyExc_RuntimeError);

    py::class_<theta::GirthReport>(m, "GirthReport")
        .def_readonly("length", &theta::GirthReport::length)
        .def_readonly("cycle", &theta::GirthReport::cycle)
        .def("__repr__", [](const theta::GirthReport& r) {
            return r.length ? "GirthReport(length=" + std::to_string(*r.length) + ")"
                            : std::string("GirthReport(acyclic)");
        });

    py::class_<theta::RegularGraph>(m, "RegularGraph")
        .def(py::init<int, int, std::vector<theta::Edge>>(), py::arg("n"),
             py::arg("degree"), py::arg("edges"))
        .def_static("from_edges", &theta::RegularGraph::from_edges, py::arg("n"),
                    py::arg("edges"))
        .def_property_readonly("n", &theta::RegularGraph::vertex_count)
        .def_property_readonly("d", &theta::RegularGraph::degree)
        .def_property_readonly("edge_count", &theta::RegularGraph::edge_count)
        .def("edges", &theta::RegularGraph::edges)
        .def("neighbors", &theta::RegularGraph::neighbors, py::arg("v"))
        .def("adjacency", &theta::RegularGraph::adjacency,
             py::return_value_policy::copy)
        .def("girth", &theta::RegularGraph::girth, py::return_value_policy::copy)
        .def("has_edge", &theta::RegularGraph::has_edge, py::arg("u"), py::arg("v"))
        .def("__repr__", [](const theta::RegularGraph& g) {
            return "RegularGraph(n=" + std::to_string(g.vertex_count()) +
                   ", d=" + std::to_string(g.degree()) + ")";
        });

    m.def("compute_girth", &theta::compute_girth, py::arg("g"));
    m.def("generate_config_model", &theta::generate_config_model, py::arg("n"),
          py::arg("degree"), py::arg("seed"), py::arg("max_resamples") = 10000);
    m.def("generate_bipartite_regular", &theta::generate_bipartite_regular, py::arg("n"),
          py::arg("degree"), py::arg("seed"));
    m.def("petersen_graph", &theta::petersen_graph);
    m.def("complete_graph", &theta::complete_graph, py::arg("q"));
    m.def("cycle_graph", &theta::cycle_graph, py::arg("q"));
    m.def("complete_bipartite_graph", &theta::complete_bipartite_graph, py::arg("q"));
    m.def("named_graph", &theta::named_graph, py::arg("spec"));
    m.def("read_edge_list_file", &theta::read_edge_list_file, py::arg("path"));
    m.def("write_edge_list_file", &theta::write_edge_list_file, py::arg("g"),
          py::arg("path"));

    py::class_<theta::SpectrumSummary>(m, "SpectrumSummary")
        .def_readonly("eigenvalues", &theta::SpectrumSummary::eigenvalues)
        .def_readonly("lambda_min", &theta::SpectrumSummary::lambda_min)
        .def_readonly("lambda_2", &theta::SpectrumSummary::lambda_2);
    m.def("symmetric_eigenvalues", &theta::symmetric_eigenvalues, py::arg("m"));

    py::class_<theta::PsdReport>(m, "PsdReport")
        .def_readonly("psd", &theta::PsdReport::psd)
        .def_readonly("lambda_min", &theta::PsdReport::lambda_min)
        .def_readonly("tol", &theta::PsdReport::tol);
    m.def("is_psd", &theta::is_psd, py::arg("m"), py::arg("tol") = -1.0);
    m.def("psd_project", &theta::psd_project, py::arg("m"));
    m.def("bordered_psd_equivalent", &theta::bordered_psd_equivalent, py::arg("b"),
          py::arg("v"), py::arg("x"),
          "True iff [[b, v^T], [v, X]] is positive semidefinite (tolerance 1e-9).");
    m.def("bordered_psd_reduction", &theta::bordered_psd_reduction, py::arg("b"),
          py::arg("v"), py::arg("x"));

    m.def("kesten_mckay_density", &theta::kesten_mckay_density, py::arg("z"),
          py::arg("d"));
    m.def("q_eval", &theta::q_eval, py::arg("t"), py::arg("z"), py::arg("d"));
    py::class_<theta::QuadratureRule>(m, "QuadratureRule")
        .def_readonly("m", &theta::QuadratureRule::m)
        .def_readonly("d", &theta::QuadratureRule::d)
        .def_readonly("nodes", &theta::QuadratureRule::nodes)
        .def_readonly("weights", &theta::QuadratureRule::weights);
    m.def("quadrature_rule", &theta::quadrature_rule, py::arg("m"), py::arg("d"));
    py::class_<theta::PolyInBasis>(m, "PolyInBasis")
        .def(py::init([](int d, std::vector<double> coeffs) {
                 return theta::PolyInBasis{d, std::move(coeffs)};
             }),
             py::arg("d"), py::arg("coeffs"))
        .def_readonly("d", &theta::PolyInBasis::d)
        .def_readonly("coeffs", &theta::PolyInBasis::coeffs)
        .def("degree", &theta::PolyInBasis::degree)
        .def("eval", &theta::PolyInBasis::eval, py::arg("z"));
    m.def("inner_product", &theta::inner_product, py::arg("f"), py::arg("g"),
          py::arg("rule"));

    m.def(
        "nonbacktracking_powers",
        [](const theta::RegularGraph& g, int max_t) {
            const auto powers = theta::nonbacktracking_powers(g, max_t);
            std::vector<Eigen::MatrixXd> out;
            out.reserve(powers.size());
            for (const auto& p : powers) out.push_back(p.cast<double>());
            return out;
        },
        py::arg("g"), py::arg("max_t"),
        "walk-count matrices A^(0)..A^(max_t); exact integers returned as floats");

    py::class_<theta::PrimalCertificate>(m, "PrimalCertificate")
        .def_readonly("n", &theta::PrimalCertificate::n)
        .def_readonly("d", &theta::PrimalCertificate::d)
        .def_readonly("gamma_used", &theta::PrimalCertificate::gamma_used)
        .def_readonly("kappa", &theta::PrimalCertificate::kappa)
        .def_readonly("r_m", &theta::PrimalCertificate::r_m)
        .def_readonly("epsilon_gamma", &theta::PrimalCertificate::epsilon_gamma)
        .def_readonly("c", &theta::PrimalCertificate::c)
        .def_readonly("a", &theta::PrimalCertificate::a)
        .def_readonly("P", &theta::PrimalCertificate::P);
    m.def(
        "build_primal_certificate",
        [](const theta::RegularGraph& g, std::optional<int> gamma) {
            return theta::build_primal_certificate(g, gamma);
        },
        py::arg("g"), py::arg("gamma") = std::nullopt);

    py::class_<theta::PrimalVerification>(m, "PrimalVerification")
        .def_readonly("diagonal_ok", &theta::PrimalVerification::diagonal_ok)
        .def_readonly("edges_ok", &theta::PrimalVerification::edges_ok)
        .def_readonly("psd_ok", &theta::PrimalVerification::psd_ok)
        .def_readonly("max_diag_error", &theta::PrimalVerification::max_diag_error)
        .def_readonly("max_edge_error", &theta::PrimalVerification::max_edge_error)
        .def_readonly("lambda_min_p", &theta::PrimalVerification::lambda_min_p)
        .def_readonly("tol", &theta::PrimalVerification::tol)
        .def("passed", &theta::PrimalVerification::pass);
    m.def("verify_primal", &theta::verify_primal, py::arg("g"), py::arg("cert"),
          py::arg("tol") = -1.0);

    py::class_<theta::DualWitness>(m, "DualWitness")
        .def_readonly("eta", &theta::DualWitness::eta)
        .def_readonly("b", &theta::DualWitness::b)
        .def_readonly("objective", &theta::DualWitness::objective)
        .def_readonly("adjacency_lambda_min", &theta::DualWitness::adjacency_lambda_min);
    m.def("build_dual_witness", &theta::build_dual_witness, py::arg("g"));

    py::class_<theta::DualVerification>(m, "DualVerification")
        .def_readonly("trace_ok", &theta::DualVerification::trace_ok)
        .def_readonly("psd_ok", &theta::DualVerification::psd_ok)
        .def_readonly("trace_error", &theta::DualVerification::trace_error)
        .def_readonly("lambda_min_d", &theta::DualVerification::lambda_min_d)
        .def_readonly("objective", &theta::DualVerification::objective)
        .def_readonly("tol", &theta::DualVerification::tol)
        .def("passed", &theta::DualVerification::pass);
    m.def("verify_dual", &theta::verify_dual, py::arg("g"), py::arg("w"),
          py::arg("tol") = -1.0);

    py::class_<theta::Pseudoexpectation>(m, "Pseudoexpectation")
        .def_readonly("k", &theta::Pseudoexpectation::k)
        .def_readonly("block_size", &theta::Pseudoexpectation::block_size)
        .def_readonly("ell", &theta::Pseudoexpectation::ell)
        .def_readonly("moment_matrix", &theta::Pseudoexpectation::moment_matrix);
    m.def("lift_pseudoexpectation", &theta::lift_pseudoexpectation, py::arg("p"),
          py::arg("k"));

    py::class_<theta::ThetaBounds>(m, "ThetaBounds")
        .def_readonly("lower", &theta::ThetaBounds::lower)
        .def_readonly("upper", &theta::ThetaBounds::upper)
        .def_readonly("dual", &theta::ThetaBounds::dual)
        .def_readonly("dual_check", &theta::ThetaBounds::dual_check)
        .def_readonly("primal", &theta::ThetaBounds::primal)
        .def_readonly("primal_check", &theta::ThetaBounds::primal_check)
        .def("__repr__", [](const theta::ThetaBounds& b) {
            return "ThetaBounds(lower=" + std::to_string(b.lower) + ", upper=" +
                   (b.upper ? std::to_string(*b.upper) : std::string("None")) + ")";
        });
    m.def(
        "theta_bounds",
        [](const theta::RegularGraph& g, std::optional<int> gamma, double tol) {
            return theta::theta_bounds(g, gamma, tol);
        },
        py::arg("g"), py::arg("gamma") = std::nullopt, py::arg("tol") = -1.0);

    m.def("certificate_json",
          [](const theta::PrimalCertificate& cert, const theta::PrimalVerification& v) {
              return theta::certificate_json(cert, v).dump(2);
          },
          py::arg("cert"), py::arg("verification"));

    py::class_<theta::OracleResult>(m, "OracleResult")
        .def_readonly("lower", &theta::OracleResult::lower)
        .def_readonly("upper", &theta::OracleResult::upper)
        .def_readonly("bisections", &theta::OracleResult::bisections)
        .def_readonly("converged", &theta::OracleResult::converged)
        .def_readonly("feasible_kappa", &theta::OracleResult::feasible_kappa)
        .def_readonly("feasible_p", &theta::OracleResult::feasible_p);
    m.def("exact_theta", &theta::exact_theta, py::arg("g"), py::arg("precision") = 1e-4,
          py::arg("max_iter") = 200);

    m.def("kesten_stigum_regular", &theta::kesten_stigum_regular, py::arg("k"),
          py::arg("tau"));
    m.def("kesten_stigum_poisson", &theta::kesten_stigum_poisson, py::arg("k"),
          py::arg("tau"));
    m.def("first_moment_coloring", &theta::first_moment_coloring, py::arg("k"));
    m.def("effective_colors", &theta::effective_colors, py::arg("k"), py::arg("tau"));
    m.def("sos2_refutation_possible", &theta::sos2_refutation_possible, py::arg("d"),
          py::arg("k"), py::arg("tau"));
    m.def("sos2_refutation_impossible", &theta::sos2_refutation_impossible, py::arg("d"),
          py::arg("k"), py::arg("tau"));
    m.def("rearranged_nonrefutable_degree", &theta::rearranged_nonrefutable_degree,
          py::arg("k"));
    m.def("tau_transform_forward", &theta::tau_transform_forward, py::arg("theta_hat"),
          py::arg("tau"));
    m.def("tau_transform_inverse", &theta::tau_transform_inverse,
          py::arg("theta_hat_tau"), py::arg("tau"));
    m.def("condensation_scale", &theta::condensation_scale, py::arg("k"), py::arg("tau"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
