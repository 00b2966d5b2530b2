"""Smoke tests for the python module: every exposed operation runs and the
headline numbers match the library's own guarantees."""

import math

import numpy as np
import pytest

import thetacert as tc


def test_petersen_bounds():
    g = tc.petersen_graph()
    assert g.n == 10
    assert g.d == 3
    assert g.edge_count == 15
    bounds = tc.theta_bounds(g)
    assert bounds.lower == pytest.approx(2.5, abs=1e-9)
    assert bounds.upper == pytest.approx(1.0 + math.sqrt(3.0), abs=1e-9)
    assert bounds.dual_check.passed()
    assert bounds.primal_check.passed()


def test_girth_and_adjacency():
    g = tc.petersen_graph()
    report = g.girth()
    assert report.length == 5
    assert len(report.cycle) == 5
    adj = np.asarray(g.adjacency())
    assert adj.shape == (10, 10)
    assert adj.sum(axis=0).tolist() == [3.0] * 10
    assert np.array_equal(adj, adj.T)


def test_named_and_generated_graphs():
    assert tc.named_graph("k4").n == 4
    assert tc.named_graph("c5").girth().length == 5
    g = tc.generate_config_model(60, 3, seed=7)
    assert g.d == 3
    h = tc.generate_config_model(60, 3, seed=7)
    assert g.edges() == h.edges()
    b = tc.generate_bipartite_regular(40, 4, seed=1)
    assert b.girth().length >= 4


def test_certificate_fields_and_json():
    g = tc.petersen_graph()
    cert = tc.build_primal_certificate(g)
    assert cert.gamma_used == 4
    assert cert.kappa == pytest.approx(1.0 + math.sqrt(3.0), abs=1e-12)
    assert cert.c[0] == 1.0
    assert cert.c[1] == pytest.approx(-1.0, abs=1e-13)
    check = tc.verify_primal(g, cert)
    assert check.passed()
    assert check.max_diag_error == 0.0
    assert check.max_edge_error == 0.0
    blob = tc.certificate_json(cert, check)
    assert '"kappa"' in blob
    assert '"verified": true' in blob


def test_dual_witness():
    w = tc.build_dual_witness(tc.complete_graph(5))
    assert w.objective == pytest.approx(5.0, abs=1e-12)
    check = tc.verify_dual(tc.complete_graph(5), w)
    assert check.passed()
    assert abs(check.lambda_min_d) <= 1e-12


def test_spectral_helpers():
    s = tc.symmetric_eigenvalues(np.eye(3))
    assert s.lambda_min == pytest.approx(1.0)
    report = tc.is_psd(np.diag([1.0, -1.0]), 1e-9)
    assert not report.psd
    assert tc.bordered_psd_equivalent(1.0, np.zeros(3), np.eye(3))
    reduced = tc.bordered_psd_reduction(2.0, np.ones(2), np.eye(2))
    assert reduced.shape == (2, 2)


def test_quadrature_and_density():
    rule = tc.quadrature_rule(2, 3)
    assert rule.nodes[0] == pytest.approx(math.sqrt(3.0 / 8.0), abs=1e-12)
    assert sum(rule.weights) == pytest.approx(1.0, abs=1e-14)
    assert tc.kesten_mckay_density(0.0, 3) == pytest.approx(
        (2.0 / math.pi) * (2.0 / 3.0), abs=1e-14
    )
    assert tc.q_eval(0, 0.3, 3) == 1.0
    poly = tc.PolyInBasis(3, [0.0, 1.0])
    assert poly.eval(0.5) == pytest.approx(tc.q_eval(1, 0.5, 3))


def test_nonbacktracking_powers():
    mats = tc.nonbacktracking_powers(tc.complete_graph(4), 3)
    a = np.asarray(mats[1])
    assert np.array_equal(np.asarray(mats[2]), 2 * a)


def test_lift_and_oracle():
    p = np.eye(4)
    lift = tc.lift_pseudoexpectation(p, 2.0)
    assert lift.moment_matrix.shape == (9, 9)
    assert tc.is_psd(lift.moment_matrix).psd == tc.is_psd(p - np.ones((4, 4)) / 2.0).psd

    res = tc.exact_theta(tc.cycle_graph(5), precision=1e-4)
    assert res.lower <= math.sqrt(5.0) + 1e-4
    assert res.upper >= math.sqrt(5.0) - 1e-4
    assert res.converged


def test_thresholds():
    assert tc.kesten_stigum_regular(5, 0.0) == pytest.approx(17.0)
    assert tc.sos2_refutation_possible(3, 2, 0.0)
    assert not tc.sos2_refutation_impossible(3, 3, 0.0)
    forward = tc.tau_transform_forward(2.5, -1.0)
    assert tc.tau_transform_inverse(forward, -1.0) == pytest.approx(2.5, abs=1e-13)


def test_edge_list_files_roundtrip(tmp_path):
    g = tc.generate_config_model(30, 3, seed=4)
    path = str(tmp_path / "g.txt")
    tc.write_edge_list_file(g, path)
    h = tc.read_edge_list_file(path)
    assert h.edges() == g.edges()


def test_exceptions_map_to_python_types():
    with pytest.raises(ValueError):
        tc.RegularGraph(2, 1, [(1, 0)])
    with pytest.raises(RuntimeError):
        tc.build_primal_certificate(tc.complete_graph(4))
    with pytest.raises(ValueError):
        tc.read_edge_list_file("/nonexistent/graph.txt")
    with pytest.raises(RuntimeError):
        tc.generate_config_model(20, 10, seed=1, max_resamples=5)
