"""Certified two-sided bounds on the Lovasz theta function of regular graphs.

Everything is implemented in the C++ core; this package re-exports it.
"""

from thetacert._core import (  # noqa: F401
    EdgeListParseError,
    ResampleLimitError,
    PrimalUnavailableError,
    GirthReport,
    RegularGraph,
    SpectrumSummary,
    PsdReport,
    QuadratureRule,
    PolyInBasis,
    PrimalCertificate,
    PrimalVerification,
    DualWitness,
    DualVerification,
    Pseudoexpectation,
    ThetaBounds,
    OracleResult,
    __version__,
    bordered_psd_equivalent,
    bordered_psd_reduction,
    build_dual_witness,
    build_primal_certificate,
    certificate_json,
    complete_bipartite_graph,
    complete_graph,
    compute_girth,
    condensation_scale,
    cycle_graph,
    effective_colors,
    exact_theta,
    first_moment_coloring,
    generate_bipartite_regular,
    generate_config_model,
    inner_product,
    is_psd,
    kesten_mckay_density,
    kesten_stigum_poisson,
    kesten_stigum_regular,
    lift_pseudoexpectation,
    named_graph,
    nonbacktracking_powers,
    petersen_graph,
    psd_project,
    q_eval,
    quadrature_rule,
    read_edge_list_file,
    rearranged_nonrefutable_degree,
    sos2_refutation_impossible,
    sos2_refutation_possible,
    symmetric_eigenvalues,
    tau_transform_forward,
    tau_transform_inverse,
    theta_bounds,
    verify_dual,
    verify_primal,
    write_edge_list_file,
)
