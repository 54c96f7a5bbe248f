"""Mode clustering: mean-shift clustering with soft assignment, cluster
connectivity and two-stage MDS visualization."""

from ._core import (
    ClusterAssignment,
    ConnectivityMatrix,
    ContingencyTable,
    DataMatrix,
    DensityModel,
    Edge,
    LayoutResult,
    ModeSet,
    SoftAssignment,
    __version__,
    absorb,
    adjusted_rand,
    adjusted_rand_strings,
    ascend,
    classical_mds,
    cluster,
    confusion,
    connectivity_matrix,
    default_omega0,
    denoise,
    denoise_threshold,
    edge_set,
    gen_five_cluster,
    gen_four_gaussian_8d,
    gen_two_gaussian_1d,
    load_csv,
    make_data_matrix,
    normal_reference_h,
    run_pipeline,
    sc_plot,
    soft_assign,
    standardize,
    transition_blocks,
    two_stage_layout,
)

__all__ = [
    "ClusterAssignment",
    "ConnectivityMatrix",
    "ContingencyTable",
    "DataMatrix",
    "DensityModel",
    "Edge",
    "LayoutResult",
    "ModeSet",
    "SoftAssignment",
    "__version__",
    "absorb",
    "adjusted_rand",
    "adjusted_rand_strings",
    "ascend",
    "classical_mds",
    "cluster",
    "confusion",
    "connectivity_matrix",
    "default_omega0",
    "denoise",
    "denoise_threshold",
    "edge_set",
    "gen_five_cluster",
    "gen_four_gaussian_8d",
    "gen_two_gaussian_1d",
    "load_csv",
    "make_data_matrix",
    "normal_reference_h",
    "run_pipeline",
    "sc_plot",
    "soft_assign",
    "standardize",
    "transition_blocks",
    "two_stage_layout",
]
