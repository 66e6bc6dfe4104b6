"""Maximum-genus estimation for connected multigraphs.

Greedy removal of disjoint adjacent edge pairs under a connectivity
constraint gives a lower bound k and the sandwich
``k <= gamma_max <= min(2k, floor(beta / 2))`` with ``beta`` the cycle
rank, so the greedy value is a 2-approximation.  Every claimed lower
bound can be certified by an explicit rotation-system embedding, and
small instances can be solved exactly by three independent oracles.
"""

from .bench import (
    BenchConfig,
    BenchSummary,
    PipelineOutcome,
    fit_loglog_slope,
    format_summary,
    run_bench,
    run_pipeline,
    summarize,
)
from .connectivity import (
    BACKENDS,
    BackendStats,
    DfsBackend,
    DynamicBackend,
    dfs_backend,
    dynamic_backend,
    pair_removal_keeps_connected,
)
from .embedding import (
    EmbeddingResult,
    EmbeddingState,
    FaceSet,
    RotationSystem,
    build_embedding,
    genus_of,
    trace_faces,
)
from .generators import (
    FAMILIES,
    GeneratorSpec,
    gen_bouquet,
    gen_complete,
    gen_dipole,
    gen_random_connected_multigraph,
    gen_tight_star,
)
from .graph import (
    DisconnectedError,
    GraphError,
    MultiGraph,
    ParseError,
    cycle_rank,
    format_edge_list,
    is_cactus,
    is_connected,
    parse_edge_list,
)
from .greedy import (
    POLICIES,
    AdjacentPair,
    GenusBounds,
    GreedyResult,
    GreedyStats,
    PairSet,
    VerifyResult,
    greedy_max_genus,
    verify_pair_set,
)
from .oracle import (
    LimitExceededError,
    XuongCertificate,
    exact_max_genus_pairs,
    exact_max_genus_rotations,
    odd_components,
    spanning_trees,
    xuong_max_genus,
)
from .preprocess import PreprocessResult, merge_pairs, reduce_multiedges
from .report import (
    SCHEMA_VERSION,
    InstanceInfo,
    RunConfig,
    RunReport,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacentPair",
    "BACKENDS",
    "BackendStats",
    "BenchConfig",
    "BenchSummary",
    "DfsBackend",
    "DisconnectedError",
    "DynamicBackend",
    "EmbeddingResult",
    "EmbeddingState",
    "FAMILIES",
    "FaceSet",
    "GeneratorSpec",
    "GenusBounds",
    "GraphError",
    "GreedyResult",
    "GreedyStats",
    "InstanceInfo",
    "LimitExceededError",
    "MultiGraph",
    "POLICIES",
    "PairSet",
    "ParseError",
    "PipelineOutcome",
    "PreprocessResult",
    "RotationSystem",
    "RunConfig",
    "RunReport",
    "SCHEMA_VERSION",
    "VerifyResult",
    "XuongCertificate",
    "build_embedding",
    "cycle_rank",
    "dfs_backend",
    "dynamic_backend",
    "exact_max_genus_pairs",
    "exact_max_genus_rotations",
    "fit_loglog_slope",
    "format_edge_list",
    "format_summary",
    "gen_bouquet",
    "gen_complete",
    "gen_dipole",
    "gen_random_connected_multigraph",
    "gen_tight_star",
    "genus_of",
    "greedy_max_genus",
    "is_cactus",
    "is_connected",
    "merge_pairs",
    "odd_components",
    "pair_removal_keeps_connected",
    "parse_edge_list",
    "reduce_multiedges",
    "run_bench",
    "run_pipeline",
    "spanning_trees",
    "summarize",
    "trace_faces",
    "verify_pair_set",
    "xuong_max_genus",
]
