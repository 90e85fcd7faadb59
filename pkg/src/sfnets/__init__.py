"""Scale-free networks with a shared degree distribution: generators, metrics, experiment harness."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    UNREACHABLE,
    ComponentDecomposition,
    EdgeListError,
    Graph,
    bfs_distances,
    connected_components,
    from_edge_list,
    make_rng,
    new_graph,
    read_edge_list,
    to_edge_list,
    write_edge_list,
)
from .degrees import (  # noqa: E402
    DegreeDistribution,
    DegreeSequence,
    degrees_of,
    distribution_from_sequence,
    sample_sequence,
)
from .generators import (  # noqa: E402
    ALGORITHMS,
    GenerationReport,
    GeneratorParams,
    generate,
    generate_ba,
    generate_kalisky,
    generate_mr,
    generate_model_a,
    generate_model_b,
)
from .metrics import (  # noqa: E402
    BetweennessVector,
    MetricRecord,
    betweenness,
    central_point_dominance,
    clustering_global,
    clustering_local,
    degree_correlation,
    full_record,
    global_efficiency,
    knn_by_degree,
    knn_vertex,
)
