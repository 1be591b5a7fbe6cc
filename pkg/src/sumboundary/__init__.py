"""Sum-metric distances, boundary-type vertex sets and corona products of strong digraphs."""
from .boundary import (
    BoundaryProfile,
    GeodesicInterval,
    boundary_profile,
    boundary_set,
    contour_set,
    eccentric_set,
    geodesic_interval,
    geodetic_closure,
    graph_boundary_profile,
    is_geodetic_set,
    periphery_set,
)
from .corona import (
    CoronaProduct,
    CoronaProfile,
    CoronaVerification,
    CoronaVertex,
    corona_directed,
    corona_distance_directed,
    corona_distance_matrix_directed,
    corona_distance_matrix_undirected,
    corona_distance_undirected,
    corona_ecc_directed,
    corona_ecc_undirected,
    corona_profile_directed,
    corona_profile_undirected,
    corona_undirected,
    capped_sum_distance,
    verify_corona,
)
from .edgelist import GraphDocument, parse_edge_list, serialize
from .errors import (
    CoreTooSmall,
    GenerationFailed,
    GraphError,
    HTooSmall,
    LoopEdge,
    NotConnected,
    NotStronglyConnected,
    ParseError,
    VertexOutOfRange,
)
from .generators import generate
from .graph import (
    INF,
    Digraph,
    DistanceMatrix,
    UndirectedGraph,
    all_pairs,
    bfs_from,
    build_digraph,
    build_graph,
    is_connected,
    is_strong,
    is_weak,
    neighbors,
)
from .kernels import backend_name, use_backend
from .metric import (
    AxiomReport,
    EccentricityProfile,
    Metric,
    check_metric_axioms,
    eccentricity_profile,
    graph_eccentricity_profile,
    max_distance,
    max_metric_matrix,
    metric_matrix,
    sum_distance,
    sum_metric_matrix,
)

__version__ = "0.1.0"
