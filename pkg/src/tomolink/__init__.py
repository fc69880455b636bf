"""Exact identifiability of additive link metrics in two-monitor networks.

The package decides, over exact rational arithmetic, which link metrics of a
network with two monitoring nodes can be recovered from end-to-end simple
path measurements, recovers them when possible, and produces
machine-checkable certificates (block-shaped measurement matrices, faces,
cycle pairs, border-link classes) for the structural claims behind the
decision.
"""

from .connectivity import (
    ConditionOneResult,
    ConditionReport,
    ConditionTwoResult,
    bridges,
    condition_one,
    condition_report,
    condition_two,
    cutvertices,
    is_three_vertex_connected_bruteforce,
    is_two_edge_connected,
)
from .construction import (
    BorderClassification,
    CertificateVerdicts,
    CyclePairCertificate,
    Face,
    border_links_per_face,
    canonical_cycle,
    certificate_to_dot,
    classify_link,
    cycle_links,
    enumerate_faces,
    find_cycle_pair,
    find_disjoint_monitor_paths,
    find_monitor_free_face,
    grow_induced_cycle,
    is_chordless,
    is_face,
    refine_to_face,
    verify_certificate,
)
from .errors import (
    CapExceeded,
    EmptyInterior,
    InconsistentMeasurements,
    Infeasible,
    InteriorDisconnected,
    MalformedCertificate,
    MalformedInput,
    MissingWeight,
    NotFound,
    PreconditionFailed,
    SearchExhausted,
    SearchSpaceTooLarge,
    TomolinkError,
    TooSmall,
    UnknownColumn,
    ValidationError,
)
from .graph import (
    InteriorDecomposition,
    Link,
    Network,
    SimplePath,
    connected_components,
    delete_nodes,
    interior_decomposition,
    link,
    parse_network,
    serialize_network,
)
from .measurement import (
    DEFAULT_PATH_CAP,
    IdentifiabilityReport,
    MeasurementMatrix,
    TransformedMatrix,
    block_transform,
    build_measurement_matrix,
    enumerate_simple_paths,
    identify,
    link_identifiable,
    rank,
    recover_metrics,
)
from .simulation import (
    LinkOutcome,
    LinkWeights,
    RoundTripReport,
    assign_weights,
    enumerate_networks,
    measure_paths,
    network_digest,
    random_network,
    round_trip,
)

__version__ = "0.1.0"
