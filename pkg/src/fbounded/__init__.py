"""Maximum f-bounded subgraphs of multigraphs and Tutte deficiency certificates."""
__version__ = "0.1.0"

from .formula import (
    DeficiencyCertificate,
    PartitionPair,
    bad_components,
    deficiency,
    deficiency_empty_pair_identity,
    has_f_factor,
    is_bad_component,
    max_deficiency,
    pair_table,
    parity_check,
    q_count,
    schrijver_bound,
)
from .matcher import Matching, SimpleGraph, matching_size_brute, maximum_matching, tutte_berge_value
from .multigraph import (
    GraphError,
    InstanceTooLarge,
    Multigraph,
    components,
    degree_in_minus,
    edge_count_between,
    edge_count_within,
    members,
    vertex_set,
    weight_sum,
)
from .solver import (
    Subgraph,
    augment_with_w,
    brute_force_max_fbounded,
    expand_gadget,
    h_value,
    solve_max_fbounded,
    verify_minmax,
)
