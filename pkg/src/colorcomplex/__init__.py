"""Exact homology of coloring complexes of uniform hypergraphs.

Builds the ordered-partition and cyclic-class complexes attached to a
hypergraph, computes their homology dimensions in characteristic zero with
certified integer arithmetic, evaluates chromatic polynomials, and verifies
a registry of closed-form dimension claims by direct computation.
"""

from .chromatic import (
    IntPolynomial,
    chromatic_brute,
    chromatic_deletion_contraction,
    chromatic_hypergraph,
    evaluate,
    scaled_derivative_at_zero,
)
from .complexes import ChainComplex, ComplexSpec, build_complex, face_passes
from .errors import (
    ColorComplexError,
    DefinitionError,
    ParameterError,
    ResourceError,
    StructureError,
)
from .homology import (
    HomologyReport,
    homology_dims,
    independent_mod_boundaries,
    is_cycle,
    representative_cycle,
)
from .hypergraphs import (
    Hypergraph,
    complete_graph,
    complete_uniform,
    contract_core,
    diagonal,
    looped_complete,
    star,
    vertex_star,
)
from .intmatrix import (
    SparseIntMatrix,
    available_backends,
    get_backend,
    is_prime,
    random_word_prime,
    rank_certified,
    rank_exact,
    rank_mod_p,
    set_backend,
)
from .partitions import (
    canonicalize,
    enumerate_cyclic_classes,
    enumerate_ordered_partitions,
    enumerate_set_partitions,
    format_partition,
    parse_partition,
    stirling2,
)
from .theorems import THEOREMS, SuiteReport, TheoremCheck, run_suite

__version__ = "0.1.0"
