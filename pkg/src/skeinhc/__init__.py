"""Exact computations for a two-color skein theory.

Subpackages: scalars (exact Q(i)(q) and cyclotomic arithmetic),
combinatorics (Young-diagram path counting and dimension oracles),
hecke_clifford (normal forms in the strand algebras and their even parts),
skein (diagram words, straightening, bending), trace_gram (Markov trace,
Gram matrices and ranks), verify (named invariant suites), cli (the
batch command-line interface).
"""

from .errors import ConsistencyError, DomainError, ParityError, PoleError
from .scalars import (
    CyclotomicField,
    CyclotomicValue,
    GaussianRational,
    QIQ,
    ScalarQ,
    SpecializationPoint,
    loop_value,
    parse_scalar,
    specialize,
)
from .combinatorics import (
    count_pair_tableaux,
    count_paths_double_young,
    count_standard_tableaux,
    decompose_object,
    dim_end_oracle,
    dim_hom_formula,
)
from .hecke_clifford import (
    AlgebraElement,
    antisymmetrizer,
    e_element,
    identity_element,
    multiply,
    normalize,
    t_element,
    theta,
)
from .skein import (
    HomElement,
    evaluate,
    g_projection,
    identity_hom,
    parse_diagram_word,
    straighten,
)
from .trace_gram import (
    GramReport,
    categorical_trace,
    gram_matrix,
    gram_rank,
    markov_trace,
)

__all__ = [
    "ConsistencyError",
    "DomainError",
    "ParityError",
    "PoleError",
    "CyclotomicField",
    "CyclotomicValue",
    "GaussianRational",
    "QIQ",
    "ScalarQ",
    "SpecializationPoint",
    "loop_value",
    "parse_scalar",
    "specialize",
    "count_pair_tableaux",
    "count_paths_double_young",
    "count_standard_tableaux",
    "decompose_object",
    "dim_end_oracle",
    "dim_hom_formula",
    "AlgebraElement",
    "antisymmetrizer",
    "e_element",
    "identity_element",
    "multiply",
    "normalize",
    "t_element",
    "theta",
    "HomElement",
    "evaluate",
    "g_projection",
    "identity_hom",
    "parse_diagram_word",
    "straighten",
    "GramReport",
    "categorical_trace",
    "gram_matrix",
    "gram_rank",
    "markov_trace",
]

__version__ = "0.1.0"
