"""Contraction-sequence dynamic programming for generalized binary CSPs.

Edge-labelled graphs, exact component twin-width, semiring pre-morphisms,
a template-side fine-grained solver, an instance-side FPT solver, exact
CSP translations, and a brute-force oracle.
"""

from .graphs import (E, ContractionSequence, ContractionStep,
                     EdgeLabelledGraph, GraphTooLargeError,
                     InvalidPartitionError, SequenceValidationError,
                     VertexPartition, component_width, contract, ctww_exact,
                     e_components, from_adjacency, validate_sequence)
from .morphisms import (HOM, MorphismRelation, feasible_fine, feasible_fpt,
                        is_morphism)
from .semirings import (INF, CapabilityError, PreMorphismSpec, SemiringSpec,
                        WeightDomainError, WeightMatrix, format_value,
                        omega_of_set, parse_value, premorphism,
                        premorphism_catalog, singleton_value, sr_add, sr_mul)
from .oracle import (EnumerationCapError, all_maps, check_join_lemma,
                     enumerate_restricted, solve_brute)
from .solver_fine import FineRun, solve_fine
from .solver_fpt import FptRun, solve_fpt
from .reductions import (CspInstance, LabelDictionary, csp_to_morphism,
                         morphism_to_csp)
from .families import family, family_with_sequence

__version__ = "0.1.0"

__all__ = [
    "E", "HOM", "INF",
    "CapabilityError", "ContractionSequence", "ContractionStep",
    "CspInstance", "EdgeLabelledGraph", "EnumerationCapError", "FineRun",
    "FptRun", "GraphTooLargeError", "InvalidPartitionError",
    "LabelDictionary", "MorphismRelation", "PreMorphismSpec",
    "SemiringSpec", "SequenceValidationError", "VertexPartition",
    "WeightDomainError", "WeightMatrix",
    "all_maps", "check_join_lemma", "component_width", "contract",
    "csp_to_morphism", "ctww_exact", "e_components", "enumerate_restricted",
    "family", "family_with_sequence", "feasible_fine", "feasible_fpt",
    "format_value", "from_adjacency", "is_morphism", "morphism_to_csp",
    "omega_of_set", "parse_value", "premorphism", "premorphism_catalog",
    "singleton_value", "solve_brute", "solve_fine", "solve_fpt", "sr_add",
    "sr_mul", "validate_sequence",
]
