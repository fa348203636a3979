"""Simplicial posets: construction, gluing, defining ideals, random models."""

from .complexes import (
    Graph,
    SimplicialComplex,
    clique_complex,
    make_complex,
    make_graph,
    parse_facet_string,
)
from .errors import (
    ElementNotFoundError,
    FormatError,
    InvalidGluingError,
    InvariantError,
    MeetUndefinedError,
    PreconditionError,
    SimposetError,
    SizeLimitError,
    StructureError,
)
from .gluing import (
    GluingCheck,
    GluingRelation,
    GluingSpec,
    GluingViolation,
    SeparationResult,
    atom_family,
    delta_glue,
    fiber_relation,
    is_antichain_list,
    meet_poset,
    quotient_by_gluing,
    reconstruct_theta_pair,
    separation,
    theta_glue,
    validate_gluing,
)
from .ideal import (
    IdealPresentation,
    Monomial,
    MonomialIdeal,
    Polynomial,
    monomial_ideals_equal,
    reduce_face_poset_ideal,
    stanley_poset_ideal,
    stanley_reisner_ideal,
)
from .labels import Label
from .poset import AtomSupport, Poset, are_isomorphic, boolean_lattice, find_isomorphism
from .random_model import (
    RandomModelParams,
    SplitMix64,
    erdos_renyi_graph,
    kahle_complex,
    rand_simplicial_poset,
    run_batch,
)

__all__ = [
    "AtomSupport",
    "ElementNotFoundError",
    "FormatError",
    "GluingCheck",
    "GluingRelation",
    "GluingSpec",
    "GluingViolation",
    "Graph",
    "IdealPresentation",
    "InvalidGluingError",
    "InvariantError",
    "Label",
    "MeetUndefinedError",
    "Monomial",
    "MonomialIdeal",
    "Polynomial",
    "Poset",
    "PreconditionError",
    "RandomModelParams",
    "SeparationResult",
    "SimplicialComplex",
    "SimposetError",
    "SizeLimitError",
    "SplitMix64",
    "StructureError",
    "are_isomorphic",
    "atom_family",
    "boolean_lattice",
    "clique_complex",
    "delta_glue",
    "erdos_renyi_graph",
    "fiber_relation",
    "find_isomorphism",
    "is_antichain_list",
    "kahle_complex",
    "make_complex",
    "make_graph",
    "meet_poset",
    "monomial_ideals_equal",
    "parse_facet_string",
    "quotient_by_gluing",
    "rand_simplicial_poset",
    "reconstruct_theta_pair",
    "reduce_face_poset_ideal",
    "run_batch",
    "separation",
    "stanley_poset_ideal",
    "stanley_reisner_ideal",
    "theta_glue",
    "validate_gluing",
]

__version__ = "0.1.0"
