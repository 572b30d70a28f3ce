"""Push operations, push equivalence and pushable homomorphisms of oriented graphs."""

from .core import (
    Balance,
    Directability,
    OrderedClosedWalk,
    OrientedGraph,
    SimpleGraph,
    balance_of_even_cycle,
    classify_walk,
    complement,
    conjugate,
    cut_arcs,
    girth,
    push,
    unbalanced_girth,
)
from .errors import (
    InputError,
    InvalidWalkError,
    PushkitError,
    ReductionViolation,
    ResourceLimitError,
)
from .homo import (
    HomWitness,
    check_pushable_hom,
    check_switchable_hom,
    preserves_directability,
    search_pushable_hom,
    search_switchable_hom,
)
from .pushequiv import (
    count_push_classes,
    decide_push_equivalent,
    enumerate_push_classes,
    is_push_invariant,
)
from .signed import SignedGraph, decide_switch_equivalent, switch, to_oriented, to_signed

__all__ = [
    "Balance",
    "Directability",
    "HomWitness",
    "InputError",
    "InvalidWalkError",
    "OrderedClosedWalk",
    "OrientedGraph",
    "PushkitError",
    "ReductionViolation",
    "ResourceLimitError",
    "SignedGraph",
    "SimpleGraph",
    "balance_of_even_cycle",
    "check_pushable_hom",
    "check_switchable_hom",
    "classify_walk",
    "complement",
    "conjugate",
    "count_push_classes",
    "cut_arcs",
    "decide_push_equivalent",
    "decide_switch_equivalent",
    "enumerate_push_classes",
    "girth",
    "is_push_invariant",
    "preserves_directability",
    "push",
    "search_pushable_hom",
    "search_switchable_hom",
    "switch",
    "to_oriented",
    "to_signed",
    "unbalanced_girth",
]
