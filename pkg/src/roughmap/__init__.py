"""Consistent functions, relation mappings and rough approximations on finite universes."""

from .approx import (
    is_definable,
    lower_approx,
    lower_approx_pred,
    upper_approx,
    upper_approx_pred,
)
from .mapping import (
    FiniteMapping,
    Witness,
    fiber,
    image,
    image_of_intersection_check,
    is_injective,
    is_neighborhood_consistent,
    is_predecessor_consistent,
    is_successor_consistent,
    is_surjective,
    is_type1_consistent,
    is_type2_consistent,
    neighborhood_witness,
    predecessor_witness,
    preimage,
    successor_witness,
    type1_witness,
    type2_witness,
)
from .relation import (
    BinaryRelation,
    Subset,
    Universe,
    UniverseError,
    intersect,
    inverse,
    is_reflexive,
    is_symmetric,
    is_transitive,
    join_neighborhood,
    make_relation,
    meet_neighborhood,
    pred_neighborhood,
    succ_equivalence_class,
    succ_neighborhood,
    union,
)
from .relmap import induce, induced_pred_neighborhood, induced_succ_neighborhood, inverse_induce

__version__ = "0.1.0"
