"""Lower and upper approximations in a generalized approximation space.

The space is the pair ``(R.universe, R)``. Successor-based operators are
the default; the ``_pred`` variants use predecessor neighborhoods.
"""

from __future__ import annotations

from .relation import (
    BinaryRelation,
    Subset,
    _check_same,
    pred_neighborhood,
    succ_neighborhood,
)


def _lower(R: BinaryRelation, X: Subset, hood) -> Subset:
    _check_same(R.universe, X.universe, "relation and subset")
    mask = 0
    for x in R.universe:
        # an empty neighborhood lies inside every X
        if hood(R, x) <= X:
            mask |= 1 << x
    return Subset(R.universe, mask)


def _upper(R: BinaryRelation, X: Subset, hood) -> Subset:
    _check_same(R.universe, X.universe, "relation and subset")
    mask = 0
    for x in R.universe:
        if not hood(R, x).isdisjoint(X):
            mask |= 1 << x
    return Subset(R.universe, mask)


def lower_approx(R: BinaryRelation, X: Subset) -> Subset:
    """Elements whose successor neighborhood is contained in ``X``."""
    return _lower(R, X, succ_neighborhood)


def upper_approx(R: BinaryRelation, X: Subset) -> Subset:
    """Elements whose successor neighborhood meets ``X``."""
    return _upper(R, X, succ_neighborhood)


def lower_approx_pred(R: BinaryRelation, X: Subset) -> Subset:
    return _lower(R, X, pred_neighborhood)


def upper_approx_pred(R: BinaryRelation, X: Subset) -> Subset:
    return _upper(R, X, pred_neighborhood)


def is_definable(R: BinaryRelation, X: Subset) -> bool:
    """True when both approximations of ``X`` give back ``X`` itself."""
    return lower_approx(R, X) == X and upper_approx(R, X) == X
