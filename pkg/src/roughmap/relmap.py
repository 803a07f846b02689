"""Relations pushed forward and pulled back along a mapping."""

from __future__ import annotations

import numpy as np

from .mapping import FiniteMapping, image
from .relation import (
    BinaryRelation,
    Element,
    Subset,
    _check_same,
    pred_neighborhood,
    succ_neighborhood,
)


def induce(f: FiniteMapping, R: BinaryRelation) -> BinaryRelation:
    """``{(f(x), f(y)) | (x, y) in R}`` as a relation on the codomain."""
    _check_same(f.domain, R.universe, "mapping domain and relation")
    m = len(f.codomain)
    out = np.zeros((m, m), dtype=bool)
    t = f.array
    rows, cols = np.nonzero(R.matrix)
    out[t[rows], t[cols]] = True
    return BinaryRelation(f.codomain, out)


def inverse_induce(f: FiniteMapping, Q: BinaryRelation) -> BinaryRelation:
    """``{(x, y) | (f(x), f(y)) in Q}`` as a relation on the domain."""
    _check_same(f.codomain, Q.universe, "mapping codomain and relation")
    t = f.array
    return BinaryRelation(f.domain, Q.matrix[np.ix_(t, t)])


def _fiber_union(f: FiniteMapping, R: BinaryRelation, y: Element, hood) -> Subset:
    _check_same(f.domain, R.universe, "mapping domain and relation")
    members = f._fiber_masks()[f.codomain.index(y)]
    out = f.codomain.empty()
    for x in range(len(f.domain)):
        if (members >> x) & 1:
            out = out | image(f, hood(R, x))
    return out


def induced_pred_neighborhood(f: FiniteMapping, R: BinaryRelation, y: Element) -> Subset:
    """Predecessors of ``y`` under ``induce(f, R)``, without building it.

    Unions ``f(R_p(x))`` over the fiber of ``y``; empty when ``y`` is not
    in the range of ``f``.
    """
    return _fiber_union(f, R, y, pred_neighborhood)


def induced_succ_neighborhood(f: FiniteMapping, R: BinaryRelation, y: Element) -> Subset:
    """Successor counterpart of :func:`induced_pred_neighborhood`."""
    return _fiber_union(f, R, y, succ_neighborhood)
