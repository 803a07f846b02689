"""Union-of-products forms of the pushed-forward and pulled-back relations.

These rebuild the same relations as :mod:`roughmap.relmap` from
neighborhoods and fibers instead of from the pair table, and serve as an
independent second route for cross-checking.
"""

from __future__ import annotations

from ..mapping import FiniteMapping, image, preimage
from ..relation import BinaryRelation, make_relation, succ_neighborhood


def induce_by_products(f: FiniteMapping, R: BinaryRelation) -> BinaryRelation:
    """Union over x of ``{f(x)} x f(R_s(x))``."""
    pairs = []
    for x in f.domain:
        fx = f.targets[x]
        for b in image(f, succ_neighborhood(R, x)):
            pairs.append((fx, b))
    return make_relation(f.codomain, pairs)


def inverse_induce_by_products(f: FiniteMapping, Q: BinaryRelation) -> BinaryRelation:
    """Union over y of ``f^-1(y) x f^-1(Q_s(y))``."""
    V = f.codomain
    pairs = []
    for y in V:
        sources = preimage(f, V.singleton(y))
        targets = preimage(f, succ_neighborhood(Q, y))
        pairs.extend((a, b) for a in sources for b in targets)
    return make_relation(f.domain, pairs)
