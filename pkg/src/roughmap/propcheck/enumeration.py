"""Canonical enumeration of relations and mappings on small universes."""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from ..mapping import FiniteMapping
from ..relation import BinaryRelation, Universe, UniverseError

MAX_DOMAIN = 5
MAX_CODOMAIN = 5


def _check_size(name: str, value: int, hi: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= hi:
        raise UniverseError(f"{name} must be an integer in 1..{hi}, got {value!r}")


def enumerate_relations(
    n: int, universe: Optional[Universe] = None
) -> Iterator[BinaryRelation]:
    """All ``2**(n*n)`` relations, ordered by their row-major bit code."""
    _check_size("n", n, MAX_DOMAIN)
    if universe is None:
        universe = Universe.canonical(n, "u")
    elif len(universe) != n:
        raise UniverseError(f"universe has {len(universe)} elements, expected {n}")
    for code in range(1 << (n * n)):
        yield BinaryRelation.from_code(universe, code)


def mapping_from_index(domain: Universe, codomain: Universe, index: int) -> FiniteMapping:
    """The ``index``-th mapping when mappings are read as base-m numerals.

    Element 0 holds the most significant digit, so the order matches
    lexicographic order of the target tuples.
    """
    n, m = len(domain), len(codomain)
    targets = [0] * n
    for i in range(n - 1, -1, -1):
        index, targets[i] = divmod(index, m)
    if index:
        raise UniverseError("mapping index out of range")
    return FiniteMapping(domain, codomain, targets)


def enumerate_mappings(
    n: int,
    m: int,
    domain: Optional[Universe] = None,
    codomain: Optional[Universe] = None,
) -> Iterator[FiniteMapping]:
    """All ``m**n`` mappings from an n-element into an m-element universe."""
    _check_size("n", n, MAX_DOMAIN)
    _check_size("m", m, MAX_CODOMAIN)
    domain = domain or Universe.canonical(n, "u")
    codomain = codomain or Universe.canonical(m, "v")
    for targets in itertools.product(range(m), repeat=n):
        yield FiniteMapping(domain, codomain, targets)
