"""Total mappings between universes and the consistency predicates on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from .relation import (
    BinaryRelation,
    Element,
    Subset,
    Universe,
    UniverseError,
    _check_same,
    intersect,
    pred_neighborhood,
    succ_equivalence_class,
    succ_neighborhood,
)

NeighborhoodOperator = Callable[[int], Subset]


class FiniteMapping:
    """A total function ``domain -> codomain`` stored as target indices."""

    __slots__ = ("domain", "codomain", "targets", "_fibers", "_hash")

    def __init__(self, domain: Universe, codomain: Universe, targets: Sequence[int]):
        targets = tuple(int(t) for t in targets)
        if len(targets) != len(domain):
            raise UniverseError(
                f"mapping has {len(targets)} targets for a domain of size {len(domain)}"
            )
        m = len(codomain)
        for i, t in enumerate(targets):
            if not 0 <= t < m:
                raise UniverseError(
                    f"target index {t} of {domain.labels[i]!r} outside codomain of size {m}"
                )
        self.domain = domain
        self.codomain = codomain
        self.targets = targets
        self._fibers = None
        self._hash = hash((id(domain), id(codomain), targets))

    @classmethod
    def from_assignment(
        cls, domain: Universe, codomain: Universe, assignment: Mapping[Element, Element]
    ) -> "FiniteMapping":
        """Build from ``{domain element: codomain element}``; must be total."""
        targets = [None] * len(domain)
        for a, b in assignment.items():
            targets[domain.index(a)] = codomain.index(b)
        missing = [domain.labels[i] for i, t in enumerate(targets) if t is None]
        if missing:
            raise UniverseError(f"mapping is not total: no image for {', '.join(missing)}")
        return cls(domain, codomain, targets)

    @classmethod
    def identity(cls, universe: Universe) -> "FiniteMapping":
        return cls(universe, universe, range(len(universe)))

    def __call__(self, x: Element) -> int:
        return self.targets[self.domain.index(x)]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.targets, dtype=np.intp)

    def _fiber_masks(self) -> tuple[int, ...]:
        # indexed by codomain element; empty mask off the range
        if self._fibers is None:
            masks = [0] * len(self.codomain)
            for i, t in enumerate(self.targets):
                masks[t] |= 1 << i
            self._fibers = tuple(masks)
        return self._fibers

    def assignment(self) -> dict[str, str]:
        return {
            self.domain.labels[i]: self.codomain.labels[t] for i, t in enumerate(self.targets)
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteMapping):
            return NotImplemented
        return (
            self.domain is other.domain
            and self.codomain is other.codomain
            and self.targets == other.targets
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{a}->{b}" for a, b in self.assignment().items())
        return f"FiniteMapping({body})"


def image(f: FiniteMapping, S: Subset) -> Subset:
    _check_same(f.domain, S.universe, "mapping domain and subset")
    mask = 0
    for i in S.indices:
        mask |= 1 << f.targets[i]
    return Subset(f.codomain, mask)


def preimage(f: FiniteMapping, T: Subset) -> Subset:
    _check_same(f.codomain, T.universe, "mapping codomain and subset")
    fibers = f._fiber_masks()
    mask = 0
    for j in T.indices:
        mask |= fibers[j]
    return Subset(f.domain, mask)


def fiber(f: FiniteMapping, x: Element) -> Subset:
    """Domain elements sharing the image of ``x``; always contains ``x``."""
    return Subset(f.domain, f._fiber_masks()[f(x)])


def is_surjective(f: FiniteMapping) -> bool:
    return all(f._fiber_masks())


def is_injective(f: FiniteMapping) -> bool:
    return len(set(f.targets)) == len(f.targets)


@dataclass(frozen=True)
class Witness:
    """Why a mapping fails a consistency test.

    ``x`` and ``y`` are domain indices; ``element`` is a domain index that
    belongs to one of the two compared sets but not the other.
    """

    kind: str
    x: int
    y: int
    element: int

    def describe(self, universe: Universe) -> str:
        lab = universe.labels
        x, y, e = lab[self.x], lab[self.y], lab[self.element]
        if self.kind == "type-1":
            return f"fiber of {x} meets R_s({y}) but {e} escapes it"
        if self.kind == "type-2":
            return f"{y} shares the image of {x} but R_s({x}) and R_s({y}) differ at {e}"
        return f"{x} and {y} share an image but {self.kind}({x}) and {self.kind}({y}) differ at {e}"


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def neighborhood_witness(
    f: FiniteMapping, n: NeighborhoodOperator, kind: str = "n"
) -> Optional[Witness]:
    """First pair ``(x, y)`` with ``f(x) = f(y)`` but ``n(x) != n(y)``.

    Pairs are scanned in lexicographic index order, so the witness is
    canonical. Returns None when ``f`` is consistent with ``n``.
    """
    hoods = [n(x) for x in range(len(f.domain))]
    t = f.targets
    for x in range(len(t)):
        for y in range(len(t)):
            if t[x] == t[y] and hoods[x] != hoods[y]:
                return Witness(kind, x, y, _lowest(hoods[x].mask ^ hoods[y].mask))
    return None


def is_neighborhood_consistent(f: FiniteMapping, n: NeighborhoodOperator) -> bool:
    return neighborhood_witness(f, n) is None


def _check_relation(f: FiniteMapping, R: BinaryRelation) -> None:
    _check_same(f.domain, R.universe, "mapping domain and relation")


def predecessor_witness(f: FiniteMapping, R: BinaryRelation) -> Optional[Witness]:
    _check_relation(f, R)
    return neighborhood_witness(f, lambda x: pred_neighborhood(R, x), "R_p")


def successor_witness(f: FiniteMapping, R: BinaryRelation) -> Optional[Witness]:
    _check_relation(f, R)
    return neighborhood_witness(f, lambda x: succ_neighborhood(R, x), "R_s")


def is_predecessor_consistent(f: FiniteMapping, R: BinaryRelation) -> bool:
    return predecessor_witness(f, R) is None


def is_successor_consistent(f: FiniteMapping, R: BinaryRelation) -> bool:
    return successor_witness(f, R) is None


def type1_witness(f: FiniteMapping, R: BinaryRelation) -> Optional[Witness]:
    """First ``(x, y)`` where the fiber of ``x`` is split by ``R_s(y)``."""
    _check_relation(f, R)
    U = f.domain
    for x in U:
        fx = fiber(f, x)
        for y in U:
            sy = succ_neighborhood(R, y)
            if not (fx <= sy or fx.isdisjoint(sy)):
                return Witness("type-1", x, y, _lowest((fx - sy).mask))
    return None


def type2_witness(f: FiniteMapping, R: BinaryRelation) -> Optional[Witness]:
    """First ``x`` whose fiber is not inside its successor-equivalence class."""
    _check_relation(f, R)
    for x in f.domain:
        outside = fiber(f, x) - succ_equivalence_class(R, x)
        if outside:
            y = _lowest(outside.mask)
            diff = succ_neighborhood(R, x).mask ^ succ_neighborhood(R, y).mask
            return Witness("type-2", x, y, _lowest(diff))
    return None


def is_type1_consistent(f: FiniteMapping, R: BinaryRelation) -> bool:
    return type1_witness(f, R) is None


def is_type2_consistent(f: FiniteMapping, R: BinaryRelation) -> bool:
    return type2_witness(f, R) is None


def image_of_intersection_check(
    f: FiniteMapping,
    R: BinaryRelation,
    Q: BinaryRelation,
    x: Element,
    side: str = "succ",
) -> tuple[Subset, Subset]:
    """Both sides of ``f(N_{R∩Q}(x)) = f(N_R(x)) ∩ f(N_Q(x))``.

    ``side`` picks the neighborhood N: ``"succ"`` or ``"pred"``. The left
    side is always contained in the right one.
    """
    _check_relation(f, R)
    _check_relation(f, Q)
    hood = {"succ": succ_neighborhood, "pred": pred_neighborhood}.get(side)
    if hood is None:
        raise ValueError(f"side must be 'succ' or 'pred', not {side!r}")
    left = image(f, hood(intersect(R, Q), x))
    right = image(f, hood(R, x)) & image(f, hood(Q, x))
    return left, right
