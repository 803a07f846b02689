"""Universes, subsets, binary relations and their neighborhood operators.

Elements are identified by position in their universe; labels are only
used for input and display. Every value here is immutable once built.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

import numpy as np

Element = Union[int, str]


class UniverseError(ValueError):
    """Bad input: unknown label, mismatched universes, malformed data."""


class Universe:
    """An ordered, finite, nonempty set of labeled elements.

    Two universes are only ever equal when they are the same object, so
    subsets and relations built over look-alike universes never mix.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(label) for label in labels)
        if not labels:
            raise UniverseError("a universe must have at least one element")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            seen = set()
            dup = next(lab for lab in labels if lab in seen or seen.add(lab))
            raise UniverseError(f"duplicate label {dup!r} in universe")
        self.labels = labels
        self._index = index

    @classmethod
    def canonical(cls, n: int, prefix: str = "u") -> "Universe":
        """Universe with labels ``prefix0 .. prefix{n-1}``."""
        return cls(f"{prefix}{i}" for i in range(n))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.labels)))

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"

    def index(self, x: Element) -> int:
        """Position of an element given either its index or its label."""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if not 0 <= x < len(self.labels):
                raise UniverseError(f"element index {x} out of range for {self!r}")
            return int(x)
        try:
            return self._index[x]
        except KeyError:
            raise UniverseError(f"unknown label {x!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def full(self) -> "Subset":
        return Subset(self, (1 << len(self.labels)) - 1)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def subset(self, members: Iterable[Element]) -> "Subset":
        mask = 0
        for x in members:
            mask |= 1 << self.index(x)
        return Subset(self, mask)

    def singleton(self, x: Element) -> "Subset":
        return Subset(self, 1 << self.index(x))

    def all_subsets(self) -> Iterator["Subset"]:
        """Every subset, ordered by the integer of its membership bits."""
        for mask in range(1 << len(self.labels)):
            yield Subset(self, mask)


def _check_same(a: Universe, b: Universe, what: str = "operands") -> None:
    if a is not b:
        raise UniverseError(f"{what} live on different universes")


class Subset:
    """A subset of a universe, kept as a packed characteristic vector.

    Bit ``i`` of ``mask`` is set iff element ``i`` belongs to the subset.
    ``vector`` unpacks it into a numpy boolean array.
    """

    __slots__ = ("universe", "mask")

    def __init__(self, universe: Universe, mask: int = 0):
        if mask < 0 or mask >> len(universe):
            raise UniverseError(f"membership mask {mask:#x} too wide for {universe!r}")
        self.universe = universe
        self.mask = mask

    @classmethod
    def from_vector(cls, universe: Universe, vector: Sequence[bool]) -> "Subset":
        vector = np.asarray(vector, dtype=bool)
        if vector.shape != (len(universe),):
            raise UniverseError(
                f"vector of shape {vector.shape} does not match universe size {len(universe)}"
            )
        mask = 0
        for i in np.flatnonzero(vector):
            mask |= 1 << int(i)
        return cls(universe, mask)

    @property
    def vector(self) -> np.ndarray:
        n = len(self.universe)
        return np.array([(self.mask >> i) & 1 for i in range(n)], dtype=bool)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.universe)) if (self.mask >> i) & 1)

    @property
    def labels(self) -> list[str]:
        return [self.universe.labels[i] for i in self.indices]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, x: Element) -> bool:
        return bool((self.mask >> self.universe.index(x)) & 1)

    def _other(self, other: "Subset") -> int:
        if not isinstance(other, Subset):
            raise TypeError(f"expected a Subset, got {type(other).__name__}")
        _check_same(self.universe, other.universe, "subsets")
        return other.mask

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask | self._other(other))

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask & self._other(other))

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask & ~self._other(other))

    def complement(self) -> "Subset":
        return Subset(self.universe, ~self.mask & ((1 << len(self.universe)) - 1))

    def __le__(self, other: "Subset") -> bool:
        return self.mask & ~self._other(other) == 0

    def __ge__(self, other: "Subset") -> bool:
        return other <= self

    def isdisjoint(self, other: "Subset") -> bool:
        return self.mask & self._other(other) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.universe is other.universe and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.universe), self.mask))

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"


class BinaryRelation:
    """A binary relation on one universe, as a dense boolean n x n table.

    Entry ``(i, j)`` is true iff ``(element_i, element_j)`` is in the
    relation. The table is read-only.
    """

    __slots__ = ("universe", "matrix", "_rows", "_cols", "_code", "_hash")

    def __init__(self, universe: Universe, matrix):
        matrix = np.array(matrix, dtype=bool)
        n = len(universe)
        if matrix.shape != (n, n):
            raise UniverseError(f"relation matrix of shape {matrix.shape}, expected {(n, n)}")
        matrix.setflags(write=False)
        self.universe = universe
        self.matrix = matrix
        self._rows = None
        self._cols = None
        self._code = None
        self._hash = None

    @classmethod
    def from_code(cls, universe: Universe, code: int) -> "BinaryRelation":
        """Relation whose row-major table is the binary expansion of ``code``.

        Bit ``i * n + j`` of ``code`` holds entry ``(i, j)``.
        """
        n = len(universe)
        if code < 0 or code >> (n * n):
            raise UniverseError(f"relation code {code} out of range for n={n}")
        bits = np.array([(code >> k) & 1 for k in range(n * n)], dtype=bool)
        rel = cls(universe, bits.reshape(n, n))
        rel._code = code
        return rel

    @classmethod
    def empty(cls, universe: Universe) -> "BinaryRelation":
        n = len(universe)
        return cls(universe, np.zeros((n, n), dtype=bool))

    @classmethod
    def identity(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, np.eye(len(universe), dtype=bool))

    @property
    def code(self) -> int:
        if self._code is None:
            flat = self.matrix.ravel()
            self._code = sum(1 << int(k) for k in np.flatnonzero(flat))
        return self._code

    def _row_masks(self) -> tuple[int, ...]:
        if self._rows is None:
            self._rows = tuple(_pack(row) for row in self.matrix)
        return self._rows

    def _col_masks(self) -> tuple[int, ...]:
        if self._cols is None:
            self._cols = tuple(_pack(col) for col in self.matrix.T)
        return self._cols

    def pairs(self) -> list[tuple[int, int]]:
        """Member pairs as index tuples, in lexicographic order."""
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.matrix))]

    def labeled_pairs(self) -> list[tuple[str, str]]:
        lab = self.universe.labels
        return [(lab[i], lab[j]) for i, j in self.pairs()]

    def __contains__(self, pair: tuple[Element, Element]) -> bool:
        x, y = pair
        return bool(self.matrix[self.universe.index(x), self.universe.index(y)])

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryRelation):
            return NotImplemented
        return self.universe is other.universe and self.code == other.code

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((id(self.universe), self.code))
        return self._hash

    def __le__(self, other: "BinaryRelation") -> bool:
        _check_same(self.universe, other.universe, "relations")
        return not np.any(self.matrix & ~other.matrix)

    def __repr__(self) -> str:
        return "{" + ", ".join(f"({a}, {b})" for a, b in self.labeled_pairs()) + "}"


def _pack(bits: np.ndarray) -> int:
    mask = 0
    for i in np.flatnonzero(bits):
        mask |= 1 << int(i)
    return mask


def make_relation(universe: Universe, pairs: Iterable[tuple[Element, Element]]) -> BinaryRelation:
    """Relation holding exactly the listed pairs; duplicates collapse."""
    n = len(universe)
    matrix = np.zeros((n, n), dtype=bool)
    for pair in pairs:
        try:
            a, b = pair
        except (TypeError, ValueError):
            raise UniverseError(f"expected a pair, got {pair!r}") from None
        matrix[universe.index(a), universe.index(b)] = True
    return BinaryRelation(universe, matrix)


def inverse(R: BinaryRelation) -> BinaryRelation:
    return BinaryRelation(R.universe, R.matrix.T)


def union(R: BinaryRelation, Q: BinaryRelation) -> BinaryRelation:
    _check_same(R.universe, Q.universe, "relations")
    return BinaryRelation(R.universe, R.matrix | Q.matrix)


def intersect(R: BinaryRelation, Q: BinaryRelation) -> BinaryRelation:
    _check_same(R.universe, Q.universe, "relations")
    return BinaryRelation(R.universe, R.matrix & Q.matrix)


def is_reflexive(R: BinaryRelation) -> bool:
    return bool(np.all(np.diagonal(R.matrix)))


def is_symmetric(R: BinaryRelation) -> bool:
    return bool(np.array_equal(R.matrix, R.matrix.T))


def is_transitive(R: BinaryRelation) -> bool:
    # R o R must stay inside R.
    m = R.matrix.astype(np.uint8)
    composed = (m @ m) > 0
    return not np.any(composed & ~R.matrix)


def pred_neighborhood(R: BinaryRelation, x: Element) -> Subset:
    """Elements ``y`` with ``(y, x)`` in R: the column of ``x``."""
    return Subset(R.universe, R._col_masks()[R.universe.index(x)])


def succ_neighborhood(R: BinaryRelation, x: Element) -> Subset:
    """Elements ``y`` with ``(x, y)`` in R: the row of ``x``."""
    return Subset(R.universe, R._row_masks()[R.universe.index(x)])


def meet_neighborhood(R: BinaryRelation, x: Element) -> Subset:
    return pred_neighborhood(R, x) & succ_neighborhood(R, x)


def join_neighborhood(R: BinaryRelation, x: Element) -> Subset:
    return pred_neighborhood(R, x) | succ_neighborhood(R, x)


def succ_equivalence_class(R: BinaryRelation, x: Element) -> Subset:
    """All ``y`` whose successor neighborhood equals that of ``x``."""
    rows = R._row_masks()
    target = rows[R.universe.index(x)]
    mask = 0
    for y, row in enumerate(rows):
        if row == target:
            mask |= 1 << y
    return Subset(R.universe, mask)
