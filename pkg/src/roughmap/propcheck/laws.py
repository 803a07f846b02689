"""Registry of laws about consistent mappings, relation mappings and approximations.

Each law is a hypothesis/conclusion pair over a case built from a mapping
``f: U -> V``, a relation ``R`` on ``U`` and, depending on the law, a second
relation ``Q`` on ``U``, a relation ``S`` on ``V``, a subset ``X`` of ``U``
or a point ``y`` of ``V``. Laws stated pointwise over ``U`` quantify the
point inside the conclusion.

Implication laws are violated when the hypothesis holds and the conclusion
fails. Equivalence laws (``iff=True``) are violated whenever the two sides
disagree, so both directions are checked. Two entries are claims that are
known to be false and are expected to be refuted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..approx import is_definable, lower_approx, upper_approx
from ..document import InstanceDocument
from ..mapping import (
    FiniteMapping,
    image,
    is_predecessor_consistent,
    is_successor_consistent,
    is_surjective,
    is_type1_consistent,
    is_type2_consistent,
    preimage,
)
from ..relation import (
    BinaryRelation,
    Subset,
    Universe,
    UniverseError,
    intersect,
    inverse,
    is_reflexive,
    is_symmetric,
    is_transitive,
    pred_neighborhood,
    succ_neighborhood,
    union,
)
from ..relmap import induce, induced_pred_neighborhood, induced_succ_neighborhood, inverse_induce
from .oracles import induce_by_products, inverse_induce_by_products

OUTER_AXES = ("Q", "S")
INNER_AXES = ("X", "y")


class UnknownLawError(UniverseError):
    pass


class Memo:
    """Per-run cache of pure library calls keyed by their arguments.

    Relation results are interned by bit code so repeated neighborhood
    reads hit the same object.
    """

    def __init__(self):
        self._cache: dict = {}
        self._interned: dict = {}

    def __call__(self, fn, *args):
        key = (fn, *args)
        try:
            return self._cache[key]
        except KeyError:
            pass
        value = fn(*args)
        if isinstance(value, BinaryRelation):
            value = self._interned.setdefault((id(value.universe), value.code), value)
        self._cache[key] = value
        return value


class Case:
    """One point of the enumeration. Mutated in place by the sweep."""

    __slots__ = ("f", "R", "Q", "S", "X", "y", "m")

    def __init__(self, memo: Optional[Memo] = None, **values):
        self.m = memo or Memo()
        for name in ("f", "R", "Q", "S", "X", "y"):
            setattr(self, name, values.get(name))


@dataclass(frozen=True)
class Instance:
    """A fully explicit case, as reported in witnesses or injected by hand."""

    f: FiniteMapping
    R: BinaryRelation
    Q: Optional[BinaryRelation] = None
    S: Optional[BinaryRelation] = None
    X: Optional[Subset] = None
    y: Optional[int] = None

    @classmethod
    def from_case(cls, case: Case, axes) -> "Instance":
        extra = {a: getattr(case, a) for a in axes}
        return cls(case.f, case.R, **extra)

    def to_case(self, memo: Optional[Memo] = None) -> Case:
        return Case(memo, f=self.f, R=self.R, Q=self.Q, S=self.S, X=self.X, y=self.y)

    def to_document(self) -> InstanceDocument:
        """Document naming the parts U, V, f, R, Q, S, X, y.

        The point ``y`` is stored as a singleton set.
        """
        U, V = self.f.domain, self.f.codomain
        doc = InstanceDocument()
        doc.universes["U"] = U
        if V is not U:
            doc.universes["V"] = V
        doc.relations["R"] = self.R
        if self.Q is not None:
            doc.relations["Q"] = self.Q
        if self.S is not None:
            doc.relations["S"] = self.S
        doc.mappings["f"] = self.f
        if self.X is not None:
            doc.sets["X"] = self.X
        if self.y is not None:
            doc.sets["y"] = V.singleton(self.y)
        return doc

    @classmethod
    def from_document(cls, doc: InstanceDocument) -> "Instance":
        """Inverse of :meth:`to_document`."""
        f = doc.get("mappings", "f")
        extra = {}
        for name in ("Q", "S"):
            if name in doc.relations:
                extra[name] = doc.relations[name]
        if "X" in doc.sets:
            extra["X"] = doc.sets["X"]
        if "y" in doc.sets:
            point = doc.sets["y"]
            if len(point) != 1:
                raise UniverseError("set 'y' must hold exactly one element")
            extra["y"] = point.indices[0]
        return cls(f, doc.get("relations", "R"), **extra)


@dataclass(frozen=True)
class Law:
    id: str
    summary: str
    hypothesis: Callable[[Case], bool]
    conclusion: Callable[[Case], bool]
    axes: tuple[str, ...] = ()
    iff: bool = False
    expected_valid: bool = True
    # whether the hypothesis reads X or y; otherwise it is evaluated once
    # per outer case and a false hypothesis skips the inner loop
    inner_hypothesis: bool = False
    aliases: tuple[str, ...] = field(default=(), compare=False)

    @property
    def outer_axes(self) -> tuple[str, ...]:
        return tuple(a for a in OUTER_AXES if a in self.axes)

    @property
    def inner_axes(self) -> tuple[str, ...]:
        return tuple(a for a in INNER_AXES if a in self.axes)

    @property
    def expectation(self) -> str:
        return "valid" if self.expected_valid else "falsifiable"


@dataclass(frozen=True)
class Verdict:
    hypothesis: bool
    conclusion: Optional[bool]
    violated: bool


def evaluate(law: "Law | str", instance: Instance, memo: Optional[Memo] = None) -> Verdict:
    """Evaluate one law on one instance."""
    law = get_law(law) if isinstance(law, str) else law
    for axis in law.axes:
        if getattr(instance, axis) is None:
            raise UniverseError(f"law {law.id} needs a value for {axis!r}")
    case = instance.to_case(memo)
    return _judge(law, case)


def _judge(law: Law, case: Case, hyp: Optional[bool] = None) -> Verdict:
    if hyp is None:
        hyp = bool(law.hypothesis(case))
    if law.iff:
        concl = bool(law.conclusion(case))
        return Verdict(hyp, concl, hyp != concl)
    if not hyp:
        return Verdict(False, None, False)
    concl = bool(law.conclusion(case))
    return Verdict(True, concl, not concl)


# -- shorthands over the memo -------------------------------------------------


def _always(c: Case) -> bool:
    return True


def _pred(c: Case, R=None) -> bool:
    return c.m(is_predecessor_consistent, c.f, c.R if R is None else R)


def _succ(c: Case, R=None) -> bool:
    return c.m(is_successor_consistent, c.f, c.R if R is None else R)


def _fR(c: Case) -> BinaryRelation:
    return c.m(induce, c.f, c.R)


def _img(c: Case, S: Subset) -> Subset:
    return c.m(image, c.f, S)


def _hood(c: Case, hood, R, x) -> Subset:
    return c.m(hood, R, x)


def _points(universe: Universe):
    return range(len(universe))


# -- consistency ----------------------------------------------------------------


def _preorder_hoods(c: Case) -> bool:
    R = c.R
    n = len(R.universe)
    for a in range(n):
        for b in range(n):
            same_p = _hood(c, pred_neighborhood, R, a) == _hood(c, pred_neighborhood, R, b)
            same_s = _hood(c, succ_neighborhood, R, a) == _hood(c, succ_neighborhood, R, b)
            if same_p != same_s:
                return False
    return _pred(c) == _succ(c)


def _saturates(c: Case, hood_of_R) -> bool:
    for x in _points(c.R.universe):
        N = _hood(c, hood_of_R, c.R, x)
        if c.m(preimage, c.f, _img(c, N)) != N:
            return False
    return True


def _image_profile(f: FiniteMapping, R: BinaryRelation, hood) -> tuple[Subset, ...]:
    """``f(N_R(x))`` for every point ``x`` of the domain."""
    return tuple(image(f, hood(R, x)) for x in range(len(R.universe)))


def _profile(c: Case, R: BinaryRelation, hood) -> tuple[Subset, ...]:
    return c.m(_image_profile, c.f, R, hood)


def _intersection_image(hood):
    def conclusion(c: Case) -> bool:
        left = _profile(c, c.m(intersect, c.R, c.Q), hood)
        right_R, right_Q = _profile(c, c.R, hood), _profile(c, c.Q, hood)
        return all(l == r & q for l, r, q in zip(left, right_R, right_Q))

    return conclusion


def _union_image(c: Case) -> bool:
    RQ = c.m(union, c.R, c.Q)
    for hood in (pred_neighborhood, succ_neighborhood):
        left = _profile(c, RQ, hood)
        right_R, right_Q = _profile(c, c.R, hood), _profile(c, c.Q, hood)
        if not all(l == r | q for l, r, q in zip(left, right_R, right_Q)):
            return False
    return True


def _inverse_duality(c: Case) -> bool:
    Rinv = c.m(inverse, c.R)
    return _pred(c) == _succ(c, Rinv) and _succ(c) == _pred(c, Rinv)


# -- relation mappings --------------------------------------------------------


def _two_routes(c: Case) -> bool:
    if _fR(c) != induce_by_products(c.f, c.R):
        return False
    return c.m(inverse_induce, c.f, c.S) == c.m(inverse_induce_by_products, c.f, c.S)


def _induce_meets(c: Case) -> bool:
    left = c.m(induce, c.f, c.m(intersect, c.R, c.Q))
    right = c.m(intersect, _fR(c), c.m(induce, c.f, c.Q))
    return left == right


def _induced_hood(hood, fiber_union, consistent):
    def conclusion(c: Case) -> bool:
        via_fibers = fiber_union(c.f, c.R, c.y)
        if via_fibers != _hood(c, hood, _fR(c), c.y):
            return False
        if consistent(c):
            for x in c.m(preimage, c.f, c.f.codomain.singleton(c.y)):
                if via_fibers != _img(c, _hood(c, hood, c.R, x)):
                    return False
        return True

    return conclusion


# -- approximations -----------------------------------------------------------


def _saturated(c: Case) -> bool:
    return c.m(preimage, c.f, _img(c, c.X)) == c.X


def _lower_pair(c: Case):
    return _img(c, c.m(lower_approx, c.R, c.X)), c.m(lower_approx, _fR(c), _img(c, c.X))


def _upper_pair(c: Case):
    return _img(c, c.m(upper_approx, c.R, c.X)), c.m(upper_approx, _fR(c), _img(c, c.X))


def _surjective(c: Case) -> bool:
    return c.m(is_surjective, c.f)


def _old_definable_claim(c: Case) -> bool:
    pushed, approx = _lower_pair(c)
    return pushed == approx == _img(c, c.X)


def _old_upper_claim(c: Case) -> bool:
    pushed, approx = _upper_pair(c)
    return pushed >= approx


_LAWS = [
    Law(
        "T2.1a",
        "f is predecessor-consistent w.r.t. R iff it is type-1 consistent",
        _pred,
        lambda c: c.m(is_type1_consistent, c.f, c.R),
        iff=True,
    ),
    Law(
        "T2.1b",
        "f is successor-consistent w.r.t. R iff it is type-2 consistent",
        _succ,
        lambda c: c.m(is_type2_consistent, c.f, c.R),
        iff=True,
    ),
    Law(
        "T2.2",
        "R reflexive and transitive: equal predecessor sets iff equal successor "
        "sets, so both consistency notions coincide",
        lambda c: c.m(is_reflexive, c.R) and c.m(is_transitive, c.R),
        _preorder_hoods,
    ),
    Law(
        "T2.3a",
        "f predecessor-consistent w.r.t. R or Q: f((R&Q)_s(x)) = f(R_s(x)) & f(Q_s(x)) for all x",
        lambda c: _pred(c) or _pred(c, c.Q),
        _intersection_image(succ_neighborhood),
        axes=("Q",),
    ),
    Law(
        "T2.3b",
        "f successor-consistent w.r.t. R or Q: f((R&Q)_p(x)) = f(R_p(x)) & f(Q_p(x)) for all x",
        lambda c: _succ(c) or _succ(c, c.Q),
        _intersection_image(pred_neighborhood),
        axes=("Q",),
    ),
    Law(
        "P2.1",
        "predecessor-consistent w.r.t. R iff successor-consistent w.r.t. R^-1, and dually",
        _always,
        _inverse_duality,
    ),
    Law(
        "P2.2",
        "any f: f((R|Q)_p(x)) = f(R_p(x)) | f(Q_p(x)) for all x, and the successor analogue",
        _always,
        _union_image,
        axes=("Q",),
    ),
    Law(
        "C2.1",
        "R symmetric: predecessor- and successor-consistency coincide",
        lambda c: c.m(is_symmetric, c.R),
        lambda c: _pred(c) == _succ(c),
    ),
    Law(
        "T2.4a",
        "predecessor-consistent iff f^-1(f(R_s(x))) = R_s(x) for every x",
        _pred,
        lambda c: _saturates(c, succ_neighborhood),
        iff=True,
    ),
    Law(
        "T2.4b",
        "successor-consistent iff f^-1(f(R_p(x))) = R_p(x) for every x",
        _succ,
        lambda c: _saturates(c, pred_neighborhood),
        iff=True,
    ),
    Law(
        "D3.1≡3.2",
        "pair-image and union-of-products forms of the induced and pulled-back "
        "relations agree",
        _always,
        _two_routes,
        axes=("S",),
        aliases=("D3.1=3.2", "D3.1==3.2", "D3.1"),
    ),
    Law(
        "T3.1",
        "R transitive and f successor-consistent: f(R) is transitive",
        lambda c: c.m(is_transitive, c.R) and _succ(c),
        lambda c: c.m(is_transitive, _fR(c)),
    ),
    Law(
        "T3.2c1",
        "f pred- and succ-consistent w.r.t. R: f(R&Q) = f(R) & f(Q)",
        lambda c: _pred(c) and _succ(c),
        _induce_meets,
        axes=("Q",),
        aliases=("T3.2(c1)",),
    ),
    Law(
        "T3.2c2",
        "f pred- and succ-consistent w.r.t. Q: f(R&Q) = f(R) & f(Q)",
        lambda c: _pred(c, c.Q) and _succ(c, c.Q),
        _induce_meets,
        axes=("Q",),
        aliases=("T3.2(c2)",),
    ),
    Law(
        "T3.2c3",
        "f pred-consistent w.r.t. R and succ-consistent w.r.t. Q: f(R&Q) = f(R) & f(Q)",
        lambda c: _pred(c) and _succ(c, c.Q),
        _induce_meets,
        axes=("Q",),
        aliases=("T3.2(c3)",),
    ),
    Law(
        "T3.2c4",
        "f succ-consistent w.r.t. R and pred-consistent w.r.t. Q: f(R&Q) = f(R) & f(Q)",
        lambda c: _succ(c) and _pred(c, c.Q),
        _induce_meets,
        axes=("Q",),
        aliases=("T3.2(c4)",),
    ),
    Law(
        "T3.3",
        "pulling back f(R) returns R iff f is pred- and succ-consistent w.r.t. R",
        lambda c: _pred(c) and _succ(c),
        lambda c: c.m(inverse_induce, c.f, _fR(c)) == c.R,
        iff=True,
    ),
    Law(
        "T3.4p",
        "predecessors in f(R) of y are the union of f(R_p(x')) over the fiber of y; "
        "f(R_p(x)) itself when f is predecessor-consistent",
        _always,
        _induced_hood(pred_neighborhood, induced_pred_neighborhood, _pred),
        axes=("y",),
    ),
    Law(
        "T3.4s",
        "successors in f(R) of y are the union of f(R_s(x')) over the fiber of y; "
        "f(R_s(x)) itself when f is successor-consistent",
        _always,
        _induced_hood(succ_neighborhood, induced_succ_neighborhood, _succ),
        axes=("y",),
    ),
    Law(
        "T3.6.1",
        "f successor-consistent: f(lower_R X) <= lower_f(R) f(X)",
        _succ,
        lambda c: _lower_pair(c)[0] <= _lower_pair(c)[1],
        axes=("X",),
    ),
    Law(
        "T3.6.2",
        "f surjective and f^-1(f(X)) = X: lower_f(R) f(X) <= f(lower_R X)",
        lambda c: _surjective(c) and _saturated(c),
        lambda c: _lower_pair(c)[1] <= _lower_pair(c)[0],
        axes=("X",),
        inner_hypothesis=True,
    ),
    Law(
        "T3.6.3",
        "f surjective, successor-consistent and f^-1(f(X)) = X: "
        "f(lower_R X) = lower_f(R) f(X)",
        lambda c: _surjective(c) and _succ(c) and _saturated(c),
        lambda c: _lower_pair(c)[0] == _lower_pair(c)[1],
        axes=("X",),
        inner_hypothesis=True,
    ),
    Law(
        "T3.6.4",
        "any f: f(upper_R X) <= upper_f(R) f(X)",
        _always,
        lambda c: _upper_pair(c)[0] <= _upper_pair(c)[1],
        axes=("X",),
    ),
    Law(
        "T3.6.5",
        "f predecessor-consistent: f(upper_R X) = upper_f(R) f(X)",
        _pred,
        lambda c: _upper_pair(c)[0] == _upper_pair(c)[1],
        axes=("X",),
    ),
    Law(
        "F3.5.2",
        "claimed: f pred- and succ-consistent and X definable gives "
        "f(lower_R X) = lower_f(R) f(X) = f(X)",
        lambda c: _pred(c) and _succ(c) and c.m(is_definable, c.R, c.X),
        _old_definable_claim,
        axes=("X",),
        expected_valid=False,
        inner_hypothesis=True,
    ),
    Law(
        "F3.5.4",
        "claimed: f successor-consistent gives f(upper_R X) >= upper_f(R) f(X)",
        _succ,
        _old_upper_claim,
        axes=("X",),
        expected_valid=False,
    ),
]

REGISTRY: dict[str, Law] = {law.id: law for law in _LAWS}
_ALIASES = {alias: law.id for law in _LAWS for alias in law.aliases}


def get_law(law_id: str) -> Law:
    key = _ALIASES.get(law_id, law_id)
    try:
        return REGISTRY[key]
    except KeyError:
        raise UnknownLawError(f"unknown law {law_id!r}") from None


def law_ids() -> list[str]:
    return list(REGISTRY)
