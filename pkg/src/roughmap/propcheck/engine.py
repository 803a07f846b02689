"""Exhaustive and seeded sweeps of the law registry over small universes."""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from ..relation import BinaryRelation, Universe, UniverseError
from .enumeration import MAX_DOMAIN, mapping_from_index
from .laws import Case, Instance, Law, Memo, get_law

log = logging.getLogger(__name__)

DEFAULT_CAP = 10**8
MAX_BUDGET_CODOMAIN = 4


class BudgetExceeded(UniverseError):
    """The requested exhaustive sweep is larger than the case cap."""

    def __init__(self, law_id: str, cases: int, cap: int):
        super().__init__(f"{law_id}: exhaustive sweep needs {cases} cases, cap is {cap}")
        self.cases = cases
        self.cap = cap


@dataclass(frozen=True)
class EnumerationBudget:
    """How much of the case space a sweep covers.

    Without ``sample`` every relation and mapping is enumerated. With
    ``sample=k`` the sweep draws ``k`` (R, f, Q, S) tuples from a seeded
    generator; subsets and points are still enumerated in full.
    """

    n: int = 3
    m: int = 2
    sample: Optional[int] = None
    seed: Optional[int] = None
    cap: int = DEFAULT_CAP
    workers: int = field(default=1, compare=False)

    def __post_init__(self):
        for name, value, hi in (("n", self.n, MAX_DOMAIN), ("m", self.m, MAX_BUDGET_CODOMAIN)):
            if not isinstance(value, int) or not 1 <= value <= hi:
                raise UniverseError(f"budget {name} must be in 1..{hi}, got {value!r}")
        if self.sample is not None:
            if self.sample < 1:
                raise UniverseError("sample count must be positive")
            if self.seed is None:
                raise UniverseError("sampled budgets need an explicit seed")
        elif self.seed is not None:
            raise UniverseError("a seed only makes sense together with a sample count")
        if self.workers < 1:
            raise UniverseError("workers must be at least 1")

    @property
    def sampled(self) -> bool:
        return self.sample is not None

    def describe(self) -> str:
        mode = f"sampled {self.sample} (seed {self.seed})" if self.sampled else "exhaustive"
        return f"n={self.n}, m={self.m}, {mode}"


def _inner_sizes(law: Law, n: int, m: int) -> int:
    size = 1
    for axis in law.inner_axes:
        size *= {"X": 1 << n, "y": m}[axis]
    return size


def case_count(law: Union[Law, str], budget: EnumerationBudget) -> int:
    law = get_law(law) if isinstance(law, str) else law
    n, m = budget.n, budget.m
    inner = _inner_sizes(law, n, m)
    if budget.sampled:
        return budget.sample * inner
    outer = (1 << (n * n)) * m**n
    if "Q" in law.axes:
        outer *= 1 << (n * n)
    if "S" in law.axes:
        outer *= 1 << (m * m)
    return outer * inner


@dataclass(eq=False)
class LawReport:
    law: str
    budget: EnumerationBudget
    cases_checked: int
    hypothesis_hits: int
    violations: int
    first_witness: Optional[Instance] = None
    elapsed: float = 0.0

    @property
    def expected_valid(self) -> bool:
        return get_law(self.law).expected_valid

    @property
    def status(self) -> str:
        if self.expected_valid:
            if self.violations:
                return "FAIL"
            return "PASS" if self.hypothesis_hits else "INCONCLUSIVE"
        return "FALSIFIED" if self.violations else "NOT FALSIFIED"

    @property
    def expectation_met(self) -> bool:
        return self.status in ("PASS", "FALSIFIED")

    def witness_json(self) -> Optional[str]:
        if self.first_witness is None:
            return None
        return self.first_witness.to_document().dumps()

    def _key(self):
        return (
            self.law,
            self.budget,
            self.cases_checked,
            self.hypothesis_hits,
            self.violations,
            self.witness_json(),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LawReport):
            return NotImplemented
        return self._key() == other._key()

    def __repr__(self) -> str:
        return (
            f"LawReport({self.law}: {self.status}, cases={self.cases_checked}, "
            f"hits={self.hypothesis_hits}, violations={self.violations})"
        )


@dataclass
class _Tally:
    cases: int = 0
    hits: int = 0
    violations: int = 0
    witness_at: Optional[tuple] = None
    witness: Optional[Instance] = None

    def merge(self, other: "_Tally") -> None:
        self.cases += other.cases
        self.hits += other.hits
        self.violations += other.violations
        if other.witness_at is not None and (
            self.witness_at is None or other.witness_at < self.witness_at
        ):
            self.witness_at, self.witness = other.witness_at, other.witness


def _draw_samples(budget: EnumerationBudget) -> list[tuple[int, int, int, int]]:
    # R, f, Q, S are always drawn together so every law sees the same (R, f)
    n, m = budget.n, budget.m
    rng = np.random.default_rng(budget.seed)
    hi = (1 << (n * n), m**n, 1 << (n * n), 1 << (m * m))
    return [tuple(int(rng.integers(0, h)) for h in hi) for _ in range(budget.sample)]


def _outer(law: Law, budget: EnumerationBudget, lo: int, hi: int) -> Iterator[tuple]:
    """Yield ``(position, r, q, fi, s)`` in enumeration order over ``[lo, hi)``."""
    n, m = budget.n, budget.m
    if budget.sampled:
        for k, (r, fi, q, s) in enumerate(_draw_samples(budget)[lo:hi], start=lo):
            yield (k,), r, (q if "Q" in law.axes else None), fi, (s if "S" in law.axes else None)
        return
    qs = range(1 << (n * n)) if "Q" in law.axes else (None,)
    ss = range(1 << (m * m)) if "S" in law.axes else (None,)
    for r in range(lo, hi):
        for q in qs:
            for fi in range(m**n):
                for s in ss:
                    yield (r, q or 0, fi, s or 0), r, q, fi, s


def _sweep(
    law: Law, budget: EnumerationBudget, lo: int, hi: int, stop_at_first: bool = False
) -> _Tally:
    n, m = budget.n, budget.m
    U = Universe.canonical(n, "u")
    V = Universe.canonical(m, "v")
    memo = Memo()
    case = Case(memo)
    mappings = {}

    axis_values = {
        "X": list(U.all_subsets()),
        "y": list(range(m)),
    }
    inner_axes = law.inner_axes
    inner = list(itertools.product(*(axis_values[a] for a in inner_axes)))
    hyp_outer = not law.inner_hypothesis
    hypothesis, conclusion, iff = law.hypothesis, law.conclusion, law.iff
    tally = _Tally()

    for position, r, q, fi, s in _outer(law, budget, lo, hi):
        f = mappings.get(fi)
        if f is None:
            f = mappings[fi] = mapping_from_index(U, V, fi)
        case.f = f
        case.R = memo(BinaryRelation.from_code, U, r)
        case.Q = None if q is None else memo(BinaryRelation.from_code, U, q)
        case.S = None if s is None else memo(BinaryRelation.from_code, V, s)
        if hyp_outer:
            hyp = bool(hypothesis(case))
            if not hyp and not iff:
                tally.cases += len(inner)
                continue
        for k, values in enumerate(inner):
            for axis, value in zip(inner_axes, values):
                setattr(case, axis, value)
            if not hyp_outer:
                hyp = bool(hypothesis(case))
            tally.cases += 1
            if iff:
                tally.hits += hyp
                violated = hyp != bool(conclusion(case))
            elif hyp:
                tally.hits += 1
                violated = not conclusion(case)
            else:
                continue
            if violated:
                tally.violations += 1
                if tally.witness_at is None:
                    tally.witness_at = position + (k,)
                    tally.witness = Instance.from_case(case, law.axes)
                    if stop_at_first:
                        return tally
    return tally


def _sweep_by_id(law_id: str, budget: EnumerationBudget, lo: int, hi: int, stop: bool) -> _Tally:
    return _sweep(get_law(law_id), budget, lo, hi, stop)


def _run(law: Law, budget: EnumerationBudget, stop_at_first: bool) -> _Tally:
    total = budget.sample if budget.sampled else 1 << (budget.n * budget.n)
    workers = min(budget.workers, total)
    if workers == 1:
        return _sweep(law, budget, 0, total, stop_at_first)
    bounds = np.linspace(0, total, workers + 1).astype(int)
    tally = _Tally()
    with ProcessPoolExecutor(workers) as pool:
        futures = [
            pool.submit(_sweep_by_id, law.id, budget, int(lo), int(hi), stop_at_first)
            for lo, hi in zip(bounds[:-1], bounds[1:])
        ]
        for fut in futures:
            tally.merge(fut.result())
    return tally


def _prepare(law: Union[Law, str], budget: Optional[EnumerationBudget]) -> tuple[Law, EnumerationBudget]:
    law = get_law(law) if isinstance(law, str) else law
    budget = budget or EnumerationBudget()
    if not budget.sampled:
        cases = case_count(law, budget)
        if cases > budget.cap:
            raise BudgetExceeded(law.id, cases, budget.cap)
    return law, budget


def check_law(law: Union[Law, str], budget: Optional[EnumerationBudget] = None) -> LawReport:
    """Sweep one law over the budget and tally hypothesis hits and violations."""
    law, budget = _prepare(law, budget)
    start = time.perf_counter()
    tally = _run(law, budget, stop_at_first=False)
    elapsed = time.perf_counter() - start
    log.debug("%s over %s: %d cases in %.2fs", law.id, budget.describe(), tally.cases, elapsed)
    return LawReport(
        law.id, budget, tally.cases, tally.hits, tally.violations, tally.witness, elapsed
    )


def find_counterexample(
    law: Union[Law, str], budget: Optional[EnumerationBudget] = None
) -> Optional[Instance]:
    """First violating instance in enumeration order, or None."""
    law, budget = _prepare(law, budget)
    witness = _run(law, budget, stop_at_first=True).witness
    if witness is not None and law.expected_valid:
        log.error("law %s expected valid but has a counterexample", law.id)
    return witness


def check_laws(
    laws: Iterable[Union[Law, str]], budget: Optional[EnumerationBudget] = None
) -> Iterator[LawReport]:
    for law in laws:
        yield check_law(law, budget)
