"""Hypothesis strategies for small random spaces."""

from hypothesis import strategies as st

from roughmap import FiniteMapping, Universe, make_relation


@st.composite
def spaces(draw, max_n=4, max_m=3):
    """(f, R, Q, X) on small random universes, drawn as pair lists and targets."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    U = Universe.canonical(n, "u")
    V = Universe.canonical(m, "v")
    cells = st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n)
    R = make_relation(U, draw(cells))
    Q = make_relation(U, draw(cells))
    f = FiniteMapping(U, V, draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)))
    X = U.subset(draw(st.sets(st.integers(0, n - 1))))
    return f, R, Q, X


def as_pairs(R):
    return set(R.labeled_pairs())


def as_dict(f):
    return f.assignment()
