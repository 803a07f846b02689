import pytest
from hypothesis import given

import naive
from roughmap import (
    FiniteMapping,
    Universe,
    UniverseError,
    fiber,
    image,
    image_of_intersection_check,
    intersect,
    is_injective,
    is_predecessor_consistent,
    is_successor_consistent,
    is_surjective,
    is_type1_consistent,
    is_type2_consistent,
    predecessor_witness,
    preimage,
    pred_neighborhood,
    succ_neighborhood,
    successor_witness,
    type1_witness,
    type2_witness,
)
from strategies import as_dict, as_pairs, spaces

# verdicts on the seven-element example: (pred, succ)
EXPECTED = {"f1": (True, False), "f2": (False, True), "f3": (True, True)}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_example_classification(example, name):
    f, R = example.mappings[name], example.relations["R"]
    pred, succ = EXPECTED[name]
    assert is_predecessor_consistent(f, R) is pred
    assert is_successor_consistent(f, R) is succ
    assert is_type1_consistent(f, R) is pred
    assert is_type2_consistent(f, R) is succ


def test_example_witnesses(example):
    R, U = example.relations["R"], example.universes["U"]
    w = successor_witness(example.mappings["f1"], R)
    assert w.describe(U) == "x2 and x3 share an image but R_s(x2) and R_s(x3) differ at x5"
    w = predecessor_witness(example.mappings["f2"], R)
    assert (U.label(w.x), U.label(w.y), U.label(w.element)) == ("x4", "x5", "x2")
    assert predecessor_witness(example.mappings["f1"], R) is None


def test_type_witnesses_name_a_split_fiber(example):
    R, U = example.relations["R"], example.universes["U"]
    w = type1_witness(example.mappings["f2"], R)
    # fiber {x4, x5} of x4 is split by R_s(x2) = {x4}
    assert w.describe(U) == "fiber of x4 meets R_s(x2) but x5 escapes it"
    w = type2_witness(example.mappings["f1"], R)
    assert w.describe(U) == "x3 shares the image of x2 but R_s(x2) and R_s(x3) differ at x5"


def test_from_assignment_requires_totality():
    U, V = Universe(["a", "b"]), Universe(["p"])
    with pytest.raises(UniverseError, match="not total"):
        FiniteMapping.from_assignment(U, V, {"a": "p"})
    with pytest.raises(UniverseError):
        FiniteMapping(U, V, [0, 1])


def test_identity_and_set_functions(example):
    U = example.universes["U"]
    idU = FiniteMapping.identity(U)
    assert is_injective(idU) and is_surjective(idU)
    f1 = example.mappings["f1"]
    assert not is_injective(f1) and not is_surjective(f1)  # y3 is missed
    assert image(f1, U.subset(["x2", "x3", "x7"])).labels == ["y2", "y6"]
    V = example.universes["V"]
    assert preimage(f1, V.subset(["y2", "y3"])).labels == ["x2", "x3"]
    assert fiber(f1, "x6").labels == ["x6", "x7"]


def test_intersection_check_sides(example):
    f, R = example.mappings["f1"], example.relations["R"]
    E = example.relations["E"]
    left, right = image_of_intersection_check(f, R, R, "x3")
    assert left == right
    left, right = image_of_intersection_check(f, R, E, "x3", side="pred")
    assert left == right == example.universes["V"].empty()
    with pytest.raises(ValueError):
        image_of_intersection_check(f, R, R, "x3", side="both")


@given(spaces())
def test_consistency_matches_reference(space):
    f, R, _, _ = space
    pairs, fd = as_pairs(R), as_dict(f)
    assert is_predecessor_consistent(f, R) == naive.consistent(fd, lambda x: naive.pred(pairs, x))
    assert is_successor_consistent(f, R) == naive.consistent(fd, lambda x: naive.succ(pairs, x))
    assert is_type1_consistent(f, R) == naive.type1(fd, pairs)
    assert is_type2_consistent(f, R) == naive.type2(fd, pairs)


@given(spaces())
def test_witness_is_genuine(space):
    f, R, _, _ = space
    for finder, hood in ((predecessor_witness, pred_neighborhood), (successor_witness, succ_neighborhood)):
        w = finder(f, R)
        if w is None:
            continue
        assert f.targets[w.x] == f.targets[w.y]
        a, b = hood(R, w.x), hood(R, w.y)
        assert (w.element in a) != (w.element in b)


@given(spaces())
def test_image_preimage_match_reference(space):
    f, _, _, X = space
    fd = as_dict(f)
    fX = image(f, X)
    assert set(fX.labels) == naive.image(fd, set(X.labels))
    assert set(preimage(f, fX).labels) == naive.preimage(fd, set(fX.labels))
    assert X <= preimage(f, fX)


@given(spaces())
def test_intersection_image_is_always_contained(space):
    f, R, Q, _ = space
    for x in f.domain:
        for side in ("succ", "pred"):
            left, right = image_of_intersection_check(f, R, Q, x, side)
            assert left <= right


@given(spaces())
def test_intersection_image_check_uses_intersection(space):
    f, R, Q, _ = space
    RQ = intersect(R, Q)
    for x in f.domain:
        left, _ = image_of_intersection_check(f, R, Q, x)
        assert left == image(f, succ_neighborhood(RQ, x))
