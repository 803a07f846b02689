import pytest
from hypothesis import given

import naive
from roughmap import (
    UniverseError,
    image,
    induce,
    induced_pred_neighborhood,
    induced_succ_neighborhood,
    inverse_induce,
    is_predecessor_consistent,
    is_successor_consistent,
    pred_neighborhood,
    preimage,
    succ_neighborhood,
)
from roughmap.propcheck.oracles import induce_by_products, inverse_induce_by_products
from strategies import as_dict, as_pairs, spaces

FORWARD = {("y1", "y2"), ("y2", "y4"), ("y2", "y5"), ("y4", "y6"), ("y5", "y6")}
ROUND_TRIP = naive.EXAMPLE_PAIRS | {("x2", "x5")}


def test_forward_on_example(example):
    fR = induce(example.mappings["f1"], example.relations["R"])
    assert set(fR.labeled_pairs()) == FORWARD
    assert fR == example.relations["f1R"]
    assert fR.universe is example.universes["V"]


def test_round_trip_on_example(example):
    f = example.mappings["f1"]
    back = inverse_induce(f, induce(f, example.relations["R"]))
    assert len(back) == 10
    assert set(back.labeled_pairs()) == ROUND_TRIP


def test_round_trip_is_exact_for_doubly_consistent(example):
    f, R = example.mappings["f3"], example.relations["R"]
    assert inverse_induce(f, induce(f, R)) == R


def test_universe_checks(example):
    f, R = example.mappings["f1"], example.relations["R"]
    with pytest.raises(UniverseError):
        inverse_induce(f, R)
    with pytest.raises(UniverseError):
        induce(f, example.relations["f1R"])


def test_induced_neighborhoods_off_range_are_empty(example):
    f, R = example.mappings["f1"], example.relations["R"]
    V = example.universes["V"]
    assert induced_succ_neighborhood(f, R, "y3") == V.empty()
    assert induced_pred_neighborhood(f, R, "y3") == V.empty()
    assert induced_succ_neighborhood(f, R, "y2").labels == ["y4", "y5"]
    assert induced_pred_neighborhood(f, R, "y6").labels == ["y4", "y5"]


@given(spaces())
def test_forward_matches_reference(space):
    f, R, _, _ = space
    assert as_pairs(induce(f, R)) == naive.push(as_dict(f), as_pairs(R))


@given(spaces())
def test_pullback_matches_reference(space):
    f, R, _, _ = space
    fR = induce(f, R)
    assert as_pairs(inverse_induce(f, fR)) == naive.pull(as_dict(f), as_pairs(fR))


@given(spaces())
def test_two_formulations_agree(space):
    f, R, _, _ = space
    fR = induce(f, R)
    assert induce_by_products(f, R) == fR
    assert inverse_induce_by_products(f, fR) == inverse_induce(f, fR)


@given(spaces())
def test_pullback_contains_original(space):
    f, R, _, _ = space
    assert R <= inverse_induce(f, induce(f, R))


@given(spaces())
def test_induced_neighborhoods_match_materialized(space):
    f, R, _, _ = space
    fR = induce(f, R)
    for y in f.codomain:
        assert induced_pred_neighborhood(f, R, y) == pred_neighborhood(fR, y)
        assert induced_succ_neighborhood(f, R, y) == succ_neighborhood(fR, y)


@given(spaces())
def test_consistent_neighborhood_is_image_of_any_representative(space):
    f, R, _, _ = space
    pred_ok, succ_ok = is_predecessor_consistent(f, R), is_successor_consistent(f, R)
    for x in f.domain:
        y = f.targets[x]
        if pred_ok:
            assert induced_pred_neighborhood(f, R, y) == image(f, pred_neighborhood(R, x))
        if succ_ok:
            assert induced_succ_neighborhood(f, R, y) == image(f, succ_neighborhood(R, x))


@given(spaces())
def test_pullback_neighborhood_is_preimage(space):
    f, R, _, _ = space
    fR = induce(f, R)
    back = inverse_induce(f, fR)
    for x in f.domain:
        assert succ_neighborhood(back, x) == preimage(f, succ_neighborhood(fR, f.targets[x]))
