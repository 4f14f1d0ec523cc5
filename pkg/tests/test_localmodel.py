from fractions import Fraction as F
from math import gcd
from functools import reduce

import pytest
from hypothesis import given

from cxone import exactlin as el
from cxone.cones import Blocker, Separator, cone_contains, independent_subsets, strict_separator
from cxone.localmodel import (
    LocalModel,
    NotComplexityOne,
    classify,
    is_exceptional,
    is_tall,
    moment_cone,
    sign_normalized,
    weights_from_xi,
    xi_from_weights,
)
from oracles import projection_onto_perp
from strategies import nonzero_xi


def test_weights_from_xi_examples():
    assert weights_from_xi((1, 1)) == ((F(1, 2), F(-1, 2)), (F(-1, 2), F(1, 2)))
    assert weights_from_xi((1,)) == ((F(0),),)
    w = weights_from_xi((2, -1))
    assert w == ((F(1, 5), F(2, 5)), (F(2, 5), F(4, 5)))
    assert el.lincomb([F(2), F(-1)], w, 2) == (0, 0)
    with pytest.raises(ValueError):
        weights_from_xi((0, 0))


def test_xi_from_weights_examples():
    assert xi_from_weights([(1,), (-1,)]) == (1, 1)
    assert xi_from_weights([(-1,), (-2,)]) == (2, -1)
    assert xi_from_weights([(0,), (1,)]) == (1, 0)
    with pytest.raises(NotComplexityOne, match="not a complexity-one germ"):
        xi_from_weights([(1, 0), (0, 1)])
    with pytest.raises(NotComplexityOne):
        xi_from_weights([(0,), (0,)])


@pytest.mark.parametrize("xi, tall, exc", [
    ((1, 1), True, True),
    ((2, -1), False, True),
    ((2,), True, True),
    ((1, 0), True, False),
    ((1,), True, False),
    ((-1,), True, False),
    ((0, -1), True, False),
])
def test_predicates(xi, tall, exc):
    m = LocalModel(1, xi, (0,))
    assert is_tall(m) == tall and is_exceptional(m) == exc
    c = classify(m)
    assert (c.tall, c.short, c.exceptional) == (tall, not tall, exc)


def test_torsion_kept():
    m = LocalModel(1, (2,), (0,))
    assert classify(m).xi_normalized == (2,)
    assert sign_normalized((-2, 4)) == (2, -4)


def test_model_checks():
    with pytest.raises(ValueError):
        LocalModel(1, (1, 1), (0,), weights=((1,), (1,)))
    with pytest.raises(ValueError):
        LocalModel(1, (0, 0), (0,))
    with pytest.raises(el.DimensionError):
        LocalModel(2, (1, 1), (0,))
    with pytest.raises(el.DimensionError):
        LocalModel(1, (1, 1), (0,), weights=((1,), (-1,)), h_embedding=((1, 0),))
    with pytest.raises(NotComplexityOne):
        LocalModel(1, (1, 1), (0,), weights=((0,), (0,)))


def test_moment_cone_examples():
    q = moment_cone(LocalModel(1, (1, -1), (2,), ((-1,), (-1,)), ((1,),)))
    assert q.apex == (2,) and q.subspace_basis == () and q.rays == ((-1,), (-1,))
    assert not cone_contains(q, (F(5, 2),)) and cone_contains(q, (-40,))
    n = moment_cone(LocalModel(1, (1, 0), (0,), ((0,), (1,)), ((1,),)))
    assert cone_contains(n, (3,)) and not cone_contains(n, (F(-1, 9),))
    free = moment_cone(LocalModel(1, (1,), (5,), h_embedding=()))
    assert cone_contains(free, (-1000,)) and len(free.subspace_basis) == 1


def test_moment_cone_lifts_through_embedding():
    # h = 1 inside a 2-torus along (1, 1)
    m = LocalModel(2, (1, 1), (0, 0), ((2,), (-2,)), ((1, 1),))
    c = moment_cone(m)
    assert c.rays == ((1, 1), (-1, -1))
    assert len(c.subspace_basis) == 1 and el.dot(c.subspace_basis[0], (1, 1)) == 0
    assert cone_contains(c, (7, -3))


def test_moment_cone_needs_embedding():
    with pytest.raises(ValueError):
        moment_cone(LocalModel(1, (1, 1), (0,)))


@given(nonzero_xi)
def test_round_trip(xi):
    g = reduce(gcd, map(abs, xi))
    assert xi_from_weights(weights_from_xi(xi)) == sign_normalized(tuple(x // g for x in xi))


@given(nonzero_xi)
def test_weights_are_projections(xi):
    ws = weights_from_xi(xi)
    assert [list(w) for w in ws] == projection_onto_perp(xi)
    assert el.lincomb([F(x) for x in xi], ws, len(xi)) == el.zero(len(xi))


@given(nonzero_xi)
def test_separator_criterion(xi):
    m = LocalModel(1, xi, (0,))
    full = strict_separator(m.weights)
    if len(xi) > 1:
        assert isinstance(full, Blocker) == is_tall(m)
    if is_tall(m):
        for I in independent_subsets(m.weights):
            assert isinstance(strict_separator([m.weights[i] for i in I], len(xi)), Separator)


@given(nonzero_xi)
def test_short_implies_exceptional(xi):
    c = classify(LocalModel(1, xi, (0,)))
    assert c.tall or c.exceptional
