from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cxone import exactlin as el
from oracles import nullspace, rank as oracle_rank
from strategies import rational_matrix, rationals


def test_rank_examples():
    assert el.rank([(1, 0), (0, 1)]) == 2
    assert el.rank([(1, -1), (-2, 2)]) == 1
    assert el.rank([], 3) == 0


def test_kernel_examples():
    assert el.kernel_basis([(1, -1)]) == [(F(1), F(1))]
    (k,) = el.kernel_basis([(-1, -2)])
    assert el.primitive_integer_generator(k) == (2, -1)
    assert el.kernel_basis([(1, 0), (0, 1)]) == []


def test_primitive_generator_examples():
    assert el.primitive_integer_generator((F(1, 2), F(1, 2))) == (1, 1)
    assert el.primitive_integer_generator((-2, 1)) == (2, -1)
    assert el.primitive_integer_generator((4, 6)) == (2, 3)
    with pytest.raises(ValueError):
        el.primitive_integer_generator((0, 0))


def test_is_independent_examples():
    assert not el.is_independent([(1,), (-1,)])
    assert el.is_independent([(1, 0), (0, 1)])
    assert el.is_independent([])
    with pytest.raises(el.DimensionError):
        el.is_independent([(1, 0), (1,)])


def test_floats_refused():
    with pytest.raises(TypeError):
        el.to_rational(0.5)
    with pytest.raises(TypeError):
        el.vec([1, 0.25])
    with pytest.raises(TypeError):
        el.to_rational(True)


def test_rational_text():
    assert el.fmt_rational(F(3)) == "3"
    assert el.fmt_rational(F(-1, 2)) == "-1/2"
    assert el.to_rational("-1/2") == F(-1, 2)
    assert el.to_rational(" 4/6 ") == F(2, 3)


def test_solve():
    x, ker = el.solve([(1, 1), (1, -1)], (2, 0))
    assert x == (1, 1) and ker == []
    x, ker = el.solve([(1, 1)], (1,))
    assert el.matvec([(1, 1)], x) == (1,) and len(ker) == 1
    x, _ = el.solve([(1, 1), (2, 2)], (1, 3))
    assert x is None


@given(rational_matrix())
def test_rank_nullity(mn):
    m, n = mn
    ker = el.kernel_basis(m, n)
    assert el.rank(m, n) + len(ker) == n
    for k in ker:
        assert all(x == 0 for x in el.matvec(m, k)) if m else True


@given(rational_matrix())
def test_rank_matches_oracle(mn):
    m, n = mn
    assert el.rank(m, n) == oracle_rank(m, n)


@given(rational_matrix(max_rows=3, max_cols=4))
def test_kernel_dimension_matches_oracle(mn):
    m, n = mn
    if n == 0:
        return
    cols = [tuple(r[j] for r in m) for j in range(n)]
    expected = n if not m else len(nullspace(cols))
    assert len(el.kernel_basis(m, n)) == expected


@given(st.lists(rationals, min_size=1, max_size=5).filter(lambda v: any(v)), rationals.filter(lambda c: c != 0))
def test_generator_scale_invariant(v, c):
    g = el.primitive_integer_generator(v)
    assert el.primitive_integer_generator([c * x for x in v]) == g
    assert el.primitive_integer_generator(g) == g


@given(st.lists(rationals, max_size=6))
def test_text_round_trip(v):
    assert tuple(el.to_rational(el.fmt_rational(x)) for x in v) == tuple(v)
