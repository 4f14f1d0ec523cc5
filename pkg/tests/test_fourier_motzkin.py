from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from cxone import exactlin as el
from cxone.fourier_motzkin import Feasible, Infeasible, feasible
from oracles import fm_feasible


def test_box():
    res = feasible([(1, 0), (-1, 0), (0, 1), (0, -1)], [1, 0, 1, 0], n=2)
    assert isinstance(res, Feasible)
    x, y = res.point
    assert 0 <= x <= 1 and 0 <= y <= 1


def test_infeasible_interval():
    res = feasible([(1,), (-1,)], [0, -1], n=1)  # x <= 0 and x >= 1
    assert isinstance(res, Infeasible) and not res
    assert all(v >= 0 for v in res.y)
    assert el.dot(res.y, (F(0), F(-1))) < 0


def test_inconsistent_equalities():
    res = feasible([], [], [(1, 1), (1, 1)], [0, 1], n=2)
    assert isinstance(res, Infeasible)


def test_equalities_fix_point():
    res = feasible([(-1, 0)], [0], [(1, 1)], [3], n=2)
    assert res and sum(res.point) == 3 and res.point[0] >= 0


systems = st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), max_size=6),
).flatmap(lambda p: st.tuples(st.just(p[0]), st.just(p[1]),
                              st.lists(st.integers(-6, 6), min_size=len(p[1]), max_size=len(p[1])))))


@given(systems)
def test_certificates_and_oracle(sys_):
    n, A, b = sys_
    res = feasible(A, b, n=n)
    # the oracle works with A x >= b, so negate
    assert bool(res) == fm_feasible([[-a for a in row] for row in A], [-c for c in b])
    if res:
        assert all(el.dot(row, res.point) <= c for row, c in zip(el.mat(A), b))
    else:
        assert all(v >= 0 for v in res.y)
        assert all(x == 0 for x in el.lincomb(res.y, el.mat(A), n))
        assert el.dot(res.y, el.vec(b)) < 0
