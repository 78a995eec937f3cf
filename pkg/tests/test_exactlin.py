from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from zinbiel import exactlin as el
from zinbiel.errors import DimensionError

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(max_rows=5, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r)))


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def minor_rank(m):
    """Largest k with a nonzero k x k minor."""
    rows, cols = len(m), len(m[0])
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if leibniz_det([[m[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def test_rref_examples():
    red, piv = el.rref(el.identity(2))
    assert red == el.identity(2) and piv == [0, 1]
    red, piv = el.rref(el.matrix([[2, 4], [1, 2]]))
    assert red == el.matrix([[1, 2], [0, 0]]) and piv == [0]


def test_rank_random_5x7_against_minors():
    import random

    rng = random.Random(7)
    for _ in range(5):
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(7)] for _ in range(5)]
        if rng.random() < 0.5:
            m[4] = [a + b for a, b in zip(m[0], m[1])]
        assert el.rank(el.matrix(m)) == minor_rank(m)


@given(matrices(4, 5))
def test_rank_matches_minor_oracle(m):
    assert el.rank(el.matrix(m)) == minor_rank(m)


def test_kernel_examples():
    assert len(el.kernel(el.zeros(3, 3))) == 3
    assert el.kernel(el.identity(3)) == []
    ker = el.kernel(el.matrix([[1, 1, 0]]))
    assert len(ker) == 2
    assert el.vector([1, -1, 0]) in el.Subspace(ker, 3)


@given(matrices())
def test_kernel_vectors_are_annihilated_and_complete(m):
    M = el.matrix(m)
    ker = el.kernel(M)
    for v in ker:
        assert not any(el.matvec(M, v))
    assert len(ker) + el.rank(M) == len(m[0])


def test_solve_examples():
    b = el.vector([3, -1, 2])
    assert el.solve(el.identity(3), b) == b
    x = el.solve(el.matrix([[1, 1]]), [2])
    assert x[0] + x[1] == 2
    assert el.solve(el.matrix([[1], [1]]), [0, 1]) is None
    with pytest.raises(DimensionError):
        el.solve(el.identity(2), [1])


@given(matrices(), st.data())
def test_solve_consistent_systems(m, data):
    M = el.matrix(m)
    x0 = data.draw(st.lists(rationals, min_size=len(m[0]), max_size=len(m[0])))
    b = el.matvec(M, x0)
    x = el.solve(M, b)
    assert x is not None and el.matvec(M, x) == b


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_det_and_inverse(m):
    M = el.matrix(m)
    d = el.det(M)
    assert d == leibniz_det(m)
    if d:
        assert el.matmul(M, el.inverse(M)) == el.identity(len(m))
    else:
        with pytest.raises(ZeroDivisionError):
            el.inverse(M)


def test_subspace_examples():
    e1, e2 = el.vector([1, 0]), el.vector([0, 1])
    assert (el.Subspace([e1], 2) + el.Subspace([e2], 2)).dim == 2
    cap = el.Subspace([e1, el.vector([1, 1])], 2).intersect(el.Subspace([e2], 2))
    assert cap == el.Subspace([e2], 2)


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(rationals, min_size=n, max_size=n), max_size=4),
                        st.lists(st.lists(rationals, min_size=n, max_size=n), max_size=4))))
def test_subspace_dimension_formula(args):
    n, us, ws = args
    U, W = el.Subspace(us, n), el.Subspace(ws, n)
    cap = U.intersect(W)
    assert (U + W).dim == U.dim + W.dim - cap.dim
    for v in cap.basis:
        assert v in U and v in W


def test_subspace_rejects_wrong_length():
    with pytest.raises(DimensionError):
        el.Subspace([(1, 2)], 3)
