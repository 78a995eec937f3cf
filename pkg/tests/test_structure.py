import itertools
from functools import lru_cache

import pytest
from hypothesis import given

from zinbiel import catalog
from zinbiel.errors import DimensionError
from zinbiel.exactlin import Subspace, rank
from zinbiel.structure import (annihilator, cube_zero, dim_bound, dim_bound_check, generator_count,
                               left_normed_powers, nil_index, nil_report, odd_generator_grading_check, powers)
from zinbiel.superalgebra import SuperAlgebra

from corpus import algebras


@lru_cache(maxsize=None)
def bracketings(t):
    if t == 1:
        return ("x",)
    out = []
    for p in range(1, t):
        for left in bracketings(p):
            for right in bracketings(t - p):
                out.append((left, right))
    return tuple(out)


def brute_power(a, t):
    """Span of every bracketed product of t basis vectors."""
    n = a.dim
    unit = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]

    def value(tree, it):
        if tree == "x":
            return unit[next(it)]
        left = value(tree[0], it)
        right = value(tree[1], it)
        return a.mul_vectors(left, right)

    vecs = []
    for tree in bracketings(t):
        for tup in itertools.product(range(n), repeat=t):
            v = value(tree, iter(tup))
            if any(v):
                vecs.append(v)
    return Subspace(vecs, n)


@pytest.mark.parametrize("name, a", list(catalog.instances(role="classification")))
def test_powers_match_bracketing_enumeration(name, a):
    P = powers(a, 4)
    for t in range(1, 5):
        if a.dim ** t * len(bracketings(t)) > 50000:
            continue
        assert P[t] == brute_power(a, t), (name, t)


@given(algebras(3, 1))
def test_powers_random(a):
    P = powers(a, 4)
    for t in (2, 3, 4):
        assert P[t] == brute_power(a, t)


@given(algebras(3, 1))
def test_left_normed_powers_inside_powers(a):
    P, L = powers(a, 4), left_normed_powers(a, 4)
    for t in range(1, 5):
        assert P[t].contains_space(L[t])


def test_nil_report_examples():
    r = nil_report(catalog.get("N5_1"))
    assert (r.nil_index, r.step_class) == (3, "2-step")
    r = nil_report(catalog.get("Z8_1"))
    assert (r.nil_index, r.step_class, r.power_dims) == (4, "3-step", (8, 6, 2, 0))
    r = nil_report(SuperAlgebra.zero(1))
    assert (r.nil_index, r.step_class) == (2, "abelian")
    idem = SuperAlgebra.from_products(1, 0, "e1*e1 = e1")
    r = nil_report(idem)
    assert r.nil_index is None and r.step_class == "other"
    assert r.to_dict()["nil_index"] is None


def test_cube_zero_examples():
    assert cube_zero(catalog.get("Z7_1"))
    assert not cube_zero(SuperAlgebra.from_products(1, 0, "e1*e1 = e1"))
    for name, a in catalog.instances(role="classification"):
        assert cube_zero(a), name


def test_annihilator_examples():
    a = catalog.get("N3_1")
    ann = annihilator(a)
    assert ann.space == Subspace([(0, 1, 0), (0, 0, 1)], 3)
    assert annihilator(SuperAlgebra.zero(2, 1)).dim == 3
    z = catalog.get("Z6_1")
    assert z.basis("e6").coeffs in annihilator(z).space
    g = annihilator(catalog.get("OneGen_1_1"))
    assert len(g.even) == 1 and g.odd == ()


@given(algebras(3, 2))
def test_annihilator_definition(a):
    ann = annihilator(a).space
    n = a.dim
    units = [a.basis(i).coeffs for i in range(n)]
    for v in ann.basis:
        for u in units:
            assert not any(a.mul_vectors(v, u)) and not any(a.mul_vectors(u, v))
    # dimension count from the dense constraint matrix: x annihilates iff sum_i x_i c[i][j][k] = 0 and
    # sum_i x_i c[j][i][k] = 0 for every j, k
    c = a.structure_tensor()
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    rows += [[c[j][i][k] for i in range(n)] for j in range(n) for k in range(n)]
    assert ann.dim == n - rank(rows)


def test_generator_count_and_bound():
    n6 = catalog.get("N6_1")
    assert generator_count(n6) == 2 and dim_bound(2) == 34 and dim_bound_check(n6)
    one = catalog.get("OneGen_2_0")
    assert generator_count(one) == 1 and dim_bound(1) == 3 and dim_bound_check(one)
    z8 = catalog.get("Z8_1")
    assert generator_count(z8) == 2 and z8.dim <= 34
    with pytest.raises(ValueError):
        generator_count(SuperAlgebra.from_products(1, 0, "e1*e1 = e1"))


def test_regrading_examples():
    r = odd_generator_grading_check(catalog.get("N3_2"))
    assert r and (r.algebra.n_even, r.algebra.n_odd) == (1, 2)
    r = odd_generator_grading_check(catalog.get("Z6_1"))
    assert not r
    assert r.parities[5] == 1
    r = odd_generator_grading_check(SuperAlgebra.zero(2))
    assert r and r.algebra.n_odd == 2
    with pytest.raises(DimensionError):
        odd_generator_grading_check(catalog.get("OneGen_1_1"))


def test_regrading_all_three_step_fail_and_two_step_pass():
    for name, a in catalog.instances(role="classification", ungraded_only=True):
        if a.dim < 3 or name == "N3_1":
            continue
        r = odd_generator_grading_check(a)
        assert bool(r) == (nil_index(a) <= 3), name
