import pytest
from hypothesis import given, strategies as st

from zinbiel import catalog
from zinbiel import exactlin as el
from zinbiel.errors import DimensionError, GradingError, PreconditionError
from zinbiel.identities import VarietyName, in_variety
from zinbiel.representations import (RepresentationPair, adjoint_pair, coadjoint_is_representation, coadjoint_pair,
                                     is_left_representation, is_representation, is_right_representation,
                                     split_extension, split_is_in_variety)
from zinbiel.structure import nil_index
from zinbiel.superalgebra import SuperAlgebra

from corpus import algebras, graded_corpus

KINDS = {"symmetric": is_representation, "left": is_left_representation, "right": is_right_representation}


def test_adjoint_examples():
    assert is_left_representation(catalog.get("N3_1"), adjoint_pair(catalog.get("N3_1")))
    assert is_right_representation(catalog.get("N4_3"), adjoint_pair(catalog.get("N4_3")))
    for name, a in catalog.instances(role="classification"):
        assert is_representation(a, adjoint_pair(a)), name


def test_zero_maps():
    for name in ("N3_1", "Z6_1", "OneGen_1_1"):
        a = catalog.get(name)
        for m in ((2, 0), (1, 1)):
            assert is_representation(a, RepresentationPair.zero(a, *m))


def test_coadjoint_examples():
    assert not is_left_representation(catalog.get("Z6_1"), coadjoint_pair(catalog.get("Z6_1")))
    assert not is_right_representation(catalog.get("Z7_1"), coadjoint_pair(catalog.get("Z7_1")))
    assert is_representation(catalog.get("N5_2"), coadjoint_pair(catalog.get("N5_2")))
    assert not is_representation(catalog.get("Z8_1"), coadjoint_pair(catalog.get("Z8_1")))
    zero = coadjoint_pair(SuperAlgebra.zero(2, 1))
    assert all(not any(any(r) for r in M) for M in zero.l + zero.r)


def test_coadjoint_criterion_on_graded_members():
    for name, a in graded_corpus():
        if in_variety(a, VarietyName.SymmetricZinbiel):
            assert coadjoint_is_representation(a) == (nil_index(a) <= 3), name


def test_split_extension_examples():
    a = catalog.get("N3_1")
    s = split_extension(a, RepresentationPair.zero(a, 1))
    assert s.dim == 4 and in_variety(s, VarietyName.SymmetricZinbiel)
    assert s.basis("e1") * s.basis("e1") == s.basis("e2")
    s = split_extension(a, adjoint_pair(a))
    assert s.dim == 6 and in_variety(s, VarietyName.SymmetricZinbiel)
    z = catalog.get("Z6_1")
    with pytest.raises(PreconditionError):
        split_extension(z, coadjoint_pair(z))


def test_split_extension_restricts_to_a_and_module_is_square_zero():
    a = catalog.get("Z6_1")
    s = split_extension(a, adjoint_pair(a))
    n = a.dim
    for (i, j), out in a.table.items():
        assert s.table[(i, j)] == out
    for i in range(n, 2 * n):
        for j in range(n, 2 * n):
            assert (i, j) not in s.table


def test_shape_and_grading_errors():
    a = catalog.get("OneGen_1_1")
    bad = RepresentationPair(1, 0, ((( 0,),),), ((( 0,),),))
    with pytest.raises(DimensionError):
        is_representation(a, bad)
    # an even basis vector acting by an odd map
    odd_map = el.matrix([[0, 1], [0, 0]])
    zero = el.zeros(2, 2)
    with pytest.raises(GradingError):
        is_representation(a, RepresentationPair(1, 1, (odd_map, zero), (zero, zero)))


def pairs(a: SuperAlgebra):
    """Random homogeneous pairs on a small module of a drawn grading."""
    @st.composite
    def build(draw):
        me = draw(st.integers(0, 2))
        mo = draw(st.integers(0 if me else 1, 1))
        m = me + mo
        mpar = [0] * me + [1] * mo

        def rand_map(p):
            return el.matrix([[draw(st.sampled_from((0, 0, 0, 1, -1))) if (mpar[r] + mpar[c]) % 2 == p else 0
                               for c in range(m)] for r in range(m)])

        r = tuple(rand_map(a.parity(i)) for i in range(a.dim))
        l = tuple(rand_map(a.parity(i)) for i in range(a.dim))
        return RepresentationPair(me, mo, r, l)

    return build()


@given(st.data())
def test_axioms_agree_with_split_oracle(data):
    source = data.draw(st.sampled_from(["N3_1", "N3_3", "OneGen_1_1", "OneGen_2_0", "random"]))
    a = data.draw(algebras(2, 1)) if source == "random" else catalog.get(source)
    rp = data.draw(pairs(a))
    for kind, check in KINDS.items():
        assert bool(check(a, rp)) == split_is_in_variety(a, rp, kind)


@pytest.mark.parametrize("name, a", list(graded_corpus())[:20])
def test_adjoint_and_coadjoint_against_split_oracle(name, a):
    for rp in (adjoint_pair(a), coadjoint_pair(a)):
        for kind, check in KINDS.items():
            assert bool(check(a, rp)) == split_is_in_variety(a, rp, kind), (name, kind)
