import pytest
from hypothesis import given

from zinbiel import catalog
from zinbiel.envelope import ENVELOPE_VARIETIES, grassmann_basis, grassmann_check, grassmann_envelope, wedge
from zinbiel.identities import in_variety

from corpus import algebras


def test_wedge_signs():
    assert wedge((0,), (1,)) == (1, (0, 1))
    assert wedge((1,), (0,)) == (-1, (0, 1))
    assert wedge((0,), (0,)) is None
    assert wedge((0, 2), (1,)) == (-1, (0, 1, 2))
    assert len(grassmann_basis(3)) == 8


def test_odd_one_generated_envelope():
    env = grassmann_envelope(catalog.get("OneGen_1_1"), 2)
    x = {label: env.basis(label) for label in env.labels}
    assert x["e2_g1"] * x["e2_g2"] == x["e1_g12"]
    assert x["e2_g2"] * x["e2_g1"] == -x["e1_g12"]
    assert (x["e2_g1"] * x["e2_g1"]).is_zero()


def test_ungraded_envelope_is_a_tensor_copy():
    a = catalog.get("Z6_1")
    env = grassmann_envelope(a, 3)
    assert env.dim == a.dim * 4
    for v in ENVELOPE_VARIETIES:
        assert bool(in_variety(env, v)) == bool(in_variety(a, v))


def test_rank_bound():
    with pytest.raises(ValueError):
        grassmann_envelope(catalog.get("N3_1"), 5)


@given(algebras(1, 2))
def test_envelope_agrees_on_random_superalgebras(a):
    table = grassmann_check(a, 3)
    assert all(row["agree"] for row in table.values()), table

