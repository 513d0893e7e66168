import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cograded_hopf import errors as err
from cograded_hopf import group as grp

S3_PERMS = list(itertools.permutations(range(3)))


def test_z2():
    g = grp.from_table([[0, 1], [1, 0]])
    assert (g.order, g.identity, g.inverse) == (2, 0, (0, 1))


def test_s3_against_permutation_composition():
    table = oracles.permutation_table(S3_PERMS)
    g = grp.from_table(table)
    assert g.order == 6 and g.identity == 0 and not g.is_abelian()
    cycles = [i for i, p in enumerate(S3_PERMS) if oracles.element_order(table, 0, i) == 3]
    assert len(cycles) == 2
    a, b = cycles
    assert g.inverse[a] == b and g.inverse[b] == a
    assert oracles.isomorphic(grp.symmetric(3).table, table)


def test_no_inverse():
    with pytest.raises(err.NoInverse) as info:
        grp.from_table([[0, 1], [1, 1]])
    assert info.value.witness["p"] == 1


def test_no_identity():
    with pytest.raises(err.NoIdentity):
        grp.from_table([[1, 1], [1, 1]])


def test_not_associative_names_triple():
    # Latin square with identity 0 and inverses, but not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(err.NotAssociative) as info:
        grp.from_table(table)
    p, q, r = (info.value.witness[k] for k in ("p", "q", "r"))
    assert table[table[p][q]][r] != table[p][table[q][r]]


def test_klein_four():
    v = grp.direct_product(grp.cyclic(2), grp.cyclic(2))
    assert v.order == 4
    assert all(v.inverse[p] == p for p in v.elements)


def test_z2_times_z3_is_cyclic():
    g = grp.direct_product(grp.cyclic(2), grp.cyclic(3))
    assert max(g.element_order(p) for p in g.elements) == 6


def test_product_with_trivial():
    g = grp.symmetric(3)
    assert grp.direct_product(g, grp.trivial()).table == g.table


def test_semidirect_trivial_action_is_direct():
    g, h = grp.cyclic(2), grp.cyclic(3)
    sd = grp.semidirect_product(g, h, grp.trivial_action(g, h))
    assert sd.table == grp.direct_product(g, h).table


def test_semidirect_inversion_is_s3():
    g, h = grp.cyclic(2), grp.cyclic(3)
    sd = grp.semidirect_product(g, h, grp.inversion_action(g, h))
    assert not sd.is_abelian()
    assert oracles.isomorphic(sd.table, oracles.permutation_table(S3_PERMS))


def test_semidirect_convention():
    g, h = grp.cyclic(2), grp.cyclic(3)
    rho = grp.inversion_action(g, h)
    sd = grp.semidirect_product(g, h, rho)
    for p, x, q, y in itertools.product(range(2), range(3), range(2), range(3)):
        want = g.table[p][q] * 3 + h.table[rho[g.inverse[q]][x]][y]
        assert sd.table[p * 3 + x][q * 3 + y] == want


def test_action_not_automorphism():
    g, h = grp.cyclic(2), grp.cyclic(3)
    with pytest.raises(err.ActionNotAutomorphism):
        grp.semidirect_product(g, h, [(0, 1, 2), (1, 2, 0)])


def test_action_not_homomorphism():
    g, h = grp.cyclic(3), grp.cyclic(3)
    rho = [(0, 1, 2), (0, 2, 1), (0, 2, 1)]   # g^2 should act as id, not inversion
    with pytest.raises(err.ActionNotHomomorphism):
        grp.semidirect_product(g, h, rho)


def test_conjugation_action_is_valid():
    g = grp.symmetric(3)
    sd = grp.semidirect_product(g, g, grp.conjugation_action(g))
    assert sd.order == 36


@pytest.mark.parametrize("name,order", [("trivial", 1), ("z4", 4), ("c5", 5), ("s3", 6), ("klein", 4)])
def test_named(name, order):
    assert grp.named(name).order == order


def test_named_unknown():
    with pytest.raises(ValueError):
        grp.named("q8")


BASE_TABLES = [grp.cyclic(4).table, grp.symmetric(3).table, grp.named("v4").table, grp.cyclic(5).table]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(BASE_TABLES), st.data())
def test_corrupted_tables_rejected_exactly_when_not_groups(table, data):
    n = len(table)
    rows = [list(r) for r in table]
    for _ in range(data.draw(st.integers(1, 3))):
        i, j = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
        rows[i][j] = data.draw(st.integers(0, n - 1))
    if oracles.is_group(rows):
        grp.from_table(rows)
    else:
        with pytest.raises(err.GroupError):
            grp.from_table(rows)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["z2", "z3", "z4", "v4", "s3"]), st.sampled_from(["z2", "z3", "v4"]))
def test_semidirect_output_validates(gname, hname):
    g, h = grp.named(gname), grp.named(hname)
    sd = grp.semidirect_product(g, h, grp.trivial_action(g, h))
    assert oracles.is_group([list(r) for r in sd.table])
