import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import CATALOGUE, build
from cograded_hopf import cograded as cg
from cograded_hopf import dual as dl
from cograded_hopf import examples as ex
from cograded_hopf import exactnum as en
from cograded_hopf import group as grp
from cograded_hopf.exactnum import ZERO

vals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def functionals(h):
    n = h.total_dim
    return st.lists(vals, min_size=n, max_size=n).map(lambda v: dl.functional_from_flat(h, v))


def counit_functional(h):
    return dl.slot_functional(h, h.e, h.counit)


@pytest.mark.parametrize("name", ["K(S3)", "Sweedler", "smash Z/2 on Sweedler", "smash Z/2 on Q[Z/3]"])
def test_counit_is_convolution_unit(name):
    h = build(name)
    eps = counit_functional(h)
    for p in h.group.elements:
        for i in range(h.dim(p)):
            f = dl.dual_basis_functional(h, p, i)
            assert dl.convolve(h, eps, f) == f == dl.convolve(h, f, eps)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["K(Z/2)", "Sweedler", "smash Z/2 on Sweedler", "K(Z/2 x| Z/3)"]), st.data())
def test_convolution_associative(name, data):
    h = build(name)
    f, g, k = (data.draw(functionals(h)) for _ in range(3))
    assert dl.convolve(h, dl.convolve(h, f, g), k) == dl.convolve(h, f, dl.convolve(h, g, k))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["K(S3)", "smash Z/2 on K(Z/3)"]), st.data())
def test_convolution_matches_direct_evaluation(name, data):
    h = build(name)
    f, g = data.draw(functionals(h)), data.draw(functionals(h))
    fg = dl.convolve(h, f, g)
    table = h.group.table
    for r in h.group.elements:
        for k in range(h.dim(r)):
            total = ZERO
            for p, q in h.pairs():
                if table[p][q] != r:
                    continue
                col, dq = h.delta(p, q).col(k), h.dim(q)
                total += sum((f[p][i] * g[q][j] * col[i * dq + j]
                              for i in range(h.dim(p)) for j in range(dq)), ZERO)
            assert fg[r][k] == total


def test_dual_of_group_algebra_is_function_algebra():
    for n in (2, 3):
        d = dl.build_dual(ex.group_algebra(grp.cyclic(n)))
        assert d.hopf == ex.function_algebra(grp.cyclic(n))


def test_dual_of_function_algebra_is_group_algebra():
    d = dl.build_dual(ex.function_algebra(grp.symmetric(3)))
    assert d.hopf == ex.group_algebra(grp.symmetric(3))


@pytest.mark.parametrize("name", ["K(Z/2)", "K(Z/6)", "K(S3)"])
def test_dual_of_k_of_group_is_group_algebra(name):
    h = build(name)
    d = dl.build_dual(h).hopf
    alg = d.components[0]
    # the dual basis functionals multiply like group elements
    table = [[en.first_nonzero(alg.structure[i][j]) for j in range(alg.dim)] for i in range(alg.dim)]
    assert oracles.is_group(table)
    assert oracles.isomorphic(table, [list(r) for r in h.group.table])
    assert all(sum(1 for v in alg.structure[i][j] if v) == 1 for i in range(alg.dim) for j in range(alg.dim))


@pytest.mark.parametrize("name", CATALOGUE)
def test_dual_passes_axioms(name):
    d = dl.build_dual(build(name))
    assert d.dim == build(name).total_dim
    assert cg.verify_axioms(d.hopf).passed


def test_dual_antipode_swaps_slots():
    h = build("smash Z/2 on K(Z/3)")
    d = dl.build_dual(h)
    s = d.hopf.antipode[0]
    for a, (p, _) in enumerate(d.blocks):
        for b, (q, _) in enumerate(d.blocks):
            if s[b, a]:
                assert q == h.group.inverse[p]


@pytest.mark.parametrize("name", ["Sweedler", "smash Z/2 on Sweedler", "K(Z/2 x| Z/3)"])
def test_bidual(name):
    rep = dl.bidual_pairing_check(build(name))
    assert rep.passed, rep.witnesses


def test_shifted_is_supported_on_one_slot():
    h = build("smash Z/2 on Sweedler")
    f = dl.functional_from_flat(h, [1] * h.total_dim)
    s = dl.shifted(h, f, 1, h.components[1].basis(2))
    assert not any(s[0]) and any(s[1])
    assert dl.shifted(h, dl.zero_functional(h), 0, h.unit(0)).is_zero()


def test_functional_from_flat_length():
    with pytest.raises(en.DimensionMismatch):
        dl.functional_from_flat(build("K(Z/2)"), [1])
