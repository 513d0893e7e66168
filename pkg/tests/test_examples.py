import pytest

import oracles
from cograded_hopf import cograded as cg
from cograded_hopf import errors as err
from cograded_hopf import examples as ex
from cograded_hopf import group as grp
from cograded_hopf import integrals as it
from cograded_hopf.exactnum import ONE, Matrix

Z2, Z3 = grp.cyclic(2), grp.cyclic(3)


def test_sweedler_dims_and_counit():
    h = ex.sweedler()
    assert h.dims == (4,)
    assert h.counit == (1, 1, 0, 0)


def test_k_of_group_structure():
    h = ex.k_of_group(grp.symmetric(3))
    assert h.dims == (1,) * 6
    assert all(h.delta(p, q) == Matrix.identity(1) for p, q in h.pairs())


@pytest.mark.parametrize("base", ["kz3", "qz3", "sweedler"])
def test_smash_trivial_action_is_tensor_coalgebra(base):
    act = ex.named_action("z2", base, "trivial")
    assert ex.smash(act) == ex.tensor_coalgebra(Z2, ex.base_by_name(base))


def test_semidirect_trivial_action():
    h = ex.semidirect_function_algebra(Z2, Z3, grp.trivial_action(Z2, Z3))
    assert h == ex.tensor_coalgebra(Z2, ex.function_algebra(Z3))


def test_semidirect_inversion_underlying_group_is_s3():
    rho = grp.inversion_action(Z2, Z3)
    h = ex.semidirect_function_algebra(Z2, Z3, rho)
    assert h.dims == (3, 3)
    sd = grp.semidirect_product(Z2, Z3, rho)
    assert oracles.isomorphic(sd.table, grp.symmetric(3).table)


def test_trivial_normal_factor_gives_k_of_group():
    t = grp.trivial()
    for g in (Z3, grp.symmetric(3)):
        assert ex.semidirect_function_algebra(g, t, grp.trivial_action(g, t)) == ex.k_of_group(g)


@pytest.mark.parametrize("g", [Z2, Z3, grp.named("v4")])
def test_adjoint_of_abelian_group_is_tensor(g):
    assert ex.adjoint_example(g) == ex.tensor_coalgebra(g, ex.function_algebra(g))


def test_adjoint_s3_is_not_tensor():
    g = grp.symmetric(3)
    assert ex.adjoint_example(g) != ex.tensor_coalgebra(g, ex.function_algebra(g))


@pytest.mark.parametrize("base,action", [("kz3", "inversion"), ("qz3", "inversion"), ("kz3", "trivial")])
def test_permutation_actions_preserve_integral(base, action):
    act = ex.named_action("z2", base, action)
    phi0 = it.find_left_integral(act.base)[0]
    assert ex.action_character(act, phi0).mu == (ONE, ONE)


def test_sweedler_negation_character():
    act = ex.sweedler_negation_action()
    phi0 = it.find_left_integral(act.base)[0]
    assert ex.action_character(act, phi0).mu == (1, -1)


def test_action_character_rejects_non_eigenvector():
    act = ex.sweedler_negation_action()
    with pytest.raises(err.MuInconsistent):
        ex.action_character(act, (1, 0, 1, 0))
    with pytest.raises(err.MuInconsistent):
        ex.action_character(act, (0, 0, 0, 0))


def test_action_invalid_not_group_automorphism():
    # swapping the delta functions of K(Z/2) moves the identity
    act = ex.permutation_action(Z2, ex.function_algebra(Z2), [(0, 1), (1, 0)])
    with pytest.raises(err.ActionInvalid) as info:
        act.validate()
    assert info.value.witness["clause"] == "coproduct"


def test_action_invalid_not_permutation():
    with pytest.raises(err.ActionInvalid) as info:
        ex.permutation_action(Z2, ex.function_algebra(Z3), [(0, 1, 2), (0, 0, 2)])
    assert info.value.witness["clause"] == "permutation"


def test_action_invalid_identity_and_homomorphism():
    base = ex.sweedler()
    flip = ex.sweedler_negation_action().alpha[1]
    with pytest.raises(err.ActionInvalid) as info:
        ex.HopfAction(base, Z2, (flip, flip)).validate()
    assert info.value.witness["clause"] == "identity"
    with pytest.raises(err.ActionInvalid) as info:
        ex.HopfAction(base, Z3, (Matrix.identity(4), flip, flip)).validate()
    assert info.value.witness["clause"] == "homomorphism"


def test_action_invalid_not_multiplicative():
    base = ex.sweedler()
    # fixes 1 and g, scales x but not gx
    bad = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    with pytest.raises(err.ActionInvalid) as info:
        ex.HopfAction(base, Z2, (Matrix.identity(4), bad)).validate()
    assert info.value.witness["clause"] == "multiplicative"


def test_action_needs_ordinary_base():
    with pytest.raises(err.ShapeError):
        ex.HopfAction(ex.k_of_group(Z2), Z2, (Matrix.identity(1),) * 2)


BUILDERS = {
    "smash z2 on qz4": lambda: ex.smash(ex.named_action("z2", "qz4", "inversion")),
    "smash z2 on sweedler": lambda: ex.smash(ex.named_action("z2", "sweedler", "negate-x")),
    "semidirect z2 on z4": lambda: ex.semidirect_function_algebra(
        Z2, grp.cyclic(4), grp.inversion_action(Z2, grp.cyclic(4))),
    "adjoint z2": lambda: ex.adjoint_example(Z2),
    "K(v4)": lambda: ex.k_of_group(grp.named("v4")),
    "Q[S3]": lambda: ex.group_algebra(grp.symmetric(3)),
    "K(S3) ordinary": lambda: ex.function_algebra(grp.symmetric(3)),
}


@pytest.mark.parametrize("name", list(BUILDERS))
def test_builders_pass_axioms_and_integrals(name):
    h = BUILDERS[name]()
    assert cg.verify_axioms(h).passed
    data = it.integral_data(h)
    assert it.verify_left_invariance(h, data.phi).passed
    assert it.verify_right_invariance(h, data.psi).passed
    assert it.verify_cointegral(h, data.h).passed


def test_named_lookup_errors():
    with pytest.raises(ValueError):
        ex.base_by_name("tensor")
    with pytest.raises(ValueError):
        ex.named_action("z2", "sweedler", "inversion")
    with pytest.raises(ValueError):
        ex.named_action("z3", "sweedler", "negate-x")
    with pytest.raises(ValueError):
        ex.named_action("z2", "kz3", "twist")


def test_catalogue_names():
    names = list(ex.catalogue())
    assert "Sweedler" in names and "adjoint S3" in names
    assert sum(1 for n in names if n.startswith("Q[Z/")) == 6
