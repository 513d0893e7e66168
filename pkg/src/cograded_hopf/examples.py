"""Builders for concrete cograded systems.

Covers function algebras ``K(G)``, group algebras, Sweedler's
four-dimensional Hopf algebra, smash constructions from a group acting on a
Hopf algebra, semidirect function algebras and the adjoint example.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

from . import exactnum as en
from . import group as grp
from .cograded import CogradedHopf, ComponentAlgebra, assemble, solve_antipode, solve_counit
from .errors import ActionInvalid, MuInconsistent, ShapeError
from .exactnum import ONE, ZERO, Matrix
from .group import FiniteGroup


def _scalar_algebra() -> ComponentAlgebra:
    return ComponentAlgebra(1, [[[ONE]]], [ONE])


def k_of_group(g: FiniteGroup) -> CogradedHopf:
    """``K(G)``: one-dimensional components, every ``Delta_{p,q}`` the identity scalar."""
    one = Matrix.identity(1)
    comps = [_scalar_algebra()] * g.order
    cop = [[one] * g.order for _ in g.elements]
    return assemble(g, comps, cop)


def trivially_cograded(algebra: ComponentAlgebra, coproduct: Matrix,
                       counit=None, antipode: Optional[Matrix] = None) -> CogradedHopf:
    """Package an ordinary Hopf algebra as a system over the trivial group."""
    return assemble(grp.trivial(), [algebra], [[coproduct]], counit,
                    None if antipode is None else [antipode])


def function_algebra(h: FiniteGroup) -> CogradedHopf:
    """``K(H)`` as an ordinary Hopf algebra on delta functions."""
    n = h.order
    alg = ComponentAlgebra.from_table(n, {(k, k): {k: 1} for k in h.elements}, [1] * n)
    cols = []
    for k in h.elements:
        col = [ZERO] * (n * n)
        for x in h.elements:
            col[x * n + h.table[h.inverse[x]][k]] = ONE
        cols.append(col)
    return trivially_cograded(alg, Matrix.from_columns(cols, n * n))


def group_algebra(h: FiniteGroup) -> CogradedHopf:
    """``Q[H]`` with grouplike basis."""
    n = h.order
    alg = ComponentAlgebra.from_table(
        n, {(x, y): {h.table[x][y]: 1} for x in h.elements for y in h.elements},
        en.unit_vector(n, h.identity))
    cols = [en.unit_vector(n * n, k * n + k) for k in h.elements]
    return trivially_cograded(alg, Matrix.from_columns(cols, n * n))


# Sweedler basis: g^a x^b at index a + 2b, i.e. (1, g, x, gx)
SWEEDLER_LABELS = ("1", "g", "x", "gx")


def sweedler_algebra() -> ComponentAlgebra:
    products = {}
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                for d in (0, 1):
                    if b + d > 1:
                        continue
                    sign = -1 if b * c else 1
                    products[(a + 2 * b, c + 2 * d)] = {(a + c) % 2 + 2 * (b + d): sign}
    return ComponentAlgebra.from_table(4, products, [1, 0, 0, 0])


def sweedler_coproduct() -> Matrix:
    def t(i, j):
        return i * 4 + j

    cols = [
        {t(0, 0): 1},                 # 1 -> 1 (x) 1
        {t(1, 1): 1},                 # g -> g (x) g
        {t(2, 0): 1, t(1, 2): 1},     # x -> x (x) 1 + g (x) x
        {t(3, 1): 1, t(0, 3): 1},     # gx -> gx (x) g + 1 (x) gx
    ]
    return Matrix.from_columns([[c.get(k, 0) for k in range(16)] for c in cols], 16)


def sweedler() -> CogradedHopf:
    """Sweedler's Hopf algebra: ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``."""
    return trivially_cograded(sweedler_algebra(), sweedler_coproduct())


# --------------------------------------------------------------------------
# smash construction


@dataclass(frozen=True)
class HopfAction:
    """A group acting on an ordinary Hopf algebra by Hopf automorphisms."""

    base: CogradedHopf
    group: FiniteGroup
    alpha: Tuple[Matrix, ...]

    def __post_init__(self):
        if self.base.group.order != 1:
            raise ShapeError("action base must be cograded over the trivial group")
        if len(self.alpha) != self.group.order:
            raise ShapeError(f"{len(self.alpha)} automorphisms for a group of order {self.group.order}")

    @property
    def algebra(self) -> ComponentAlgebra:
        return self.base.components[0]

    @property
    def coproduct(self) -> Matrix:
        return self.base.coproduct[0][0]

    def validate(self) -> None:
        """Raise :class:`ActionInvalid` naming the violated clause."""
        alg = self.algebra
        d = alg.dim
        eye = Matrix.identity(d)
        g = self.group
        for p, a in enumerate(self.alpha):
            if a.shape != (d, d):
                raise ActionInvalid("automorphism has wrong shape", clause="shape", p=p)
            if a.apply(alg.unit) != alg.unit:
                raise ActionInvalid("alpha_p does not fix the unit", clause="unital", p=p)
            for i in range(d):
                for j in range(d):
                    if a.apply(alg.structure[i][j]) != alg.mult(a.col(i), a.col(j)):
                        raise ActionInvalid("alpha_p is not multiplicative",
                                            clause="multiplicative", p=p, i=i, j=j)
            if a.rank() != d:
                raise ActionInvalid("alpha_p is not invertible", clause="invertible", p=p)
            lhs = self.coproduct @ a
            rhs = en.kron(a, a) @ self.coproduct
            if lhs != rhs:
                raise ActionInvalid("alpha_p does not commute with the coproduct",
                                    clause="coproduct", p=p)
        if self.alpha[g.identity] != eye:
            raise ActionInvalid("alpha_e is not the identity", clause="identity")
        for p in g.elements:
            for q in g.elements:
                if self.alpha[p] @ self.alpha[q] != self.alpha[g.table[p][q]]:
                    raise ActionInvalid("alpha_p alpha_q != alpha_pq", clause="homomorphism", p=p, q=q)


def permutation_action(g: FiniteGroup, base: CogradedHopf, rho: Sequence[Sequence[int]]) -> HopfAction:
    """Action permuting basis vectors: ``e_k -> e_{rho_p(k)}``.

    On ``K(H)`` delta functions this is ``(alpha_p f)(h) = f(rho_{p^-1}(h))``;
    on ``Q[H]`` it is ``h -> rho_p(h)``.
    """
    d = base.dim(0)
    alpha = []
    for p in g.elements:
        if sorted(rho[p]) != list(range(d)):
            raise ActionInvalid("rho_p is not a permutation of the basis", clause="permutation", p=p)
        alpha.append(Matrix.from_columns([en.unit_vector(d, rho[p][k]) for k in range(d)], d))
    return HopfAction(base, g, tuple(alpha))


def sweedler_negation_action() -> HopfAction:
    """``Z/2`` acting on Sweedler's algebra by ``x -> -x`` (``g`` fixed)."""
    g = grp.cyclic(2)
    flip = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    return HopfAction(sweedler(), g, (Matrix.identity(4), flip))


def tensor_coalgebra(g: FiniteGroup, base: CogradedHopf) -> CogradedHopf:
    """Every component the base algebra, every ``Delta_{p,q}`` the base coproduct."""
    n = g.order
    d0 = base.coproduct[0][0]
    return assemble(g, [base.components[0]] * n, [[d0] * n for _ in range(n)])


def smash(act: HopfAction) -> CogradedHopf:
    """``Delta_{p,q} = (alpha_q (x) id) Delta_0`` with closed-form counit and antipode.

    The antipode installed is ``S_r = S_0 alpha_r`` on ``A_r``, i.e.
    ``S(a)(p) = S_0(alpha_{p^-1}(a(p^-1)))``; both it and the counit are
    re-derived by the linear solvers and must agree exactly.
    """
    act.validate()
    g = act.group
    n = g.order
    d0 = act.coproduct
    eye = Matrix.identity(act.algebra.dim)
    cop = [[en.kron(act.alpha[q], eye) @ d0 for q in g.elements] for _ in g.elements]
    s0 = act.base.antipode[0]
    counit = act.base.counit
    antipode = [s0 @ act.alpha[r] for r in g.elements]
    comps = [act.algebra] * n
    h = assemble(g, comps, cop, counit, antipode)

    if solve_counit(g, comps, cop) != counit:
        raise ActionInvalid("closed-form counit disagrees with the solved counit", clause="counit")
    solved = solve_antipode(h)
    for r in g.elements:
        if solved[r] != h.antipode[r]:
            raise ActionInvalid("closed-form antipode disagrees with the solved antipode",
                                clause="antipode", p=r)
    return h


def semidirect_function_algebra(g: FiniteGroup, h: FiniteGroup, rho) -> CogradedHopf:
    """Smash of ``G`` acting on ``K(H)``; checked against ``K(G x| H)`` pointwise.

    Slot ``Delta_{p,q}`` must send ``delta_m`` to the sum of ``delta_x (x) delta_y``
    over ``(p, x)(q, y) = (pq, m)`` in :func:`group.semidirect_product`.
    """
    grp.check_action(g, h, rho)
    sd = grp.semidirect_product(g, h, rho)
    system = smash(permutation_action(g, function_algebra(h), rho))
    m = h.order
    for p in g.elements:
        for q in g.elements:
            pq = g.table[p][q]
            d = system.delta(p, q)
            for x in h.elements:
                for y in h.elements:
                    prod = sd.table[p * m + x][q * m + y]
                    for z in h.elements:
                        want = ONE if prod == pq * m + z else ZERO
                        if d[x * m + y, z] != want:
                            raise ActionInvalid("smash coproduct differs from K(G x| H)",
                                                clause="semidirect", p=p, q=q, x=x, y=y, m=z)
    return system


def adjoint_example(g: FiniteGroup) -> CogradedHopf:
    """``K(G x G)`` with ``Delta(f)(p, h, q, k) = f(pq, q^-1 h q k)``."""
    system = semidirect_function_algebra(g, g, grp.conjugation_action(g))
    n = g.order
    t, inv = g.table, g.inverse
    for p in g.elements:
        for q in g.elements:
            d = system.delta(p, q)
            for x in g.elements:
                for y in g.elements:
                    target = t[t[t[inv[q]][x]][q]][y]
                    for m in g.elements:
                        want = ONE if m == target else ZERO
                        if d[x * n + y, m] != want:
                            raise ActionInvalid("adjoint coproduct formula fails",
                                                clause="adjoint", p=p, q=q, x=x, y=y, m=m)
    return system


@dataclass(frozen=True)
class ActionCharacter:
    """``mu(p)`` with ``phi_0 o alpha_p = mu(p) phi_0``."""

    mu: Tuple[en.Scalar, ...]


def action_character(act: HopfAction, phi0: Sequence) -> ActionCharacter:
    """Extract ``mu`` at the first nonzero coordinate of ``phi0`` and check it everywhere."""
    phi0 = en.vector(phi0)
    w = en.first_nonzero(phi0)
    if w is None:
        raise MuInconsistent("phi_0 is zero")
    g = act.group
    mu = []
    for p, a in enumerate(act.alpha):
        moved = a.rapply(phi0)
        value = moved[w] / phi0[w]
        if moved != en.vscale(value, phi0):
            raise MuInconsistent("phi_0 o alpha_p is not a multiple of phi_0", p=p)
        mu.append(value)
    if mu[g.identity] != ONE:
        raise MuInconsistent("mu(e) != 1", p=g.identity)
    for p in g.elements:
        for q in g.elements:
            if mu[g.table[p][q]] != mu[p] * mu[q]:
                raise MuInconsistent("mu is not a homomorphism", p=p, q=q)
    return ActionCharacter(tuple(mu))


# --------------------------------------------------------------------------
# named constructions


def base_by_name(name: str) -> CogradedHopf:
    key = name.lower()
    if key == "sweedler":
        return sweedler()
    if key.startswith("k"):
        return function_algebra(grp.named(key[1:]))
    if key.startswith("q"):
        return group_algebra(grp.named(key[1:]))
    raise ValueError(f"unknown base Hopf algebra {name!r}")


def _base_group(name: str) -> Optional[FiniteGroup]:
    key = name.lower()
    if key[:1] in ("k", "q") and key != "sweedler":
        return grp.named(key[1:])
    return None


def named_action(group_name: str, base_name: str, action: str) -> HopfAction:
    """Actions reachable by name: ``trivial``, ``inversion`` (on ``K(H)``/``Q[H]``),
    ``negate-x`` (on Sweedler's algebra)."""
    g = grp.named(group_name)
    base = base_by_name(base_name)
    d = base.dim(0)
    if action == "trivial":
        return HopfAction(base, g, tuple(Matrix.identity(d) for _ in g.elements))
    if action == "inversion":
        h = _base_group(base_name)
        if h is None:
            raise ValueError("inversion action needs a base K(H) or Q[H]")
        return permutation_action(g, base, grp.inversion_action(g, h))
    if action == "negate-x":
        if base_name.lower() != "sweedler" or g.order != 2:
            raise ValueError("negate-x is defined for Z/2 acting on sweedler")
        act = sweedler_negation_action()
        return HopfAction(base, g, act.alpha)
    raise ValueError(f"unknown action {action!r}")


def catalogue() -> Dict[str, Callable[[], CogradedHopf]]:
    """Every system the acceptance suite runs on, by name."""
    cat: Dict[str, Callable[[], CogradedHopf]] = {
        "K(Z/2)": lambda: k_of_group(grp.cyclic(2)),
        "K(Z/6)": lambda: k_of_group(grp.cyclic(6)),
        "K(S3)": lambda: k_of_group(grp.symmetric(3)),
    }
    for n in range(1, 7):
        cat[f"Q[Z/{n}]"] = (lambda n=n: group_algebra(grp.cyclic(n)))
    cat["Sweedler"] = sweedler
    cat["smash Z/2 on K(Z/3)"] = lambda: smash(named_action("z2", "kz3", "inversion"))
    cat["smash Z/2 on Q[Z/3]"] = lambda: smash(named_action("z2", "qz3", "inversion"))
    cat["smash Z/2 on Sweedler"] = lambda: smash(sweedler_negation_action())
    cat["K(Z/2 x| Z/3)"] = lambda: semidirect_function_algebra(
        grp.cyclic(2), grp.cyclic(3), grp.inversion_action(grp.cyclic(2), grp.cyclic(3)))
    cat["adjoint S3"] = lambda: adjoint_example(grp.symmetric(3))
    return cat
