"""Cointegrals, integrals and the modular data of a cograded system.

The left integral is built from an arbitrary functional ``f`` on ``A_e`` by

    phi_f(a) = sum_{p,i} (f_{p,i} f)(a S^2(e_{p,i}))

where ``(e_{p,i})`` is the standard basis of ``A_p`` and ``(f_{p,i})`` its
dual basis.  :func:`invariant_functional_space` solves the invariance
equations directly and serves as an independent check on that formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import exactnum as en
from .cograded import CogradedHopf, GradedElement, Report
from .dual import (
    GradedFunctional,
    build_dual,
    convolve,
    dual_basis_functional,
    functional_from_flat,
    shifted,
    slot_functional,
    zero_functional,
)
from .errors import (
    CointegralNotUnique,
    DeltaInconsistent,
    DeltaNotGrouplike,
    DeltaNotInvertible,
    ModularFails,
    NoCointegral,
    NoIntegral,
    NotFaithful,
    NoWitness,
    NuInconsistent,
)
from .exactnum import ONE, ZERO, Matrix, Vector


@dataclass(frozen=True)
class IntegralData:
    phi: GradedFunctional
    psi: GradedFunctional
    h: Vector
    delta: GradedElement
    sigma: Tuple[Matrix, ...]
    sigma_prime: Tuple[Matrix, ...]
    nu: en.Scalar


def normalized(v: Vector) -> Vector:
    """Scale so the first nonzero coordinate is 1."""
    k = en.first_nonzero(v)
    if k is None:
        return tuple(v)
    return en.vscale(ONE / v[k], v)


def normalized_functional(h: CogradedHopf, f: GradedFunctional) -> GradedFunctional:
    return functional_from_flat(h, normalized(f.flat()))


# --------------------------------------------------------------------------
# cointegral


def cointegral(h: CogradedHopf) -> Vector:
    """The left cointegral of ``A_e``: ``a h = eps_e(a) h``, first nonzero coordinate 1."""
    ae = h.components[h.e]
    eye = Matrix.identity(ae.dim)
    blocks = [ae.left_matrix(ae.basis(i)) - eye.scale(h.counit[i]) for i in range(ae.dim)]
    ker = en.kernel_basis(en.stack(blocks))
    if not ker:
        raise NoCointegral("no nonzero cointegral in A_e")
    if len(ker) > 1:
        raise CointegralNotUnique(f"cointegral space has dimension {len(ker)}")
    return normalized(ker[0])


def verify_cointegral(h: CogradedHopf, coint: Vector) -> Report:
    """``a h = eps(a) h`` for every basis ``a`` of every ``A_p``, ``h`` in slot ``e``."""
    rep = Report("cointegral")
    if not any(coint):
        rep.fail(reason="zero")
    parts = [en.zeros(d) for d in h.dims]
    parts[h.e] = tuple(coint)
    hel = GradedElement(tuple(parts))
    for p in h.group.elements:
        for i in range(h.dim(p)):
            a = h.basis_element(p, i)
            eps = h.counit[i] if p == h.e else ZERO
            want = GradedElement(tuple(en.vscale(eps, x) for x in hel.parts))
            if h.graded_mult(a, hel) != want:
                rep.fail(p=p, i=i)
    return rep


# --------------------------------------------------------------------------
# integrals


def integral_from_functional(h: CogradedHopf, f) -> GradedFunctional:
    """``phi_f`` for a functional ``f`` on ``A_e`` (given as a row vector)."""
    f = en.vector(f)
    fe = slot_functional(h, h.e, f)
    parts = []
    for p in h.group.elements:
        comp = h.components[p]
        s2 = h.s_squared(p)
        values = [ZERO] * comp.dim
        for i in range(comp.dim):
            g = convolve(h, dual_basis_functional(h, p, i), fe)[p]
            if not any(g):
                continue
            moved = s2.col(i)
            for m in range(comp.dim):
                values[m] += en.dot(g, comp.mult(comp.basis(m), moved))
        parts.append(tuple(values))
    return GradedFunctional(tuple(parts))


def find_left_integral(h: CogradedHopf) -> GradedFunctional:
    """First nonzero ``phi_f`` over the dual basis of ``A_e``, normalized."""
    de = h.dim(h.e)
    for i in range(de):
        phi = integral_from_functional(h, en.unit_vector(de, i))
        if not phi.is_zero():
            return normalized_functional(h, phi)
    raise NoIntegral("phi_f vanishes for every dual basis functional of A_e")


def left_invariance_failures(h: CogradedHopf, phi: GradedFunctional):
    """``(id (x) phi_q) Delta_{p,q}(a) = phi_{pq}(a) 1_p`` on every basis ``a``."""
    g = h.group
    for p, q in h.pairs():
        pq = g.table[p][q]
        dq = h.dim(q)
        d = h.delta(p, q)
        unit = h.unit(p)
        for k in range(h.dim(pq)):
            col = d.col(k)
            lhs = tuple(en.dot(col[i * dq:(i + 1) * dq], phi[q]) for i in range(h.dim(p)))
            if lhs != en.vscale(phi[pq][k], unit):
                yield {"p": p, "q": q, "i": k}


def right_invariance_failures(h: CogradedHopf, psi: GradedFunctional):
    """``(psi_p (x) id) Delta_{p,q}(a) = psi_{pq}(a) 1_q`` on every basis ``a``."""
    g = h.group
    for p, q in h.pairs():
        pq = g.table[p][q]
        dq = h.dim(q)
        d = h.delta(p, q)
        unit = h.unit(q)
        for k in range(h.dim(pq)):
            col = d.col(k)
            lhs = tuple(sum((psi[p][i] * col[i * dq + j] for i in range(h.dim(p))), ZERO)
                        for j in range(dq))
            if lhs != en.vscale(psi[pq][k], unit):
                yield {"p": p, "q": q, "i": k}


def verify_left_invariance(h: CogradedHopf, phi: GradedFunctional) -> Report:
    rep = Report("left_invariance")
    rep.extend(left_invariance_failures(h, phi))
    return rep


def verify_right_invariance(h: CogradedHopf, psi: GradedFunctional) -> Report:
    rep = Report("right_invariance")
    rep.extend(right_invariance_failures(h, psi))
    return rep


def invariant_functional_space(h: CogradedHopf, side: str = "left") -> List[GradedFunctional]:
    """Basis of all left (or right) invariant functionals, by direct linear solve."""
    g = h.group
    n = h.total_dim
    off = [h.offset(p) for p in g.elements]
    rows = []
    for p, q in h.pairs():
        pq = g.table[p][q]
        dp, dq = h.dim(p), h.dim(q)
        d = h.delta(p, q)
        for k in range(h.dim(pq)):
            col = d.col(k)
            if side == "left":
                for i in range(dp):
                    row = [ZERO] * n
                    for j in range(dq):
                        row[off[q] + j] += col[i * dq + j]
                    row[off[pq] + k] -= h.unit(p)[i]
                    rows.append(row)
            else:
                for j in range(dq):
                    row = [ZERO] * n
                    for i in range(dp):
                        row[off[p] + i] += col[i * dq + j]
                    row[off[pq] + k] -= h.unit(q)[j]
                    rows.append(row)
    ker = en.kernel_basis(Matrix(len(rows), n, rows))
    return [functional_from_flat(h, v) for v in ker]


def in_span(vectors: List[GradedFunctional], f: GradedFunctional) -> bool:
    if not vectors:
        return f.is_zero()
    m = Matrix.from_columns([v.flat() for v in vectors], len(f.flat()))
    return en.solve(m, f.flat()) is not None


def right_integral(h: CogradedHopf, phi: GradedFunctional) -> GradedFunctional:
    """``psi_p = phi_{p^-1} o S_p``, re-checked for right invariance."""
    g = h.group
    psi = GradedFunctional(tuple(h.antipode[p].rapply(phi[g.inverse[p]]) for p in g.elements))
    w = next(right_invariance_failures(h, psi), None)
    if w is not None:
        raise NoIntegral("phi o S is not right invariant", **w)
    return psi


# --------------------------------------------------------------------------
# modular data


def modular_element(h: CogradedHopf, phi: GradedFunctional) -> GradedElement:
    """Components ``delta_q`` with ``(phi_p (x) id) Delta_{p,q}(a) = phi_{pq}(a) delta_q``.

    Each ``delta_q`` is read off the first witness ``(p, a)`` with
    ``phi_{pq}(a) != 0`` and then cross-checked against all other pairs.
    """
    g = h.group

    def image(p, q, k):
        dq = h.dim(q)
        col = h.delta(p, q).col(k)
        return tuple(sum((phi[p][i] * col[i * dq + j] for i in range(h.dim(p))), ZERO)
                     for j in range(dq))

    parts = []
    for q in g.elements:
        delta_q = None
        for p in g.elements:
            pq = g.table[p][q]
            for k, v in enumerate(phi[pq]):
                if v:
                    delta_q = en.vscale(ONE / v, image(p, q, k))
                    break
            if delta_q is not None:
                break
        if delta_q is None:
            raise NoWitness("phi vanishes on every A_{pq}", q=q)
        for p in g.elements:
            pq = g.table[p][q]
            for k in range(h.dim(pq)):
                if image(p, q, k) != en.vscale(phi[pq][k], delta_q):
                    raise DeltaInconsistent("witnesses give different delta_q", p=p, q=q, i=k)
        parts.append(delta_q)

    for p, q in h.pairs():
        pq = g.table[p][q]
        if h.delta(p, q).apply(parts[pq]) != en.kron_vectors(parts[p], parts[q]):
            raise DeltaNotGrouplike("Delta_{p,q}(delta_pq) != delta_p (x) delta_q", p=p, q=q)
    for q in g.elements:
        if h.components[q].left_matrix(parts[q]).rank() != h.dim(q):
            raise DeltaNotInvertible("delta_q is not invertible", q=q)
    if en.dot(h.counit, parts[h.e]) != ONE:
        raise DeltaNotGrouplike("eps(delta_e) != 1", q=h.e)
    return GradedElement(tuple(parts))


def gram_matrix(h: CogradedHopf, f: GradedFunctional, p: int) -> Matrix:
    """``G[i][j] = f_p(e_i e_j)``."""
    comp = h.components[p]
    return Matrix.from_rows([[en.dot(f[p], comp.structure[i][j]) for j in range(comp.dim)]
                             for i in range(comp.dim)])


def _modular_automorphism(h: CogradedHopf, f: GradedFunctional, p: int, label: str) -> Matrix:
    comp = h.components[p]
    gram = gram_matrix(h, f, p)
    inv = gram.inverse()
    if inv is None:
        raise NotFaithful(f"Gram matrix of {label} is singular", p=p)
    # f(e_i b) = f(b sigma(e_i))  <=>  gram @ sigma = gram^T
    sigma = inv @ gram.transpose()
    for i in range(comp.dim):
        s_i = sigma.col(i)
        for j in range(comp.dim):
            if gram[i, j] != en.dot(f[p], comp.mult(comp.basis(j), s_i)):
                raise ModularFails(f"{label}(ab) != {label}(b sigma(a))", p=p, i=i, j=j)
            if sigma.apply(comp.structure[i][j]) != comp.mult(s_i, sigma.col(j)):
                raise ModularFails(f"sigma for {label} is not multiplicative", p=p, i=i, j=j)
    if sigma.apply(comp.unit) != comp.unit or sigma.rank() != comp.dim:
        raise ModularFails(f"sigma for {label} is not a unital bijection", p=p)
    return sigma


def modular_automorphisms(h: CogradedHopf, phi: GradedFunctional, psi: GradedFunctional):
    """Slotwise ``sigma_p`` (from ``phi``) and ``sigma'_p`` (from ``psi``)."""
    sigma = tuple(_modular_automorphism(h, phi, p, "phi") for p in h.group.elements)
    sigma_prime = tuple(_modular_automorphism(h, psi, p, "psi") for p in h.group.elements)
    return sigma, sigma_prime


def scaling_constant(h: CogradedHopf, phi: GradedFunctional) -> en.Scalar:
    """``nu`` with ``phi_p o S^2 = nu phi_p`` for every ``p``."""
    moved = [h.s_squared(p).rapply(phi[p]) for p in h.group.elements]
    nu: Optional[en.Scalar] = None
    for p in h.group.elements:
        k = en.first_nonzero(phi[p])
        if k is not None:
            nu = moved[p][k] / phi[p][k]
            break
    if nu is None:
        raise NuInconsistent("phi is zero")
    for p in h.group.elements:
        if moved[p] != en.vscale(nu, phi[p]):
            raise NuInconsistent("phi o S^2 is not nu phi on this slot", p=p)
    return nu


def integral_data(h: CogradedHopf) -> IntegralData:
    """The whole pipeline: ``phi``, ``psi``, cointegral, ``delta``, ``sigma``, ``sigma'``, ``nu``."""
    phi = find_left_integral(h)
    psi = right_integral(h, phi)
    sigma, sigma_prime = modular_automorphisms(h, phi, psi)
    return IntegralData(
        phi=phi,
        psi=psi,
        h=cointegral(h),
        delta=modular_element(h, phi),
        sigma=sigma,
        sigma_prime=sigma_prime,
        nu=scaling_constant(h, phi),
    )


# --------------------------------------------------------------------------
# dual-basis identities


def verify_dual_basis_identities(h: CogradedHopf) -> Report:
    """Exact checks of the three dual-basis identities behind the integral formula.

    * ``sum_i f_{pq,i} (x) Delta_{p,q}(e_{pq,i}) = sum_{j,k} f_{p,j} f_{q,k} (x) e_{p,j} (x) e_{q,k}``
    * ``sum_i Delta(f_{p,i}) (x) e_{p,i} = sum_{j,k} f_{p,j} (x) f_{p,k} (x) e_{p,j} e_{p,k}``
    * ``sum_i f_{p,i} f(. S(a)) (x) e_{p,i}
      = sum_{i,(a)} (f_{p,i} f)(. S(a_(1))) (x) e_{p,i} a_(2)``
      for ``f`` over every dual basis functional and ``a`` over every basis element.
    """
    g = h.group
    rep = Report("dual_basis_identities")
    n = h.total_dim
    off = [h.offset(p) for p in g.elements]
    basis_f = {(p, i): dual_basis_functional(h, p, i) for p in g.elements for i in range(h.dim(p))}

    # first identity, coefficient of e_{p,j} (x) e_{q,k}
    for p, q in h.pairs():
        pq = g.table[p][q]
        d = h.delta(p, q)
        dq = h.dim(q)
        for j in range(h.dim(p)):
            for k in range(dq):
                lhs = slot_functional(h, pq, d.row(j * dq + k))
                rhs = convolve(h, basis_f[(p, j)], basis_f[(q, k)])
                if lhs != rhs:
                    rep.fail(identity="product", p=p, q=q, j=j, k=k)

    # second identity, coefficient of e_{p,m}
    dual_cop = build_dual(h).hopf.coproduct[0][0]
    for p in g.elements:
        comp = h.components[p]
        for m in range(comp.dim):
            lhs = dual_cop.col(off[p] + m)
            rhs = [ZERO] * (n * n)
            for j in range(comp.dim):
                for k in range(comp.dim):
                    rhs[(off[p] + j) * n + off[p] + k] += comp.structure[j][k][m]
            if lhs != tuple(rhs):
                rep.fail(identity="coproduct", p=p, m=m)

    # third identity; elements of A' (x) A_p stored as d_p flat functionals
    zero = zero_functional(h)
    products = {}
    for p in g.elements:
        for i in range(h.dim(p)):
            for key, f in basis_f.items():
                products[(p, i, key)] = convolve(h, basis_f[(p, i)], f)
    for key, f in basis_f.items():
        for q in g.elements:
            qinv = g.inverse[q]
            if key[0] != qinv:
                continue  # both sides vanish by degree
            for t in range(h.dim(q)):
                s_a = h.antipode[q].col(t)
                shifted_f = shifted(h, f, qinv, s_a)
                for p in g.elements:
                    comp = h.components[p]
                    if shifted_f.is_zero():
                        lhs = [zero] * comp.dim
                    else:
                        lhs = [convolve(h, basis_f[(p, i)], shifted_f) for i in range(comp.dim)]
                    rhs = [zero] * comp.dim
                    r = g.table[q][g.inverse[p]]
                    col = h.delta(r, p).col(t)
                    for idx, v in enumerate(col):
                        if not v:
                            continue
                        u, w = divmod(idx, comp.dim)
                        s_u = h.antipode[r].col(u)
                        for i in range(comp.dim):
                            term = shifted(h, products[(p, i, key)], g.inverse[r], s_u)
                            if term.is_zero():
                                continue
                            for m, c in comp.nonzero_products(i, w):
                                rhs[m] = rhs[m] + term.scale(v * c)
                    if lhs != rhs:
                        rep.fail(identity="shifted", f=list(key), q=q, a=t, p=p)
    return rep


def reconstruct_functional(h: CogradedHopf, p: int, g_row) -> Report:
    """Check ``g(a) = sum_i phi_{f_{p^-1,i} g}(a S(e_{p^-1,i}))`` on every basis ``a`` of ``A_p``."""
    grp_ = h.group
    rep = Report("reconstruct_functional")
    g_row = en.vector(g_row)
    gf = slot_functional(h, p, g_row)
    pinv = grp_.inverse[p]
    comp = h.components[p]
    values = [ZERO] * comp.dim
    for i in range(h.dim(pinv)):
        f = convolve(h, dual_basis_functional(h, pinv, i), gf)[h.e]
        if not any(f):
            continue
        phi = integral_from_functional(h, f)
        s_e = h.antipode[pinv].col(i)
        for m in range(comp.dim):
            values[m] += en.dot(phi[p], comp.mult(comp.basis(m), s_e))
    for m in range(comp.dim):
        if values[m] != g_row[m]:
            rep.fail(p=p, i=m)
    rep.details["values"] = [en.format_scalar(v) for v in values]
    return rep
