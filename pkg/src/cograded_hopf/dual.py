"""The dual Hopf algebra ``A* = (+)_p A_p'`` and biduality.

Pairing convention: ``<f, a> = sum_p f_p(a(p))``, with row-vector functionals
acting on column-vector elements.  Every transpose below follows from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from . import exactnum as en
from . import group as grp
from .cograded import (
    CogradedHopf,
    ComponentAlgebra,
    GradedElement,
    Report,
    assemble,
)
from .exactnum import ZERO, Matrix, Vector
from .group import FiniteGroup


@dataclass(frozen=True)
class GradedFunctional:
    """A functional on ``A``; ``parts[p]`` is the row vector ``f_p`` on ``A_p``."""

    parts: Tuple[Vector, ...]

    def __getitem__(self, p: int) -> Vector:
        return self.parts[p]

    def flat(self) -> Vector:
        return tuple(v for part in self.parts for v in part)

    def __call__(self, a: GradedElement) -> en.Scalar:
        return sum((en.dot(f, x) for f, x in zip(self.parts, a.parts)), ZERO)

    def is_zero(self) -> bool:
        return not any(any(part) for part in self.parts)

    def scale(self, c) -> "GradedFunctional":
        return GradedFunctional(tuple(en.vscale(c, part) for part in self.parts))

    def __add__(self, other: "GradedFunctional") -> "GradedFunctional":
        return GradedFunctional(tuple(en.vadd(x, y) for x, y in zip(self.parts, other.parts)))


def zero_functional(h: CogradedHopf) -> GradedFunctional:
    return GradedFunctional(tuple(en.zeros(d) for d in h.dims))


def functional_from_flat(h: CogradedHopf, v) -> GradedFunctional:
    v = en.vector(v)
    if len(v) != h.total_dim:
        raise en.DimensionMismatch(f"flat functional of length {len(v)}, expected {h.total_dim}")
    parts, k = [], 0
    for d in h.dims:
        parts.append(v[k:k + d])
        k += d
    return GradedFunctional(tuple(parts))


def slot_functional(h: CogradedHopf, p: int, f) -> GradedFunctional:
    """Extend a functional on ``A_p`` by zero to all of ``A``."""
    parts = [en.zeros(d) for d in h.dims]
    parts[p] = en.vector(f)
    return GradedFunctional(tuple(parts))


def dual_basis_functional(h: CogradedHopf, p: int, i: int) -> GradedFunctional:
    """``f_{p,i}``: value 1 on ``e_{p,i}``, zero on every other basis element."""
    return slot_functional(h, p, en.unit_vector(h.dim(p), i))


def convolve(h: CogradedHopf, f: GradedFunctional, g: GradedFunctional) -> GradedFunctional:
    """``(fg)_r = sum_{pq=r} (f_p (x) g_q) o Delta_{p,q}``."""
    table = h.group.table
    parts = [[ZERO] * d for d in h.dims]
    fs = [p for p, part in enumerate(f.parts) if any(part)]
    gs = [q for q, part in enumerate(g.parts) if any(part)]
    for p in fs:
        for q in gs:
            r = table[p][q]
            contrib = h.delta(p, q).rapply(en.kron_vectors(f[p], g[q]))
            parts[r] = [a + b for a, b in zip(parts[r], contrib)]
    return GradedFunctional(tuple(tuple(x) for x in parts))


def shifted(h: CogradedHopf, f: GradedFunctional, p: int, b) -> GradedFunctional:
    """The functional ``x -> f(x b)`` for ``b`` in ``A_p``; supported on slot ``p``."""
    if not any(f[p]):
        return zero_functional(h)
    values = _right_matrix(h.components[p], tuple(b)).rapply(f[p])
    return slot_functional(h, p, values)


@lru_cache(maxsize=4096)
def _right_matrix(comp: ComponentAlgebra, b: Vector) -> Matrix:
    return comp.right_matrix(b)


@dataclass(frozen=True)
class DualHopf:
    """The dual packaged as an ordinary Hopf algebra over the trivial group.

    ``blocks[n] = (p, i)`` says basis vector ``n`` of the single component is
    the dual basis functional ``f_{p,i}``.
    """

    hopf: CogradedHopf
    blocks: Tuple[Tuple[int, int], ...]
    source_group: FiniteGroup

    @property
    def dim(self) -> int:
        return self.hopf.dim(0)


def _blocks(h: CogradedHopf) -> Tuple[Tuple[int, int], ...]:
    return tuple((p, i) for p in h.group.elements for i in range(h.dim(p)))


def build_dual(h: CogradedHopf) -> DualHopf:
    """Product dual to the coproduct family, coproduct dual to the products.

    * ``f_{p,i} f_{q,j} = sum_k Delta_{p,q}[(i,j), k] f_{pq,k}``
    * ``Delta(f_{p,k}) = sum_{i,j} c_p[i][j][k] f_{p,i} (x) f_{p,j}``
    * unit ``eps_e`` in slot ``e``; counit ``f -> f(1_p)``;
      ``S(f_{p,i}) = sum_j S_{p^-1}[i, j] f_{p^-1,j}``.
    """
    g = h.group
    n = h.total_dim
    off = [h.offset(p) for p in g.elements]

    structure = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for p, q in h.pairs():
        r = g.table[p][q]
        d = h.delta(p, q)
        dq = h.dim(q)
        for i in range(h.dim(p)):
            for j in range(dq):
                row = d.row(i * dq + j)
                target = structure[off[p] + i][off[q] + j]
                for k, v in enumerate(row):
                    if v:
                        target[off[r] + k] = v
    unit = [ZERO] * n
    for i, v in enumerate(h.counit):
        unit[off[h.e] + i] = v
    algebra = ComponentAlgebra(n, structure, unit)

    cols = []
    for p in g.elements:
        comp = h.components[p]
        for k in range(comp.dim):
            col = [ZERO] * (n * n)
            for i in range(comp.dim):
                for j in range(comp.dim):
                    v = comp.structure[i][j][k]
                    if v:
                        col[(off[p] + i) * n + off[p] + j] = v
            cols.append(col)
    coproduct = Matrix.from_columns(cols, n * n)

    counit = tuple(v for p in g.elements for v in h.unit(p))

    anti = [[ZERO] * n for _ in range(n)]
    for p in g.elements:
        pinv = g.inverse[p]
        s = h.antipode[pinv]  # A_{p^-1} -> A_p, shape (d_p, d_{p^-1})
        for i in range(h.dim(p)):
            for j in range(h.dim(pinv)):
                anti[off[pinv] + j][off[p] + i] = s[i, j]
    antipode = Matrix(n, n, anti)

    dual = assemble(grp.trivial(), [algebra], [[coproduct]], counit, [antipode])
    return DualHopf(dual, _blocks(h), g)


def unwind(dd: CogradedHopf, blocks, group: FiniteGroup) -> Tuple[CogradedHopf, list]:
    """Regrade the bidual (basis ``(p, i)`` from ``blocks``) over ``group``.

    Returns the regraded raw system and a list of witnesses where the bidual
    has entries outside the block pattern a graded system allows.
    """
    n = dd.dim(0)
    alg = dd.components[0]
    cop = dd.coproduct[0][0]
    idx = {b: k for k, b in enumerate(blocks)}
    dims = [sum(1 for (p, _) in blocks if p == x) for x in group.elements]
    bad = []

    comps = []
    for p in group.elements:
        d = dims[p]
        st = [[[alg.structure[idx[(p, i)]][idx[(p, j)]][idx[(p, k)]] for k in range(d)]
               for j in range(d)] for i in range(d)]
        comps.append(ComponentAlgebra(d, st, [alg.unit[idx[(p, i)]] for i in range(d)]))
    for a, (p, i) in enumerate(blocks):
        for b, (q, j) in enumerate(blocks):
            for c, (r, k) in enumerate(blocks):
                v = alg.structure[a][b][c]
                if v and not (p == q == r):
                    bad.append({"part": "product", "a": a, "b": b, "c": c})

    coproduct = []
    for p in group.elements:
        row = []
        for q in group.elements:
            r = group.table[p][q]
            m = [[cop[idx[(p, i)] * n + idx[(q, j)], idx[(r, k)]] for k in range(dims[r])]
                 for i in range(dims[p]) for j in range(dims[q])]
            row.append(Matrix(dims[p] * dims[q], dims[r], m))
        coproduct.append(row)
    for c, (r, k) in enumerate(blocks):
        for a, (p, i) in enumerate(blocks):
            for b, (q, j) in enumerate(blocks):
                if cop[a * n + b, c] and group.table[p][q] != r:
                    bad.append({"part": "coproduct", "a": a, "b": b, "c": c})

    e = group.identity
    counit = tuple(dd.counit[idx[(e, i)]] for i in range(dims[e]))
    for a, (p, i) in enumerate(blocks):
        if p != e and dd.counit[a]:
            bad.append({"part": "counit", "a": a})

    s = dd.antipode[0]
    antipode = []
    for p in group.elements:
        pinv = group.inverse[p]
        antipode.append(Matrix(dims[pinv], dims[p],
                               [[s[idx[(pinv, j)], idx[(p, i)]] for i in range(dims[p])]
                                for j in range(dims[pinv])]))
    for a, (p, i) in enumerate(blocks):
        for b, (q, j) in enumerate(blocks):
            if s[b, a] and q != group.inverse[p]:
                bad.append({"part": "antipode", "a": a, "b": b})

    raw = CogradedHopf(group, tuple(comps), tuple(tuple(r) for r in coproduct),
                       counit, tuple(antipode))
    return raw, bad


def bidual_pairing_check(h: CogradedHopf) -> Report:
    """Dualize twice, regrade, and compare every structure constant with ``h``."""
    rep = Report("bidual_pairing")
    d = build_dual(h)
    dd = build_dual(d.hopf)
    regraded, bad = unwind(dd.hopf, d.blocks, h.group)
    for w in bad:
        rep.fail(**w)
    for p in h.group.elements:
        if regraded.components[p] != h.components[p]:
            rep.fail(part="component", p=p)
    for p, q in h.pairs():
        if regraded.delta(p, q) != h.delta(p, q):
            rep.fail(part="coproduct", p=p, q=q)
    if regraded.counit != h.counit:
        rep.fail(part="counit")
    for p in h.group.elements:
        if regraded.antipode[p] != h.antipode[p]:
            rep.fail(part="antipode", p=p)
    rep.details["dual_dim"] = d.dim
    rep.details["grading"] = list(h.dims)
    return rep

