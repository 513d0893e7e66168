"""Finite groups given by Cayley table."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import (
    ActionNotAutomorphism,
    ActionNotHomomorphism,
    NoIdentity,
    NoInverse,
    NotAssociative,
    ShapeError,
)


@dataclass(frozen=True)
class FiniteGroup:
    """A validated finite group; ``table[p][q]`` is the index of ``p*q``.

    Build instances with :func:`from_table` (or the constructors below);
    the bare dataclass does no checking.
    """

    order: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverse: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = None

    def mul(self, p: int, q: int) -> int:
        return self.table[p][q]

    def inv(self, p: int) -> int:
        return self.inverse[p]

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, p: int) -> str:
        return self.labels[p] if self.labels else str(p)

    def element_order(self, p: int) -> int:
        k, x = 1, p
        while x != self.identity:
            x = self.table[x][p]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.table[p][q] == self.table[q][p]
                   for p in self.elements for q in self.elements)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(self.elements):
            return False
        return all(perm[self.table[h][k]] == self.table[perm[h]][perm[k]]
                   for h in self.elements for k in self.elements)


def from_table(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Validate a Cayley table and compute identity and inverses.

    Raises ``NoIdentity``, ``NoInverse`` or ``NotAssociative`` (in that
    order of checking), each naming the offending element or triple.
    """
    n = len(table)
    if n == 0:
        raise ShapeError("empty Cayley table")
    rows = []
    for p, row in enumerate(table):
        if len(row) != n:
            raise ShapeError("Cayley table is not square", row=p)
        for q, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise ShapeError("Cayley table entry is not a valid index", p=p, q=q)
        rows.append(tuple(row))
    t = tuple(rows)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ShapeError(f"{len(labels)} labels for a group of order {n}")

    identity = None
    for e in range(n):
        if all(t[e][p] == p and t[p][e] == p for p in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity in Cayley table")

    inverse = []
    for p in range(n):
        for q in range(n):
            if t[p][q] == identity and t[q][p] == identity:
                inverse.append(q)
                break
        else:
            raise NoInverse("element has no two-sided inverse", p=p)

    for p in range(n):
        for q in range(n):
            pq = t[p][q]
            for r in range(n):
                if t[pq][r] != t[p][t[q][r]]:
                    raise NotAssociative("Cayley table is not associative", p=p, q=q, r=r)

    return FiniteGroup(n, t, identity, tuple(inverse), labels)


def from_permutations(perms: Sequence[Sequence[int]], labels=None) -> FiniteGroup:
    """Group of a closed list of permutations, composed as ``(s*t)(x) = s(t(x))``."""
    perms = [tuple(s) for s in perms]
    index = {s: i for i, s in enumerate(perms)}
    table = [[index[tuple(s[x] for x in t)] for t in perms] for s in perms]
    return from_table(table, labels)


def trivial() -> FiniteGroup:
    return from_table([[0]], ["e"])


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return from_table([[(p + q) % n for q in range(n)] for p in range(n)],
                      [str(p) for p in range(n)])


def symmetric(n: int) -> FiniteGroup:
    """S_n on permutations of ``range(n)`` in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    labels = ["".join(str(x) for x in s) for s in perms]
    return from_permutations(perms, labels)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product; ``(a, b)`` sits at flat index ``a*|H| + b``."""
    m = h.order
    table = [[g.table[a][c] * m + h.table[b][d]
              for c in g.elements for d in h.elements]
             for a in g.elements for b in h.elements]
    labels = [f"({g.label(a)},{h.label(b)})" for a in g.elements for b in h.elements]
    return from_table(table, labels)


def check_action(g: FiniteGroup, h: FiniteGroup, rho: Sequence[Sequence[int]]) -> None:
    """Check that ``rho[p]`` is an automorphism of ``h`` and ``p -> rho[p]`` a homomorphism."""
    if len(rho) != g.order:
        raise ShapeError(f"action has {len(rho)} maps, group has order {g.order}")
    for p in g.elements:
        if not h.is_automorphism(rho[p]):
            raise ActionNotAutomorphism("action map is not an automorphism", p=p)
    for p in g.elements:
        for q in g.elements:
            pq = g.table[p][q]
            for x in h.elements:
                if rho[p][rho[q][x]] != rho[pq][x]:
                    raise ActionNotHomomorphism("rho_p o rho_q != rho_pq", p=p, q=q, h=x)


def semidirect_product(g: FiniteGroup, h: FiniteGroup, rho: Sequence[Sequence[int]]) -> FiniteGroup:
    """Pairs ``(p, x)`` with ``(p, x)(q, y) = (pq, rho_{q^-1}(x) y)``.

    Flat index ``p*|H| + x``.  With this convention the function algebra of
    the result carries the coproduct ``f(pq, rho_{q^-1}(x) y)``.
    """
    check_action(g, h, rho)
    m = h.order
    table = []
    for p in g.elements:
        for x in h.elements:
            row = []
            for q in g.elements:
                twisted = rho[g.inverse[q]][x]
                for y in h.elements:
                    row.append(g.table[p][q] * m + h.table[twisted][y])
            table.append(row)
    labels = [f"({g.label(p)},{h.label(x)})" for p in g.elements for x in h.elements]
    return from_table(table, labels)


def conjugation_action(g: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    """The adjoint action ``rho_p(q) = p q p^-1``."""
    return tuple(tuple(g.table[g.table[p][q]][g.inverse[p]] for q in g.elements)
                 for p in g.elements)


def inversion_action(g: FiniteGroup, h: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    """Action of ``g`` (order 1 or 2) on abelian ``h`` where the non-identity element inverts."""
    if g.order > 2:
        raise ValueError("inversion action needs a group of order at most 2")
    if not h.is_abelian():
        raise ActionNotAutomorphism("inversion is an automorphism only of abelian groups")
    ident = tuple(h.elements)
    return tuple(ident if p == g.identity else tuple(h.inverse) for p in g.elements)


def trivial_action(g: FiniteGroup, h: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(h.elements) for _ in g.elements)


_NAMED = re.compile(r"^(z|c)(\d+)$")


def named(name: str) -> FiniteGroup:
    """Parse ``trivial``, ``zN``/``cN``, ``sN`` (N <= 5), ``v4``/``klein``."""
    key = name.strip().lower()
    if key in ("trivial", "e", "1"):
        return trivial()
    if key in ("v4", "klein"):
        return direct_product(cyclic(2), cyclic(2))
    m = _NAMED.match(key)
    if m:
        return cyclic(int(m.group(2)))
    if key.startswith("s") and key[1:].isdigit() and 1 <= int(key[1:]) <= 5:
        return symmetric(int(key[1:]))
    raise ValueError(f"unknown group name {name!r}")
