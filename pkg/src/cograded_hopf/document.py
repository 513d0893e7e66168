"""JSON interchange format for cograded systems and reports.

A system document looks like::

    {
      "format": "cograded-hopf/1",
      "group": {"table": [[0, 1], [1, 0]], "labels": ["e", "g"]},
      "components": [{"dim": 1, "structure": [[0, 0, 0, "1"]], "unit": ["1"]}, ...],
      "coproduct": [{"p": 0, "q": 0, "matrix": {"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]}}, ...],
      "counit": ["1"],                                  # optional
      "antipode": [{"p": 0, "matrix": {...}}, ...]      # optional
    }

Structure constants and matrices are stored sparsely as ``[i, j, k, "c"]``
and ``[row, col, "v"]`` entries.  Every scalar is an exact fraction string.
A dual written by the ``dual`` command also carries ``dual_blocks``
(``[p, i]`` per basis vector) and the ``source_group`` table.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from . import exactnum as en
from . import group as grp
from .cograded import CogradedHopf, ComponentAlgebra
from .exactnum import ZERO, Matrix

FORMAT = "cograded-hopf/1"


class DocumentError(ValueError):
    """Malformed document; ``path`` locates the offending node."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


# --------------------------------------------------------------------------
# writing


def matrix_doc(m: Matrix) -> dict:
    entries = [[i, j, en.format_scalar(v)]
               for i in range(m.rows) for j, v in enumerate(m.row(i)) if v]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def _component_doc(c: ComponentAlgebra) -> dict:
    structure = [[i, j, k, en.format_scalar(v)]
                 for i in range(c.dim) for j in range(c.dim)
                 for k, v in c.nonzero_products(i, j)]
    return {"dim": c.dim, "structure": structure, "unit": [en.format_scalar(v) for v in c.unit]}


def _group_doc(g: grp.FiniteGroup) -> dict:
    return {"table": [list(r) for r in g.table], "labels": [g.label(p) for p in g.elements]}


def system_to_doc(h: CogradedHopf, blocks=None, source_group: Optional[grp.FiniteGroup] = None) -> dict:
    g = h.group
    doc = {
        "format": FORMAT,
        "group": _group_doc(g),
        "components": [_component_doc(c) for c in h.components],
        "coproduct": [{"p": p, "q": q, "matrix": matrix_doc(h.delta(p, q))} for p, q in h.pairs()],
    }
    if h.counit is not None:
        doc["counit"] = [en.format_scalar(v) for v in h.counit]
    if h.antipode is not None:
        doc["antipode"] = [{"p": p, "matrix": matrix_doc(h.antipode[p])} for p in g.elements]
    if blocks is not None:
        doc["dual_blocks"] = [list(b) for b in blocks]
    if source_group is not None:
        doc["source_group"] = _group_doc(source_group)
    return doc


def dumps(doc: Any, compact: bool = False) -> str:
    """Canonical text: sorted keys, fixed layout, trailing newline."""
    if compact:
        return json.dumps(jsonable(doc), sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"
    return json.dumps(jsonable(doc), sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def jsonable(x: Any) -> Any:
    """Fractions become exact strings; tuples become lists."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return en.format_scalar(x)
    if isinstance(x, Matrix):
        return [[en.format_scalar(v) for v in x.row(i)] for i in range(x.rows)]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


# --------------------------------------------------------------------------
# reading


def _get(node: dict, key: str, path: str, kind=None, optional: bool = False):
    if not isinstance(node, dict):
        raise DocumentError(path, "expected an object")
    if key not in node:
        if optional:
            return None
        raise DocumentError(f"{path}.{key}", "missing")
    value = node[key]
    if kind is not None and (not isinstance(value, kind) or isinstance(value, bool)):
        raise DocumentError(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _int(value, path: str, upper: Optional[int] = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DocumentError(path, "expected a non-negative integer")
    if upper is not None and value >= upper:
        raise DocumentError(path, f"index {value} out of range (< {upper})")
    return value


def _scalar(value, path: str) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        raise DocumentError(path, "scalars must be exact fraction strings")
    try:
        return en.parse_scalar(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(path, str(exc)) from None


def _vector(value, n: int, path: str) -> tuple:
    if not isinstance(value, list) or len(value) != n:
        raise DocumentError(path, f"expected a list of {n} scalars")
    return tuple(_scalar(v, f"{path}[{i}]") for i, v in enumerate(value))


def _matrix(node, path: str, rows: int, cols: int) -> Matrix:
    r = _int(_get(node, "rows", path), f"{path}.rows")
    c = _int(_get(node, "cols", path), f"{path}.cols")
    if (r, c) != (rows, cols):
        raise DocumentError(path, f"shape {r}x{c}, expected {rows}x{cols}")
    data = [[ZERO] * cols for _ in range(rows)]
    entries = _get(node, "entries", path, list)
    for n, ent in enumerate(entries):
        p = f"{path}.entries[{n}]"
        if not isinstance(ent, list) or len(ent) != 3:
            raise DocumentError(p, "expected [row, col, value]")
        i = _int(ent[0], f"{p}[0]", rows)
        j = _int(ent[1], f"{p}[1]", cols)
        data[i][j] = _scalar(ent[2], f"{p}[2]")
    return Matrix(rows, cols, data)


def _group(node, path: str) -> tuple:
    table = _get(node, "table", path, list)
    n = len(table)
    if n == 0:
        raise DocumentError(f"{path}.table", "empty table")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"{path}.table[{i}]", f"expected {n} entries")
        for j, v in enumerate(row):
            _int(v, f"{path}.table[{i}][{j}]", n)
    labels = _get(node, "labels", path, list, optional=True)
    if labels is not None and (len(labels) != n or not all(isinstance(x, str) for x in labels)):
        raise DocumentError(f"{path}.labels", f"expected {n} strings")
    # group axioms are checked by the caller so failures surface as axiom errors
    return table, labels


def _component(node, path: str) -> ComponentAlgebra:
    dim = _int(_get(node, "dim", path), f"{path}.dim")
    if dim < 1:
        raise DocumentError(f"{path}.dim", "must be positive")
    structure = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for n, ent in enumerate(_get(node, "structure", path, list)):
        p = f"{path}.structure[{n}]"
        if not isinstance(ent, list) or len(ent) != 4:
            raise DocumentError(p, "expected [i, j, k, value]")
        i, j, k = (_int(ent[t], f"{p}[{t}]", dim) for t in range(3))
        structure[i][j][k] = _scalar(ent[3], f"{p}[3]")
    unit = _vector(_get(node, "unit", path), dim, f"{path}.unit")
    return ComponentAlgebra(dim, structure, unit)


class SystemInput:
    """Parsed (not yet validated) assemble arguments plus dual metadata."""

    def __init__(self, table, labels, components, coproduct, counit, antipode, blocks, source):
        self.table = table
        self.labels = labels
        self.components = components
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.blocks = blocks
        self.source = source

    def group(self) -> grp.FiniteGroup:
        """Validated group; raises a :class:`GroupError` on bad tables."""
        return grp.from_table(self.table, self.labels)


def parse_system(text: str) -> SystemInput:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("$", "expected an object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise DocumentError("$.format", f"unsupported format {fmt!r}")
    table, labels = _group(_get(doc, "group", "$"), "$.group")
    n = len(table)

    comps_node = _get(doc, "components", "$", list)
    if len(comps_node) != n:
        raise DocumentError("$.components", f"expected {n} components, one per group element")
    components = [_component(c, f"$.components[{p}]") for p, c in enumerate(comps_node)]
    dims = [c.dim for c in components]

    coproduct: List[List[Optional[Matrix]]] = [[None] * n for _ in range(n)]
    for t, ent in enumerate(_get(doc, "coproduct", "$", list)):
        path = f"$.coproduct[{t}]"
        p = _int(_get(ent, "p", path), f"{path}.p", n)
        q = _int(_get(ent, "q", path), f"{path}.q", n)
        if coproduct[p][q] is not None:
            raise DocumentError(path, f"duplicate entry for (p, q) = ({p}, {q})")
        r = table[p][q]
        coproduct[p][q] = _matrix(_get(ent, "matrix", path), f"{path}.matrix", dims[p] * dims[q], dims[r])
    for p in range(n):
        for q in range(n):
            if coproduct[p][q] is None:
                raise DocumentError("$.coproduct", f"missing entry for (p, q) = ({p}, {q})")

    # a table without identity or inverses cannot size the counit and antipode;
    # leave them unread so group validation reports the axiom failure
    e = _identity_of(table)
    inverse = _inverses_of(table)
    well_formed = e is not None and None not in inverse

    counit_node = doc.get("counit")
    counit = None
    if counit_node is not None and well_formed:
        counit = _vector(counit_node, dims[e], "$.counit")

    antipode = None
    anti_node = doc.get("antipode")
    if anti_node is not None and well_formed:
        if not isinstance(anti_node, list):
            raise DocumentError("$.antipode", "expected a list")
        antipode = [None] * n
        for t, ent in enumerate(anti_node):
            path = f"$.antipode[{t}]"
            p = _int(_get(ent, "p", path), f"{path}.p", n)
            if antipode[p] is not None:
                raise DocumentError(path, f"duplicate entry for p = {p}")
            antipode[p] = _matrix(_get(ent, "matrix", path), f"{path}.matrix", dims[inverse[p]], dims[p])
        if any(s is None for s in antipode):
            raise DocumentError("$.antipode", "needs one entry per group element")

    blocks = doc.get("dual_blocks")
    if blocks is not None:
        if not isinstance(blocks, list) or not all(
                isinstance(b, list) and len(b) == 2 and all(isinstance(x, int) for x in b) for b in blocks):
            raise DocumentError("$.dual_blocks", "expected a list of [p, i] pairs")
        blocks = [tuple(b) for b in blocks]
    source = doc.get("source_group")
    if source is not None:
        source = _group(source, "$.source_group")
    return SystemInput(table, labels, components, coproduct, counit, antipode, blocks, source)


def _identity_of(table) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def _inverses_of(table) -> Sequence[Optional[int]]:
    e = _identity_of(table)
    n = len(table)
    out = []
    for p in range(n):
        out.append(next((q for q in range(n) if e is not None and table[p][q] == e and table[q][p] == e), None))
    return out
