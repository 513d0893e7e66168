"""Command line front end.

    cograded-hopf verify FILE            axioms, grading laws, embedding, dual-basis identities
    cograded-hopf integrals FILE         integral, cointegral and modular data
    cograded-hopf dual FILE -o OUT       write the dual system and check biduality
    cograded-hopf example NAME [...]     write a catalogue system

``-`` reads stdin or writes stdout.  Reports are canonical JSON on stdout
(or ``--report``); a one-line summary goes to stderr.  Exit status: 0 when
every check passes, 1 on an axiom or property failure, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Tuple

from . import __version__
from . import document as docmod
from . import examples as ex
from . import group as grp
from . import integrals as ig
from .cograded import (
    CogradedHopf,
    Report,
    assemble,
    verify_antipode_antihom,
    verify_gamma_embedding,
    verify_grading_laws,
)
from .dual import bidual_pairing_check, build_dual
from .errors import HopfError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Unreadable file, bad arguments or malformed document (exit 2)."""


# --------------------------------------------------------------------------
# report helpers


def _report_doc(rep: Report) -> dict:
    out = {"passed": rep.passed, "witnesses": rep.witnesses}
    if rep.details:
        out["details"] = rep.details
    return out


def _error_doc(exc: HopfError) -> dict:
    return {"passed": False, "error": exc.kind, "message": str(exc), "witnesses": [exc.witness]}


def _header(command: str, data: bytes) -> dict:
    return {"command": command, "tool_version": __version__, "input_digest": docmod.digest(data)}


def _system_summary(h: CogradedHopf) -> dict:
    return {"group_order": h.group.order, "dims": list(h.dims), "total_dim": h.total_dim}


def _load(data: bytes, report: dict) -> Optional[CogradedHopf]:
    """Parse and assemble; on an axiom failure record it in ``report`` and return None."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"$: not UTF-8 ({exc})") from None
    try:
        sysin = docmod.parse_system(text)
    except docmod.DocumentError as exc:
        raise InputError(str(exc)) from None
    try:
        g = sysin.group()
        h = assemble(g, sysin.components, sysin.coproduct, sysin.counit, sysin.antipode)
    except HopfError as exc:
        report["checks"] = {"assemble": _error_doc(exc)}
        report["passed"] = False
        return None
    solved = {}
    if sysin.counit is None:
        solved["counit"] = list(h.counit)
    if sysin.antipode is None:
        solved["antipode"] = [{"p": p, "matrix": docmod.matrix_doc(h.antipode[p])} for p in g.elements]
    if solved:
        report["solved"] = solved
    report["system"] = _system_summary(h)
    return h


# --------------------------------------------------------------------------
# commands (in-process)


def run_verify(data: bytes) -> Tuple[int, dict]:
    report = _header("verify", data)
    h = _load(data, report)
    if h is None:
        return EXIT_FAIL, report
    checks = {"assemble": {"passed": True, "witnesses": []}}
    for rep in (verify_antipode_antihom(h), verify_grading_laws(h),
                verify_gamma_embedding(h), ig.verify_dual_basis_identities(h)):
        checks[rep.name] = _report_doc(rep)
    report["checks"] = checks
    report["passed"] = all(c["passed"] for c in checks.values())
    return (EXIT_OK if report["passed"] else EXIT_FAIL), report


def run_integrals(data: bytes) -> Tuple[int, dict]:
    report = _header("integrals", data)
    h = _load(data, report)
    if h is None:
        return EXIT_FAIL, report
    try:
        d = ig.integral_data(h)
    except HopfError as exc:
        report["checks"] = {"integral_data": _error_doc(exc)}
        report["passed"] = False
        return EXIT_FAIL, report
    space = ig.invariant_functional_space(h)
    oracle = {"dimension": len(space), "contains_phi": ig.in_span(space, d.phi)}
    oracle["passed"] = oracle["dimension"] == 1 and oracle["contains_phi"]
    checks = {
        "left_invariance": _report_doc(ig.verify_left_invariance(h, d.phi)),
        "right_invariance": _report_doc(ig.verify_right_invariance(h, d.psi)),
        "cointegral": _report_doc(ig.verify_cointegral(h, d.h)),
        "oracle": oracle,
    }
    report["checks"] = checks
    report["integrals"] = {
        "phi": list(d.phi.parts),
        "psi": list(d.psi.parts),
        "cointegral": d.h,
        "delta": list(d.delta.parts),
        "sigma": list(d.sigma),
        "sigma_prime": list(d.sigma_prime),
        "nu": d.nu,
    }
    report["passed"] = all(c["passed"] for c in checks.values())
    return (EXIT_OK if report["passed"] else EXIT_FAIL), report


def run_dual(data: bytes) -> Tuple[int, dict, Optional[str]]:
    """Returns exit code, report and the dual system document text."""
    report = _header("dual", data)
    h = _load(data, report)
    if h is None:
        return EXIT_FAIL, report, None
    try:
        d = build_dual(h)
    except HopfError as exc:
        report["checks"] = {"build_dual": _error_doc(exc)}
        report["passed"] = False
        return EXIT_FAIL, report, None
    bidual = bidual_pairing_check(h)
    report["checks"] = {"bidual_pairing": _report_doc(bidual)}
    report["dual"] = {"dim": d.dim, "blocks": [list(b) for b in d.blocks], "source_dims": list(h.dims)}
    report["passed"] = bidual.passed
    text = docmod.dumps(docmod.system_to_doc(d.hopf, d.blocks, h.group), compact=True)
    return (EXIT_OK if bidual.passed else EXIT_FAIL), report, text


def _group_arg(args) -> grp.FiniteGroup:
    if getattr(args, "group", None):
        return grp.named(args.group)
    if getattr(args, "order", None):
        return grp.cyclic(args.order)
    raise ValueError("give --group NAME or --order N")


def build_example(args) -> CogradedHopf:
    """Build the named catalogue system from parsed ``example`` arguments."""
    name = args.builder
    if name == "kgroup":
        return ex.k_of_group(_group_arg(args))
    if name == "trivial":
        if args.base:
            return ex.base_by_name(args.base)
        return ex.group_algebra(_group_arg(args))
    if name == "sweedler":
        return ex.sweedler()
    if name == "smash":
        return ex.smash(ex.named_action(args.group or "z2", args.base or "kz3", args.action or "inversion"))
    if name == "semidirect":
        g = grp.named(args.group or "z2")
        n = grp.named(args.normal or "z3")
        action = args.action or "inversion"
        if action == "inversion":
            rho = grp.inversion_action(g, n)
        elif action == "trivial":
            rho = grp.trivial_action(g, n)
        else:
            raise ValueError(f"unknown semidirect action {action!r}")
        return ex.semidirect_function_algebra(g, n, rho)
    if name == "adjoint":
        return ex.adjoint_example(grp.named(args.group or "s3"))
    raise ValueError(f"unknown builder {name!r}")


# --------------------------------------------------------------------------
# I/O


def _read(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        if path == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _summary(report: dict) -> str:
    verdict = "PASS" if report.get("passed") else "FAIL"
    failed = sorted(k for k, v in report.get("checks", {}).items() if not v.get("passed"))
    line = f"{report['command']}: {verdict}"
    if "system" in report:
        line += f" (dims {report['system']['dims']})"
    if failed:
        line += " failed: " + ", ".join(failed)
    return line


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cograded-hopf", description="Exact checks for cograded Hopf systems.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("verify", "integrals"):
        p = sub.add_parser(name)
        p.add_argument("input")
        p.add_argument("-o", "--output", default="-", help="report path (default stdout)")

    p = sub.add_parser("dual")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True, help="path for the dual system document")
    p.add_argument("-r", "--report", default="-", help="report path (default stdout)")

    p = sub.add_parser("example")
    p.add_argument("builder", choices=["kgroup", "trivial", "sweedler", "smash", "semidirect", "adjoint"])
    p.add_argument("--order", type=int)
    p.add_argument("--cyclic", action="store_true", help="use Z/N for --order N (the default)")
    p.add_argument("--group")
    p.add_argument("--base", help="kH, qH or sweedler")
    p.add_argument("--normal", help="normal subgroup for semidirect")
    p.add_argument("--action", help="trivial, inversion or negate-x")
    p.add_argument("-o", "--output", default="-")
    return ap


def _emit(report: dict, path: str) -> None:
    _write(path, docmod.dumps(report))
    print(_summary(report), file=sys.stderr)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "example":
            try:
                h = build_example(args)
            except (ValueError, HopfError) as exc:
                raise InputError(f"example {args.builder}: {exc}") from None
            _write(args.output, docmod.dumps(docmod.system_to_doc(h), compact=True))
            print(f"example {args.builder}: dims {list(h.dims)}", file=sys.stderr)
            return EXIT_OK
        data = _read(args.input)
        if args.command == "dual":
            if args.output == "-" and args.report == "-":
                raise InputError("dual document and report cannot both go to stdout")
            code, report, text = run_dual(data)
            if text is not None:
                _write(args.output, text)
            _emit(report, args.report)
            return code
        runner: Callable = run_verify if args.command == "verify" else run_integrals
        code, report = runner(data)
        _emit(report, args.output)
        return code
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
