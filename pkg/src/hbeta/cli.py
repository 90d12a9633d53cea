"""Command-line front end: ``hbeta <command> <file> [options]``.

Each command maps onto one library operation.  The report lists the checks
that operation performs (preconditions for builders, then a verification of
the built object) and the exit status is 0 on pass, 1 on a failed check and
2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from dataclasses import dataclass
from typing import Callable, Optional

from . import __version__
from .colie import beta_cocommutator, bialgebra_verify, coassoc_verify, colie_verify
from .document import Document, DocumentError, dumps, parse, serialize, to_json
from .errors import HBetaError, PreconditionError
from .gradedalg import assoc_verify, beta_commutator, compare_tables, lie_verify, twist_algebra, twist_lie
from .grading import bichar_verify, cocycle_verify, twist_bicharacter
from .matched import (
    bb3_verify,
    dcs_bialgebra,
    double_cross_sum,
    iso_check,
    matched_verify,
    split_from_decomposition,
    twist_matched_pair,
)
from .report import DEFAULT_CAP, VerificationReport

TOOL = "hbeta"

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class Flags:
    entity: Optional[str] = None
    sigma: Optional[str] = None
    force: bool = False
    cap: int = DEFAULT_CAP
    workers: int = 1
    partition: Optional[list] = None


@dataclass
class Outcome:
    report: VerificationReport
    document: Optional[Document] = None
    forced: bool = False


def _pick(doc: Document, section: str, name: Optional[str], flag: str = "--entity"):
    table = getattr(doc, section)
    if name is None:
        if len(table) != 1:
            raise DocumentError(f"{flag} required: document has {len(table)} entries in {section!r}")
        name = next(iter(table))
    if name not in table:
        raise DocumentError(f"unknown name {name!r} in {section!r}")
    return name, table[name]


def _sigma(doc: Document, flags: Flags):
    return _pick(doc, "cocycles", flags.sigma, "--sigma")[1]


def _base(doc: Document, beta=None) -> Document:
    return Document.empty(doc.field, beta or doc.beta)


def _add_pair(out: Document, name: str, pair, dA=None, dH=None):
    a = out.add("lie_algebras", f"{name}_A", pair.A)
    h = out.add("lie_algebras", f"{name}_H", pair.H)
    out.add("actions", f"{name}_left", pair.left, h)
    out.add("actions", f"{name}_right", pair.right, h)
    for d, hint in ((dA, a), (dH, h)):
        if d is not None:
            out.add("cobrackets", f"{hint}_delta", d, hint)
    out.pairs[name] = (pair, dA, dH)


# commands -------------------------------------------------------------------

def _verify_bichar(doc, f):
    return Outcome(bichar_verify(doc.beta, f.cap, f.workers))


def _verify_cocycle(doc, f):
    return Outcome(cocycle_verify(_pick(doc, "cocycles", f.sigma or f.entity, "--sigma")[1], f.cap, f.workers))


def _verify_lie(doc, f):
    return Outcome(lie_verify(_pick(doc, "lie_algebras", f.entity)[1], f.cap, f.workers))


def _verify_colie(doc, f):
    return Outcome(colie_verify(_pick(doc, "cobrackets", f.entity)[1], doc.beta, f.cap, f.workers))


def _verify_bialgebra(doc, f):
    L, d = _pick(doc, "bialgebras", f.entity)[1]
    report = VerificationReport()
    report.extend(lie_verify(L, f.cap, f.workers), "lie: ")
    report.extend(colie_verify(d, doc.beta, f.cap, f.workers), "colie: ")
    report.extend(bialgebra_verify(L, d, f.cap, f.workers))
    return Outcome(report)


def _verify_matched(doc, f):
    return Outcome(matched_verify(doc.matched_pair(_pick(doc, "pairs", f.entity)[0]), f.cap, f.workers))


def _verify_bb3(doc, f):
    return Outcome(bb3_verify(doc.cobracked_pair(_pick(doc, "pairs", f.entity)[0]), f.cap, f.workers))


def _build_dcs(doc, f):
    name, _ = _pick(doc, "pairs", f.entity)
    pair = doc.matched_pair(name)
    report = matched_verify(pair, f.cap, f.workers)
    if not report.passed and not f.force:
        return Outcome(report)
    L = double_cross_sum(pair, force=True)
    report.extend(lie_verify(L, f.cap, f.workers), "dcs: ")
    out = _base(doc)
    out.add("lie_algebras", f"{name}_dcs", L)
    return Outcome(report, out, forced=f.force)


def _build_dcs_bialgebra(doc, f):
    name, _ = _pick(doc, "pairs", f.entity)
    try:
        L, d = dcs_bialgebra(doc.cobracked_pair(name))
    except PreconditionError as exc:
        return Outcome(exc.report)
    report = VerificationReport()
    report.extend(lie_verify(L, f.cap, f.workers), "lie: ")
    report.extend(colie_verify(d, doc.beta, f.cap, f.workers), "colie: ")
    report.extend(bialgebra_verify(L, d, f.cap, f.workers))
    out = _base(doc)
    lname = out.add("lie_algebras", f"{name}_dcs", L)
    out.add("cobrackets", f"{name}_dcs_delta", d, lname)
    out.bialgebras[f"{name}_dcs"] = (L, d)
    return Outcome(report, out)


def _build_beta_commutator(doc, f):
    name, A = _pick(doc, "algebras", f.entity)
    report = assoc_verify(A, f.cap, f.workers)
    L = beta_commutator(A, doc.beta)
    report.extend(lie_verify(L, f.cap, f.workers), "result: ")
    out = _base(doc)
    out.add("lie_algebras", f"{name}_commutator", L, name)
    return Outcome(report, out)


def _build_beta_cocommutator(doc, f):
    name, C = _pick(doc, "coalgebras", f.entity)
    report = coassoc_verify(C, f.cap, f.workers)
    d = beta_cocommutator(C, doc.beta)
    report.extend(colie_verify(d, doc.beta, f.cap, f.workers), "result: ")
    out = _base(doc)
    out.add("cobrackets", f"{name}_cocommutator", d, name)
    return Outcome(report, out)


def _twist_lie(doc, f):
    name, L = _pick(doc, "lie_algebras", f.entity)
    Ls = twist_lie(L, _sigma(doc, f))
    out = _base(doc, Ls.beta)
    out.add("lie_algebras", f"{name}_twisted", Ls, name)
    return Outcome(lie_verify(Ls, f.cap, f.workers), out)


def _twist_algebra(doc, f):
    name, A = _pick(doc, "algebras", f.entity)
    sigma = _sigma(doc, f)
    As = twist_algebra(A, sigma)
    out = _base(doc, twist_bicharacter(doc.beta, sigma))
    out.add("algebras", f"{name}_twisted", As, name)
    return Outcome(assoc_verify(As, f.cap, f.workers), out)


def _twist_bichar(doc, f):
    beta = twist_bicharacter(doc.beta, _sigma(doc, f))
    return Outcome(bichar_verify(beta, f.cap, f.workers), _base(doc, beta))


def _twist_pair(doc, f):
    name, _ = _pick(doc, "pairs", f.entity)
    pair = twist_matched_pair(doc.matched_pair(name), _sigma(doc, f))
    out = _base(doc, pair.beta)
    _add_pair(out, f"{name}_twisted", pair)
    return Outcome(matched_verify(pair, f.cap, f.workers), out)


def _iso_check(doc, f):
    name, _ = _pick(doc, "pairs", f.entity)
    return Outcome(iso_check(doc.matched_pair(name), _sigma(doc, f), f.cap))


def _split(doc, f):
    name, L = _pick(doc, "lie_algebras", f.entity)
    if not f.partition:
        raise DocumentError("--partition required: comma-separated basis names of the A part")
    a_part = list(f.partition)
    for n in a_part:
        if n not in L.basis.names:
            raise DocumentError(f"unknown name {n!r} in --partition")
    h_part = [n for n in L.basis.names if n not in a_part]
    pair = split_from_decomposition(L, a_part, h_part)
    report = matched_verify(pair, f.cap, f.workers)
    rebuilt = double_cross_sum(pair, force=True)
    report.checks.append(compare_tables(rebuilt.bracket, L.bracket, f.cap, "round-trip"))
    out = _base(doc)
    _add_pair(out, f"{name}_split", pair)
    return Outcome(report, out)


COMMANDS: dict = {
    "verify-lie": _verify_lie,
    "verify-colie": _verify_colie,
    "verify-bialgebra": _verify_bialgebra,
    "verify-cocycle": _verify_cocycle,
    "verify-bichar": _verify_bichar,
    "verify-matched": _verify_matched,
    "verify-bb3": _verify_bb3,
    "build-dcs": _build_dcs,
    "build-dcs-bialgebra": _build_dcs_bialgebra,
    "build-beta-commutator": _build_beta_commutator,
    "build-beta-cocommutator": _build_beta_cocommutator,
    "twist-lie": _twist_lie,
    "twist-algebra": _twist_algebra,
    "twist-bichar": _twist_bichar,
    "twist-pair": _twist_pair,
    "iso-check": _iso_check,
    "split": _split,
}


# reports --------------------------------------------------------------------

def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def run(command: str, doc: Document, flags: Flags) -> Outcome:
    """Dispatch ``command`` on ``doc``; input problems raise DocumentError."""
    try:
        handler: Callable = COMMANDS[command]
    except KeyError:
        raise DocumentError(f"unknown command {command!r}") from None
    try:
        return handler(doc, flags)
    except PreconditionError as exc:
        if exc.report is None:
            raise
        return Outcome(exc.report)


def report_json(command: str, text: str, outcome: Outcome, flags: Flags, embed: bool) -> dict:
    body = outcome.report.to_dict()
    out = {
        "tool": TOOL,
        "version": __version__,
        "command": command,
        "input_digest": digest(text),
        "entity": flags.entity,
        "sigma": flags.sigma,
        "forced": outcome.forced,
        "verdict": body["verdict"],
        "checks": body["checks"],
    }
    if outcome.document is not None and embed:
        out["document"] = to_json(outcome.document)
    return out


def report_text(command: str, text: str, outcome: Outcome) -> str:
    r = outcome.report
    lines = [
        f"{TOOL} {__version__}  {command}  {digest(text)}",
        r.summary(),
        f"verdict: {'PASS' if r.passed else 'FAIL'}" + ("  (forced build)" if outcome.forced else ""),
    ]
    return "\n".join(line for line in lines if line) + "\n"


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=TOOL, description="Verify and build (H, beta)-Lie structures.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("file", help="input document (JSON, UTF-8); '-' for stdin")
    p.add_argument("--entity", help="name of the structure to act on")
    p.add_argument("--sigma", help="name of the cocycle to twist by")
    p.add_argument("--force", action="store_true", help="build-dcs: build even if the pair fails")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the built document here instead of embedding it")
    p.add_argument("--witness-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--partition", help="split: comma-separated basis names of the A part")
    p.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    if args.witness_cap < 1 or args.workers < 1:
        print(f"{TOOL}: --witness-cap and --workers must be at least 1", file=stderr)
        return EXIT_INPUT
    flags = Flags(
        entity=args.entity,
        sigma=args.sigma,
        force=args.force,
        cap=args.witness_cap,
        workers=args.workers,
        partition=[s.strip() for s in args.partition.split(",") if s.strip()] if args.partition else None,
    )
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse(text)
        outcome = run(args.command, doc, flags)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{TOOL}: cannot read {args.file}: {exc}", file=stderr)
        return EXIT_INPUT
    except (HBetaError, ValueError, KeyError) as exc:
        print(f"{TOOL}: input error: {exc}", file=stderr)
        return EXIT_INPUT

    if outcome.document is not None and args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize(outcome.document))
    if args.format == "json":
        stdout.write(dumps(report_json(args.command, text, outcome, flags, embed=not args.out)) + "\n")
    else:
        stdout.write(report_text(args.command, text, outcome))
        if outcome.document is not None and not args.out:
            stdout.write(serialize(outcome.document))
    return EXIT_PASS if outcome.report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
