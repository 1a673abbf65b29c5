"""``hodge-derham`` command line: compute, compare, verify.

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cech import CechSpec
from .errors import InputError, InvariantViolation
from .pipeline import compare_embeddings, hodge_derham_ss
from .report import (
    compute_document,
    compute_to_dict,
    independence_to_dict,
    render_compute_text,
    render_independence_text,
    render_json,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def parse_window(text: str | None):
    if text is None:
        return None
    try:
        lo, hi = (int(s) for s in text.split(".."))
    except ValueError:
        raise InputError(f"window must look like a..b, got {text!r}") from None
    if lo > hi:
        raise InputError(f"empty window {text!r}")
    return lo, hi


def parse_shift(text: str | None):
    if text is None:
        return None
    parts = text.split(",")
    try:
        vals = [int(s) for s in parts]
    except ValueError:
        raise InputError(f"shift must be t or a,b, got {text!r}") from None
    if len(vals) == 1:
        return vals[0], vals[0]
    if len(vals) == 2:
        return tuple(vals)
    raise InputError(f"shift must be t or a,b, got {text!r}")


def spec_from_document(doc) -> CechSpec:
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    if "n" not in doc or "generators" not in doc:
        raise InputError("input needs keys 'n' and 'generators'")
    gens = doc["generators"]
    if not isinstance(gens, list) or any(not isinstance(g, list) for g in gens):
        raise InputError("'generators' must be a list of exponent lists")
    return CechSpec(doc["n"], tuple(tuple(g) for g in gens))


def _read_json(path: str | None, stdin):
    try:
        if path is None or path == "-":
            text = stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def cmd_compute(args, stdin, stdout) -> int:
    doc = _read_json(args.input, stdin)
    spec = spec_from_document(doc)
    window = parse_window(args.window)
    if window is None and isinstance(doc, dict) and doc.get("window") is not None:
        window = tuple(doc["window"])
    report = hodge_derham_ss(spec)
    out = compute_document(report, args.max_page, spec, window)
    stdout.write(render_json(compute_to_dict(out)) if args.json else render_compute_text(out))
    return EXIT_OK


def cmd_compare(args, stdin, stdout) -> int:
    doc = _read_json(args.input, stdin)
    spec_a = spec_from_document(doc)
    if args.against is not None:
        other = _read_json(args.against, stdin)
    elif isinstance(doc, dict) and "compare" in doc:
        other = doc["compare"]
    else:
        raise InputError("compare needs a 'compare' document or --against FILE")
    spec_b = spec_from_document(other)
    shift = parse_shift(args.shift)
    if shift is None and isinstance(doc, dict) and doc.get("shift") is not None:
        shift = tuple(doc["shift"]) if isinstance(doc["shift"], list) else doc["shift"]
    rep = compare_embeddings(spec_a, spec_b, shift)
    stdout.write(render_json(independence_to_dict(rep)) if args.json else render_independence_text(rep))
    return EXIT_OK if rep.verdict else EXIT_MISMATCH


def cmd_verify(args, stdin, stdout) -> int:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    results = run_suite(args.suite, parse_window(args.window))
    passed = sum(r.ok for r in results)
    if args.json:
        data = {
            "suite": args.suite,
            "passed": passed,
            "failed": len(results) - passed,
            "checks": [{"suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        }
        stdout.write(render_json(data))
    else:
        for r in results:
            tail = f"  ({r.detail})" if r.detail else ""
            stdout.write(f"{'PASS' if r.ok else 'FAIL'} [{r.suite}] {r.name}{tail}\n")
        stdout.write(f"{passed}/{len(results)} checks passed\n")
    return EXIT_OK if passed == len(results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hodge-derham", description="Hodge-de Rham spectral sequences of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of tables")
        p.add_argument("--window", metavar="a..b", help="degree box for local cohomology / verify checks")
        p.add_argument("--input", metavar="FILE", help="input JSON document (default: stdin)")

    p = sub.add_parser("compute", help="pages, abutment and de Rham homology of one embedding")
    common(p)
    p.add_argument("--max-page", type=int, metavar="r", help="show pages E_1 .. E_r")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="compare two embeddings up to a bidegree shift")
    common(p)
    p.add_argument("--against", metavar="FILE", help="second embedding (default: the 'compare' key)")
    p.add_argument("--shift", metavar="t|a,b", help="expected bidegree shift (default: difference of n)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run a built-in verification suite")
    p.add_argument("suite", help="one of " + ", ".join(SUITES))
    p.add_argument("--json", action="store_true")
    p.add_argument("--window", metavar="a..b")
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_options(argv):
    # let "--window -3..3" through: argparse would read the value as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--window", "--shift"):
            out.append(f"{tok}={next(it, '')}")
        else:
            out.append(tok)
    return out


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    argv = _glue_options(sys.argv[1:] if argv is None else list(argv))
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdin, stdout)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InvariantViolation as exc:
        stderr.write(f"internal invariant violated: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
