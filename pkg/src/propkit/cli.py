"""Command-line front end.

Exit status: 0 success, 1 the formula or sequent is not valid (a
countervaluation is printed), 2 bad input or a derivation that fails to check,
3 an internal invariant broke.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .cutfree import GcfDerivation, check_gcf, cut_elimination, gcf_prove
from .errors import InternalSoundnessBreach, ParseError, PropkitError, ProofError
from .formula import format_formula, parse, parse_list
from .hilbert import HcDerivation, hc_to_nc, nc_to_hc
from .natded import NcDerivation, check_nc, show_judgement
from .normalforms import complete
from .semantics import evaluate, format_valuation, parse_valuation, truth_table
from .sequent import GcDerivation, g_to_nc, nc_to_g, show_sequent
from .serialize import calculus_of, check_derivation, from_json, to_json

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def parse_sequent(text: str):
    """``"A, B => C, D"``; either side may be empty."""
    left, sep, right = text.partition("=>")
    if not sep:
        raise InputError("a sequent needs '=>' between its two sides")
    if "=>" in right:
        raise InputError("a sequent has exactly one '=>'")
    try:
        gamma = parse_list(left) if left.strip() else []
    except ParseError as e:
        raise InputError(f"left side: {e}") from None
    try:
        delta = parse_list(right) if right.strip() else []
    except ParseError as e:
        raise InputError(f"right side: {e}") from None
    return gamma, delta


def _formula(text: str):
    try:
        return parse(text)
    except ParseError as e:
        raise InputError(str(e)) from None


def _read(path: str):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return from_json(data)


def _emit(d, out: str | None) -> None:
    check_derivation(d)  # never emit anything the checker rejects
    text = to_json(d) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _refuted(v: dict) -> int:
    print("INVALID")
    print(format_valuation(v))
    return EXIT_INVALID


def _conclusion(d) -> str:
    if isinstance(d, (NcDerivation, HcDerivation)):
        return show_judgement(d.context, d.formula)
    return show_sequent(d.gamma, d.delta)


def _as_gc(d: GcDerivation) -> GcDerivation:
    """Relabel a cut-free derivation as an ordinary sequent derivation."""
    return GcDerivation(d.rule, d.gamma, d.delta, tuple(_as_gc(p) for p in d.premises), d.pos, d.aux)


def _to_nc(d) -> NcDerivation:
    if isinstance(d, NcDerivation):
        return d
    if isinstance(d, HcDerivation):
        return hc_to_nc(d)
    return g_to_nc(d)


def translate(d, target: str):
    source = calculus_of(d)
    if target == source:
        return d
    if source == "gcf" and target == "gc":
        return _as_gc(d)
    if source == "nc" and target == "gc":
        return nc_to_g(d)
    nc = _to_nc(d)
    return {"nc": lambda: nc, "hc": lambda: nc_to_hc(nc), "gc": lambda: nc_to_g(nc)}[target]()


# --- subcommands -------------------------------------------------------------


def cmd_parse(args) -> int:
    print(format_formula(_formula(args.formula)))
    return EXIT_OK


def cmd_eval(args) -> int:
    f = _formula(args.formula)
    try:
        v = parse_valuation(args.val)
    except ValueError as e:
        raise InputError(str(e)) from None
    print("true" if evaluate(v, f) else "false")
    return EXIT_OK


def cmd_table(args) -> int:
    f = _formula(args.formula)
    names, rows = truth_table(f)
    print(" ".join(names + ("|", format_formula(f))).strip())
    for v, value in rows:
        cells = ["T" if v[n] else "F" for n in names]
        print(" ".join(cells + ["|", "T" if value else "F"]))
    return EXIT_OK


def cmd_decide(args) -> int:
    if args.sequent is not None:
        if args.formula is not None:
            raise InputError("give either a formula or --sequent, not both")
        gamma, delta = parse_sequent(args.sequent)
        result = gcf_prove(gamma, delta)
    elif args.formula is not None:
        result = complete(_formula(args.formula))
    else:
        raise InputError("nothing to decide; give a formula or --sequent")
    if isinstance(result, dict):
        return _refuted(result)
    print("VALID")
    if args.out:
        _emit(result, args.out)
    return EXIT_OK


def cmd_prove(args) -> int:
    f = _formula(args.formula)
    if args.calculus == "gcf":
        result = gcf_prove([], [f])
    else:
        result = complete(f)
        if not isinstance(result, dict):
            result = translate(result, args.calculus)
    if isinstance(result, dict):
        return _refuted(result)
    _emit(result, args.out)
    return EXIT_OK


def cmd_translate(args) -> int:
    d = _read(args.file)
    check_derivation(d)
    _emit(translate(d, args.to), args.out)
    return EXIT_OK


def cmd_cut_elim(args) -> int:
    d = _read(args.file)
    if not isinstance(d, GcDerivation):
        raise InputError("cut-elim takes a gc or gcf derivation")
    if isinstance(d, GcfDerivation):
        check_gcf(d)
        _emit(d, args.out)
    else:
        _emit(cut_elimination(d), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    d = _read(args.file)
    check_derivation(d)
    print(f"OK {calculus_of(d)} {_conclusion(d)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="propkit", description="Propositional proof kernel and tautology checker.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", help="print a formula in normal form")
    s.add_argument("formula")
    s.set_defaults(run=cmd_parse)

    s = sub.add_parser("eval", help="evaluate a formula under a valuation")
    s.add_argument("formula")
    s.add_argument("--val", default="", help='e.g. "p=true,q=false"; missing names are false')
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("table", help="print the truth table of a formula")
    s.add_argument("formula")
    s.set_defaults(run=cmd_table)

    s = sub.add_parser("decide", help="decide a formula or a sequent")
    s.add_argument("formula", nargs="?")
    s.add_argument("--sequent", help='e.g. "p, p -> q => q"')
    s.add_argument("--out", help="write the proof here")
    s.set_defaults(run=cmd_decide)

    s = sub.add_parser("prove", help="print a proof of a tautology")
    s.add_argument("formula")
    s.add_argument("--calculus", choices=("nc", "hc", "gc", "gcf"), default="nc")
    s.add_argument("--out")
    s.set_defaults(run=cmd_prove)

    s = sub.add_parser("translate", help="translate a derivation file to another calculus")
    s.add_argument("file", help="derivation JSON, or - for stdin")
    s.add_argument("--to", choices=("nc", "hc", "gc"), required=True)
    s.add_argument("--out")
    s.set_defaults(run=cmd_translate)

    s = sub.add_parser("cut-elim", help="turn a sequent derivation into a cut-free one")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(run=cmd_cut_elim)

    s = sub.add_parser("check", help="check a derivation file")
    s.add_argument("file")
    s.set_defaults(run=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    # translated Hilbert proofs can be a few thousand nodes deep
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    try:
        return args.run(args)
    except (InputError, ProofError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InternalSoundnessBreach as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except PropkitError as e:
        # parse, serialization, precondition and variable-cap errors
        if isinstance(e, ValueError):
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INPUT
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except RecursionError:
        print("internal error: recursion limit reached", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
