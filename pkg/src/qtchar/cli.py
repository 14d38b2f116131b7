"""Command-line interface: ``qtchar <command> ...`` (also ``python -m qtchar``).

Exit status: 0 on success or passing checks, 1 on a failing check or a
computation error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .algorithm import (BudgetExceeded, InconsistentAlgorithm, NonzeroResidue, PreconditionError,
                        fundamental_qcharacter, kernel_decompose, standard_qcharacter)
from .cache import ResultCache, cache_key, cached
from .cartan import CartanError, parse_family
from .checks import format_table
from .monomial import format_monomial, parse_machine
from .qt import fundamental_qt, qt_standard
from .serialize import emit_character, parse_character
from .suites import SUITES, run_suite

FAMILY_GRAMMAR = "family: A<n>, B<n>, C<n>, D<n>, F4, G2 or A<n>~ (untwisted affine), e.g. F4, A2~"
FACTOR_GRAMMAR = ("factor list: 'i:l,i:l,...' (node:shift, e.g. 1:0,1:2) "
                  "or a machine monomial 'Y[i,l]^e * ...' with e >= 1")


class UsageError(Exception):
    pass


def _family(spec: str):
    try:
        return parse_family(spec)
    except CartanError as exc:
        raise UsageError(f"{exc}\n{FAMILY_GRAMMAR}") from None


def _node(cd, text) -> int:
    try:
        i = int(text)
    except ValueError:
        raise UsageError(f"node must be an integer, got {text!r}") from None
    if i not in cd.nodes:
        raise UsageError(f"{cd.name} has nodes {list(cd.nodes)}, got {i}")
    return i


_FACTOR = re.compile(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*$")


def parse_factors(cd, text: str) -> list[tuple[int, int]]:
    if "Y" in text:
        try:
            m = parse_machine(text)
        except ValueError as exc:
            raise UsageError(f"{exc}\n{FACTOR_GRAMMAR}") from None
        if any(e < 0 for _, e in m.items()):
            raise UsageError(f"a standard module needs a dominant monomial, got {text!r}")
        out = [(i, l) for (i, l), e in m.items() for _ in range(e)]
    else:
        out = []
        for part in text.split(","):
            mt = _FACTOR.match(part)
            if not mt:
                raise UsageError(f"bad factor {part!r}\n{FACTOR_GRAMMAR}")
            out.append((int(mt.group(1)), int(mt.group(2))))
    for i, _ in out:
        _node(cd, i)
    if not out:
        raise UsageError(f"empty factor list\n{FACTOR_GRAMMAR}")
    return out


def _subset(cd, text: str) -> list[int]:
    try:
        J = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise UsageError(f"--subset expects comma-separated node indices, got {text!r}") from None
    for j in J:
        _node(cd, j)
    if not J:
        raise UsageError("--subset is empty")
    return J


def _cache(args) -> ResultCache | None:
    return None if args.no_cache else ResultCache()


def _emit_cached(args, key_fields: dict, compute) -> int:
    """Write the (possibly cached) payload; with --cross-check compare it to a fresh run."""
    key = cache_key(**key_fields)
    cache = _cache(args)
    payload = cached(cache, key, compute)
    if args.cross_check:
        fresh = compute()
        if fresh != payload:
            print("cross-check failed: cached output differs from recomputation", file=sys.stderr)
            return 1
        print("cross-check: cached output is byte-identical to recomputation", file=sys.stderr)
    sys.stdout.buffer.write(payload)
    sys.stdout.flush()
    return 0


def _limits(args) -> dict:
    return {"max_height": args.max_height, "max_terms": args.max_terms, "workers": args.workers}


def cmd_fundamental(args) -> int:
    cd = _family(args.family)
    i = _node(cd, args.node)
    lim = _limits(args)

    def compute() -> bytes:
        if args.t:
            ch = fundamental_qt(cd, i, args.shift, **lim)
        else:
            ch = fundamental_qcharacter(cd, i, args.shift, **lim)
        return emit_character(ch, args.format)

    fields = {"cmd": "fundamental", "family": cd.name, "node": i, "shift": args.shift,
              "max_height": args.max_height, "max_terms": args.max_terms, "t": args.t,
              "format": args.format}
    return _emit_cached(args, fields, compute)


def cmd_standard(args) -> int:
    cd = _family(args.family)
    factors = parse_factors(cd, args.factors)
    lim = _limits(args)

    def compute() -> bytes:
        if args.t:
            ch = qt_standard(cd, factors, **lim)
        else:
            ch = standard_qcharacter(cd, factors, **lim)
        return emit_character(ch, args.format)

    fields = {"cmd": "standard", "family": cd.name, "factors": sorted(factors),
              "max_height": args.max_height, "max_terms": args.max_terms, "t": args.t,
              "format": args.format}
    return _emit_cached(args, fields, compute)


def cmd_branch(args) -> int:
    cd = _family(args.family)
    J = _subset(cd, args.subset)
    try:
        with open(args.char_file, "rb") as fh:
            ch = parse_character(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.char_file}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"{args.char_file}: {exc}") from None
    if ch.mode != "int":
        raise UsageError("branch needs a character with integer coefficients")
    parts = kernel_decompose(cd, ch, J)
    if args.format == "json":
        doc = [{"monomial": [[i, l, e] for (i, l), e in m.items()], "coeff": c} for m, c in parts]
        print(json.dumps({"subset": J, "terms": doc}, separators=(",", ":")))
    else:
        for m, c in parts:
            print(f"{c} {format_monomial(m)}")
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
        if args.verbose or not r.passed:
            print(format_table(r.reports))
    return 0 if all(r.passed for r in results) else 1


def cmd_cache(args) -> int:
    cache = ResultCache()
    if args.action == "status":
        st = cache.status()
        print(f"path: {st['path']}\nentries: {st['entries']}\nbytes: {st['bytes']}")
    else:
        print(f"removed {cache.clear()} entries")
    return 0


def _compute_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t", action="store_true", help="compute the t-deformed q,t-character")
    p.add_argument("--max-height", type=int, default=None, metavar="H",
                   help="stop after height H (mandatory for affine families)")
    p.add_argument("--max-terms", type=int, default=None, metavar="N",
                   help="fail with BudgetExceeded beyond N terms")
    p.add_argument("--workers", type=int, default=1, metavar="W",
                   help="threads per height level (output does not depend on W)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the result cache")
    p.add_argument("--cross-check", action="store_true",
                   help="recompute and compare with the cached bytes")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtchar", description="q-characters and q,t-characters "
                                "of fundamental and standard modules.")
    p.add_argument("--version", action="version", version=f"qtchar {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fundamental", help="character with highest monomial Y_{node,shift}",
                       epilog=FAMILY_GRAMMAR)
    f.add_argument("family")
    f.add_argument("node")
    f.add_argument("shift", type=int)
    _compute_options(f)
    f.set_defaults(func=cmd_fundamental)

    s = sub.add_parser("standard", help="product over a factor list", epilog=FACTOR_GRAMMAR)
    s.add_argument("family")
    s.add_argument("factors")
    _compute_options(s)
    s.set_defaults(func=cmd_standard)

    b = sub.add_parser("branch", help="decompose a character file along a node subset")
    b.add_argument("family")
    b.add_argument("char_file")
    b.add_argument("--subset", required=True, help="comma-separated nodes, e.g. 1,2")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.set_defaults(func=cmd_branch)

    v = sub.add_parser("verify", help="run the built-in verification suites")
    v.add_argument("--suite", choices=tuple(SUITES), default="all")
    v.add_argument("-v", "--verbose", action="store_true", help="print every report")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cache", help="inspect or clear the result cache")
    c.add_argument("action", choices=("status", "clear"))
    c.set_defaults(func=cmd_cache)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, CartanError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, InconsistentAlgorithm, NonzeroResidue, AssertionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
