"""Command-line front end (``dessins``)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog
from .catalog import CatalogError, DsnError, format_dsn
from .dessin import (
    Dessin,
    DessinError,
    analyze,
    automorphism_count,
    dessin_type,
    genus_signature,
    is_quotient,
    macbeath_classify,
)
from .expr import ExprError, evaluate, parse_expr
from .groups import GroupError
from .joins import JoinError, handle_projection_check, x_handles, y_handles
from .perm import PermutationError, cycle_analysis
from .verify import run_verify

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_USER_ERRORS = (ExprError, CatalogError, DsnError, DessinError, JoinError, PermutationError, GroupError, OSError)

_EPILOG = """\
join expressions:
  NAME            a catalog dessin (see `dessins list`); P<p> is the modular dessin P(p)
  <path.dsn>      a dessin read from a .dsn file
  E(k)F           (k)-join along the first (k)-handle of each side, k in 1..3
  E(k@i,j)F       the same with the i-th (k)-handle of E and the j-th of F
  X(E,F@i,G)      x-join; E@i picks the i-th x-handle (default 0)
  TWIST(E@i,F@j)  y-join with the crossed pairing, indices into all y-handles
  Joins associate to the left; use parentheses to group.

handle selectors count from 0 in the list printed by `dessins handles`, which is
sorted by (k, a, b).  The (k)-selector of E(k@i,j)F counts only handles of kind k.

exit status: 0 success, 1 verification failure, 2 usage or input error.
The DESSIN_FIXTURES environment variable overrides the fixture directory.
"""


def _load(text: str) -> Dessin:
    return evaluate(parse_expr(text))


def _notation(p) -> str:
    return cycle_analysis(p).notation()


def _handle_lines(d: Dessin) -> list:
    lines = []
    for label, hs in (("y-handles", y_handles(d)), ("x-handles", x_handles(d))):
        if not hs:
            lines.append("%s: none" % label)
            continue
        lines.append("%s:" % label)
        per_kind: dict = {}
        for i, h in enumerate(hs):
            j = per_kind.get(h.k, 0)
            per_kind[h.k] = j + 1
            lines.append("  [%d] (%d)#%d  %d -> %d" % (i, h.k, j, h.a + 1, h.b + 1))
    return lines


def cmd_list(args) -> int:
    for name in catalog.names():
        d = catalog.named(name)
        row = catalog.TABLE1.get(name)
        extra = "  table row: %s" % row.group if row else ""
        print("%-6s degree %4d  type %s%s" % (name, d.degree, dessin_type(d), extra))
    print("P<p>   modular dessin P(p) for an odd prime p")
    return EXIT_OK


def cmd_info(args) -> int:
    d = _load(args.expr)
    sig = genus_signature(d)
    facts = analyze(d, seed=args.seed)
    print("expression: %s" % args.expr)
    print("degree: %d" % d.degree)
    print("type: %s" % dessin_type(d))
    print("genus: %d" % sig.genus)
    print("signature: %s" % sig)
    print("(alpha, beta, gamma): (%d, %d, %d)" % (sig.alpha, sig.beta, sig.gamma))
    print("passport: x %s | y %s | z %s" % (_notation(d.x), _notation(d.y), _notation(d.z)))
    for line in _handle_lines(d):
        print(line)
    print("automorphisms: %d" % automorphism_count(d))
    print("group: %s" % facts.summary())
    return EXIT_OK


def cmd_handles(args) -> int:
    for line in _handle_lines(_load(args.expr)):
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(args.tier, args.seed)
    print(report.render(verbose=not args.quiet))
    return EXIT_OK if report.passed else EXIT_FAILED


def to_dot(d: Dessin, name: str = "dessin") -> str:
    lines = ["graph %s {" % _dot_id(name)]
    for z in d.z.cycles(include_fixed=True):
        lines.append("  // face %s" % _cycle_text(z))
    x_of, y_of = {}, {}
    for i, cyc in enumerate(d.x.cycles(include_fixed=True)):
        lines.append('  b%d [shape=circle, style=filled, fillcolor=black, label=""];' % i)
        x_of.update((pt, i) for pt in cyc)
    for i, cyc in enumerate(d.y.cycles(include_fixed=True)):
        lines.append('  w%d [shape=circle, style=filled, fillcolor=white, label=""];' % i)
        y_of.update((pt, i) for pt in cyc)
    for pt in range(d.degree):
        lines.append('  b%d -- w%d [label="%d"];' % (x_of[pt], y_of[pt], pt + 1))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cycle_text(cycle: Sequence[int]) -> str:
    return "(" + " ".join(str(p + 1) for p in cycle) + ")"


def _dot_id(name: str) -> str:
    return '"%s"' % name.replace('"', "'")


def cmd_export(args) -> int:
    d = _load(args.expr)
    if args.format == "dot":
        text = to_dot(d, args.expr)
    else:
        text = format_dsn(d, ["dessin %s" % args.expr])
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_macbeath(args) -> int:
    print(macbeath_classify(args.q))
    return EXIT_OK


def cmd_covers(args) -> int:
    cover, base = _load(args.cover), _load(args.base)
    phi = is_quotient(cover, base)
    if phi is None:
        print("%s does not cover %s" % (args.cover, args.base))
        return EXIT_FAILED
    print("%s covers %s with %d sheets" % (args.cover, args.base, cover.degree // base.degree))
    print("map: " + " ".join("%d->%d" % (i + 1, j + 1) for i, j in enumerate(phi)))
    print("handles project: %s" % str(handle_projection_check(cover, base, phi)).lower())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dessins",
        description="Dessins d'enfants as permutation pairs: handles, joins and monodromy groups.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog dessins").set_defaults(func=cmd_list)

    p = sub.add_parser("info", help="invariants, handles and monodromy group of a dessin",
                       epilog=_EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("expr")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("handles", help="numbered handle inventory (for @ selectors)",
                       epilog=_EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("expr")
    p.set_defaults(func=cmd_handles)

    p = sub.add_parser("verify", help="run the claims report")
    p.add_argument("--tier", choices=("core", "full"), default="core")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-q", "--quiet", action="store_true", help="one line per criterion")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a dessin as DOT or .dsn")
    p.add_argument("--format", choices=("dot", "dsn"), required=True)
    p.add_argument("expr")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("macbeath", help="is PSL2(q) a Hurwitz group")
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_macbeath)

    p = sub.add_parser("covers", help="test whether one dessin covers another")
    p.add_argument("cover")
    p.add_argument("base")
    p.set_defaults(func=cmd_covers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _USER_ERRORS as exc:
        print("dessins: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
