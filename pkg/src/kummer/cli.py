"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (invalid curve, unsupported
place, failed verification), 2 on a usage error (bad flags, unreadable spec
file, malformed place index).
"""
import argparse
import csv
import sys

from . import __version__
from .criteria import (
    hyperelliptic_classify,
    maximality_obstruction,
    ugly_conditions,
)
from .curve import load_spec, parse_curve
from .errors import KummerError
from .gaps import (
    certified_generic_gaps,
    dimension_jump,
    gap_set,
    weierstrass_weight,
)
from .kernels import BACKEND
from .sweeps import (
    TOWSE_HEADER,
    format_towse_row,
    towse_sweep,
    verify_grid,
    verify_spec,
    write_towse_csv,
)

__all__ = ["run", "main", "build_parser"]

TOWSE_HELP = """\
CSV columns (header row is exactly m,r,g,BW,g3_minus_g,ratio,limit,abs_error):
  m, r, g, BW, g3_minus_g  integers
  ratio                    BW/(g^3-g) as a decimal with 12 significant digits
  limit                    (m+1)/(3(m-1)^2) as an exact fraction num/den
  abs_error                |ratio - limit| as a decimal with 12 places
Exact ratios are printed by --format kv.
"""


class UsageError(Exception):
    pass


class Output:
    """Rendered result of one command: table lines, key-value pairs, CSV rows."""

    def __init__(self, lines=(), kv=None, header=None, rows=(), status=0):
        self.lines = list(lines)
        self.kv = dict(kv or {})
        self.header = header
        self.rows = list(rows)
        self.status = status


def _spaced(values):
    return " ".join(str(v) for v in values)


def _place_name(spec, u):
    if u == 0:
        return "generic"
    if u == spec.infinity:
        return "inf"
    return str(u)


def parse_place(spec, token):
    """Map a CLI place (``1..r``, ``inf``, ``generic``) to a branch index."""
    token = token.strip().lower()
    if token == "inf":
        return spec.infinity
    if token == "generic":
        return 0
    try:
        u = int(token)
    except ValueError:
        raise UsageError(f"invalid place {token!r}: expected 1..{spec.r}, 'inf' or 'generic'") from None
    if not 1 <= u <= spec.r:
        raise UsageError(f"place {u} out of range 1..{spec.r}")
    return u


def _load(args):
    if args.equation is not None:
        return parse_curve(args.equation)
    if args.spec is not None:
        try:
            return load_spec(args.spec)
        except OSError as exc:
            raise UsageError(f"cannot read spec file {args.spec}: {exc.strerror or exc}") from None
    raise UsageError("one of --spec or --equation is required")


def cmd_genus(spec, args):
    header = ("u", "place", "d", "e", "totally_ramified")
    rows = [(b.u, _place_name(spec, b.u), b.d, b.e, int(b.totally_ramified)) for b in spec.places]
    kv = {"m": spec.m, "char": spec.p, "r": spec.r, "genus": spec.genus}
    return Output([f"g={spec.genus}"], kv, header, rows)


def cmd_gaps(spec, args):
    u = parse_place(spec, args.place)
    g = spec.genus
    b = spec.places[u]
    name = _place_name(spec, u)
    if u == 0:
        cert = certified_generic_gaps(spec)
        line = f"g={g}; certified generic gaps: {_spaced(cert)}"
        kv = {"place": name, "genus": g, "certified_gaps": _spaced(cert)}
        return Output([line], kv, ("place", "certified_gap"), [(name, s) for s in cert])
    if not b.totally_ramified:
        top = 2 * g + spec.m
        jumps = [dimension_jump(spec, u, s) for s in range(1, top + 1)]
        line = f"g={g}; place {name} (d={b.d}, e={b.e}) dimension jumps s=1..{top}: {_spaced(jumps)}"
        kv = {"place": name, "genus": g, "d": b.d, "e": b.e, "jumps": _spaced(jumps)}
        rows = [(name, s, j) for s, j in enumerate(jumps, start=1)]
        return Output([line], kv, ("place", "s", "jump"), rows)
    gs = gap_set(spec, u)
    line = f"g={g}; gaps: {_spaced(gs.gaps)}"
    kv = {"place": name, "genus": g, "gaps": _spaced(gs.gaps), "weight": gs.weight}
    return Output([line], kv, ("place", "gap"), [(name, s) for s in gs.gaps])


def cmd_weight(spec, args):
    u = parse_place(spec, args.place)
    w = weierstrass_weight(spec, u)
    name = _place_name(spec, u)
    return Output([f"W(P)={w}"], {"place": name, "genus": spec.genus, "weight": w},
                  ("place", "weight"), [(name, w)])


def cmd_classify(spec, args):
    rep = hyperelliptic_classify(spec)
    places = [_place_name(spec, u) for u in rep.branch_places]
    lines = [
        f"g={rep.genus}; hyperelliptic",
        f"branch places: {_spaced(places)}",
        f"branch gaps: {_spaced(rep.branch_gaps)}",
        f"generic certified gaps: {_spaced(rep.generic_certified)}",
        f"classical: {'yes' if rep.classical else 'no'}",
        "Weierstrass points: exactly the branch places",
    ]
    kv = {
        "genus": rep.genus,
        "branch_places": _spaced(places),
        "branch_gaps": _spaced(rep.branch_gaps),
        "generic_certified": _spaced(rep.generic_certified),
        "classical": str(rep.classical).lower(),
    }
    rows = [(p, _spaced(rep.branch_gaps)) for p in places]
    return Output(lines, kv, ("place", "gaps"), rows)


def cmd_criteria(spec, args):
    rep = ugly_conditions(spec)
    yn = {True: "true", False: "false"}
    gamma = _spaced(sorted(rep.gamma))
    concl = _spaced(_place_name(spec, u) for u in sorted(rep.conclusion))
    lines = [
        f"g={spec.genus}; k={rep.k}; gamma={{{gamma}}}",
        f"(i)   r >= m+3: {yn[rep.ugly_i]}",
        f"(ii)  equal multiplicities: {yn[rep.ugly_ii]} (literal reading: {yn[rep.ugly_ii_literal]})",
        f"(iii) repeated multiplicities: {yn[rep.ugly_iii]}",
        f"(iv)  all units mod m: {yn[rep.ugly_iv]}",
    ]
    for u, v in sorted(rep.m_plus_1_gap.items()):
        lines.append(f"m+1 gap at {_place_name(spec, u)}: {yn[v]}")
    lines.append(f"certified Weierstrass: {concl or 'none'}")
    lines.extend(f"note: {n}" for n in rep.notes)
    kv = {
        "genus": spec.genus,
        "k": rep.k,
        "gamma": gamma,
        "ugly_i": yn[rep.ugly_i],
        "ugly_ii": yn[rep.ugly_ii],
        "ugly_ii_literal": yn[rep.ugly_ii_literal],
        "ugly_iii": yn[rep.ugly_iii],
        "ugly_iv": yn[rep.ugly_iv],
    }
    for u, v in sorted(rep.m_plus_1_gap.items()):
        kv[f"m_plus_1_gap.{_place_name(spec, u)}"] = yn[v]
    kv["conclusion"] = concl
    rows = [(_place_name(spec, u), int(v), int(u in rep.conclusion))
            for u, v in sorted(rep.m_plus_1_gap.items())]
    return Output(lines, kv, ("place", "m_plus_1_gap", "certified"), rows)


def cmd_maximality(spec, args):
    pair = None
    if args.pair:
        pair = tuple(parse_place(spec, t) for t in args.pair)
    verdict = maximality_obstruction(spec, args.q, rational=not args.not_rational, pair=pair)
    kv = {"m": spec.m, "q": args.q, "verdict": verdict.value}
    return Output([f"verdict: {verdict.value}"], kv, ("m", "q", "verdict"),
                  [(spec.m, args.q, verdict.value)])


def cmd_towse(args, err):
    if args.m == 2:
        print("note: m=2 is a special case; the limit formula gives 1", file=err)
    rows = towse_sweep(args.m, args.r_min, args.r_max, args.step)
    kv = {}
    for row in rows:
        r = row["r"]
        for key in ("g", "BW", "g3_minus_g", "ratio", "limit"):
            kv[f"{r}.{key}"] = row[key]
        kv[f"{r}.abs_error"] = abs(row["ratio"] - row["limit"])
    out = Output([], kv, TOWSE_HEADER, [format_towse_row(row) for row in rows])
    out.towse_rows = rows
    return out


def cmd_verify(spec, args):
    if args.oracle:
        count, problems = verify_grid(args.m_max, args.r_max)
        scope = f"grid m<={args.m_max}, r<={args.r_max}: {count} specs"
    else:
        count, problems = 1, verify_spec(spec)
        scope = f"{spec}"
    lines = [f"{scope}; {len(problems)} mismatches"] + problems
    kv = {"specs": count, "mismatches": len(problems), "backend": BACKEND}
    return Output(lines, kv, ("mismatch",), [(p,) for p in problems],
                  status=1 if problems else 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kummer",
        description="Weierstrass gaps and weights for Kummer extensions y^m = f(x).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND})")

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--spec", metavar="FILE", help="JSON spec file (m, char, multiplicities | equation)")
    src.add_argument("--equation", metavar="EQ", help='curve equation, e.g. "y^5 = x^5 - 1"')
    common.add_argument("--format", choices=("table", "kv"), default="table",
                        help="table (default) or key=value lines")
    common.add_argument("--csv", metavar="PATH", help="also write machine-readable rows to PATH")

    place_help = "1..r for a root, 'inf' for infinity, 'generic' for the generic places"
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    sub.add_parser("genus", parents=[common], help="genus and ramification data")
    p = sub.add_parser("gaps", parents=[common], help="gap set at a place")
    p.add_argument("--place", required=True, help=place_help)
    p = sub.add_parser("weight", parents=[common], help="Weierstrass weight at a totally ramified place")
    p.add_argument("--place", required=True, help=place_help)
    sub.add_parser("classify", parents=[common], help="hyperelliptic classification (m = 2)")
    sub.add_parser("criteria", parents=[common], help="sufficient conditions for Weierstrass points")
    p = sub.add_parser("maximality", parents=[common], help="divisibility obstruction to maximality")
    p.add_argument("--q", type=int, required=True, help="prime power q (curve over F_{q^2})")
    p.add_argument("--pair", nargs=2, metavar="PLACE", help="the two rational totally ramified roots")
    p.add_argument("--not-rational", action="store_true",
                   help="the two places are not known to be rational (no obstruction derivable)")
    p = sub.add_parser("towse", parents=[common], help="BW/(g^3-g) sweep over r",
                       epilog=TOWSE_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r-min", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p = sub.add_parser("verify", parents=[common], help="cross-check gaps against the differential oracle")
    p.add_argument("--oracle", action="store_true", help="run the built-in grid instead of one spec")
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--r-max", type=int, default=6)
    return parser


def _write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _emit(out, args, stdout):
    if args.format == "kv":
        for key, value in out.kv.items():
            print(f"{key}={value}", file=stdout)
    elif args.command == "towse" and not args.csv:
        write_towse_csv(out.towse_rows, stdout)
    else:
        for line in out.lines:
            print(line, file=stdout)


def run(argv=None, stdout=None, stderr=None):
    """Execute one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "towse":
            out = cmd_towse(args, stderr)
        elif args.command == "verify" and args.oracle:
            out = cmd_verify(None, args)
        else:
            spec = _load(args)
            handler = {
                "genus": cmd_genus,
                "gaps": cmd_gaps,
                "weight": cmd_weight,
                "classify": cmd_classify,
                "criteria": cmd_criteria,
                "maximality": cmd_maximality,
                "verify": cmd_verify,
            }[args.command]
            out = handler(spec, args)
        if args.csv:
            try:
                _write_csv(args.csv, out.header, out.rows)
            except OSError as exc:
                raise UsageError(f"cannot write {args.csv}: {exc.strerror or exc}") from None
        _emit(out, args, stdout)
        return out.status
    except UsageError as exc:
        print(f"kummer: error: {exc}", file=stderr)
        return 2
    except (KummerError, ValueError) as exc:
        print(f"kummer: error: {exc}", file=stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
