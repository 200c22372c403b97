"""Command-line front end.

    flaghilbert <command> <FAMILY><RANK> [--weight W] [--format text|json|latex]
                [--depth N] [--kmax K]

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import render
from .analysis import analyze
from .dims import c_ratios, hilbert_polynomial, weyl_dim, weyl_dims
from .errors import FlagHilbertError, ParseError, RankMismatch
from .exact import binomial
from .rootsys import DominantWeight, SimpleType, build_root_system
from .typea import (
    PRINTED_ADJOINT_NUMERATORS,
    a1_fundamental,
    fundamental_flag_dim,
    printed_adjoint_first_mismatch,
    rascal,
)

_TERM = re.compile(r"\s*(\d*)\s*(?:w|ω|omega)_?(\d+)\s*")


def parse_weight(s: str, rank: int) -> DominantWeight:
    """Parse ``"1,0,1"``, ``"w1+w3"``, ``"2w2"`` or ``"rho"`` into a weight of the given rank."""
    text = s.strip()
    if text.lower() in ("rho", "ρ"):
        return DominantWeight.rho(rank)
    if text == "0":
        return DominantWeight.zero(rank)
    if re.fullmatch(r"[\s\d,+-]+", text) and "," in text or re.fullmatch(r"\s*-?\d+\s*", text):
        parts = text.split(",")
        coeffs = []
        pos = 0
        for part in parts:
            if not re.fullmatch(r"\s*-?\d+\s*", part):
                raise ParseError("expected an integer", s, pos)
            coeffs.append(int(part))
            pos += len(part) + 1
        if len(coeffs) != rank:
            raise RankMismatch(f"weight {s!r} has {len(coeffs)} entries, rank is {rank}")
        return DominantWeight(tuple(coeffs))

    coeffs = [0] * rank
    pos = 0
    while True:
        m = _TERM.match(s, pos)
        if m is None:
            raise ParseError("expected a term like 2w3", s, pos)
        mult = int(m.group(1)) if m.group(1) else 1
        i = int(m.group(2))
        if not 1 <= i <= rank:
            raise RankMismatch(f"w{i} does not exist in rank {rank}")
        coeffs[i - 1] += mult
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "+":
            raise ParseError("expected '+'", s, pos)
        pos += 1
    return DominantWeight(tuple(coeffs))


def _type(text: str) -> SimpleType:
    try:
        return SimpleType.parse(text)
    except FlagHilbertError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")

    weighted = argparse.ArgumentParser(add_help=False, parents=[common])
    weighted.add_argument("group", type=_type, help="simple type, e.g. A3, E6")
    weighted.add_argument("--weight", "-w", required=True,
                          help='dominant weight: "1,0,1", "w1+w3", "2w2" or "rho"')

    parser = argparse.ArgumentParser(
        prog="flaghilbert",
        description="Hilbert polynomials and series of flag varieties G/P.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="positive roots and Cartan data")
    p.add_argument("group", type=_type)

    p = sub.add_parser("dim", parents=[weighted], help="dim L(lambda) (or D_0..D_K)")
    p.add_argument("--kmax", type=int, default=None)

    sub.add_parser("hp", parents=[weighted], help="Hilbert polynomial")
    sub.add_parser("hs", parents=[weighted], help="Hilbert series numerator")

    p = sub.add_parser("verify", parents=[weighted], help="run every cross-check")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--corrupt-dim", type=int, default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("table-adjoint", parents=[common],
                       help="adjoint varieties of SL(n+1), n = 2..N")
    p.add_argument("group", type=_type, nargs="?", default=SimpleType("A", 5))

    p = sub.add_parser("table-a1", parents=[common],
                       help="a_1 for fundamental weights of SL(n+1), n = 1..N")
    p.add_argument("group", type=_type, nargs="?", default=SimpleType("A", 8))
    return parser


def _require_type_a(t: SimpleType) -> int:
    if t.family != "A":
        raise FlagHilbertError(f"this table is for type A only, got {t}")
    return t.rank


def _roots(args) -> str:
    rs = build_root_system(args.group)
    if args.format == "json":
        return render.to_json({
            "family": rs.type.family,
            "rank": rs.rank,
            "count": len(rs.positive_roots),
            "positive_roots": [list(r) for r in rs.positive_roots],
            "cartan": [list(row) for row in rs.cartan],
            "form": [[render.q(x) for x in row] for row in rs.form],
        })
    if args.format == "latex":
        body = [r"\begin{tabular}{r|l}", r"height & root \\", r"\hline"]
        for r in rs.positive_roots:
            terms = " + ".join(
                (f"{m}" if m > 1 else "") + rf"\alpha_{{{j + 1}}}" for j, m in enumerate(r) if m
            )
            body.append(rf"{sum(r)} & ${terms}$ \\")
        body.append(r"\end{tabular}")
        return "\n".join(body) + "\n"
    lines = [f"{rs.type}: {len(rs.positive_roots)} positive roots"]
    lines += [f"  {sum(r):>2}  {' '.join(map(str, r))}" for r in rs.positive_roots]
    return "\n".join(lines) + "\n"


def _dim(args, weight) -> str:
    rs = build_root_system(args.group)
    if args.kmax is None:
        value = weyl_dim(rs, weight, 1)
        if args.format == "json":
            return render.to_json({"family": rs.type.family, "rank": rs.rank,
                                   "weight": list(weight.coeffs), "dim": value})
        if args.format == "latex":
            return rf"\dim L({_latex_weight(weight)}) = {value}" + "\n"
        return f"{value}\n"
    if args.kmax < 0:
        raise FlagHilbertError("--kmax must be >= 0")
    dims = weyl_dims(rs, weight, args.kmax)
    if args.format == "json":
        return render.to_json({"family": rs.type.family, "rank": rs.rank,
                               "weight": list(weight.coeffs), "dims": dims})
    if args.format == "latex":
        return render.table_latex(
            ((str(k), str(v)) for k, v in enumerate(dims)), ("k", r"\dim L(k\lambda)"))
    return "".join(f"{k}\t{v}\n" for k, v in enumerate(dims))


def _latex_weight(weight: DominantWeight) -> str:
    parts = [(f"{c}" if c > 1 else "") + rf"\omega_{{{i + 1}}}"
             for i, c in enumerate(weight.coeffs) if c]
    return " + ".join(parts) or "0"


def _hp(args, weight) -> str:
    rs = build_root_system(args.group)
    c = c_ratios(rs, weight)
    hp = hilbert_polynomial(c)
    if args.format == "json":
        return render.to_json({
            "family": rs.type.family,
            "rank": rs.rank,
            "weight": list(weight.coeffs),
            "d": hp.d,
            "hp_coeffs": [render.q(x) for x in hp.coeffs],
            "c_ratios": [render.q(x) for x in c.values],
        })
    if args.format == "latex":
        return rf"HP_\lambda(x) = {render.latex_poly(hp.coeffs)}" + "\n"
    return f"HP(x) = {hp.poly}\n"


def _hs(args, weight) -> str:
    an = analyze(args.group, weight, verify=False)
    if args.format == "json":
        return render.to_json(render.series_payload(an))
    if args.format == "latex":
        return render.series_latex(an)
    return render.series_text(an)


def _verify(args, weight) -> tuple[str, int]:
    an = analyze(args.group, weight, depth=args.depth, corrupt_dim=args.corrupt_dim)
    code = 0 if an.ok else 1
    if args.format == "json":
        return render.to_json(render.series_payload(an)), code
    if args.format == "latex":
        return render.checks_latex(an), code
    return render.checks_text(an), code


def _table_adjoint(args) -> tuple[str, int]:
    top = _require_type_a(args.group)
    rows = []
    for n in range(2, top + 1):
        weight = DominantWeight.fundamental(n, 1) + DominantWeight.fundamental(n, n)
        an = analyze(SimpleType("A", n), weight)
        row = {
            "n": n,
            "d": an.d,
            "numerator": list(an.numerator.a),
            "degree": an.numerator.degree,
            "verified": an.ok,
        }
        if n in PRINTED_ADJOINT_NUMERATORS:
            printed = PRINTED_ADJOINT_NUMERATORS[n]
            mismatch = printed_adjoint_first_mismatch(n)
            row["paper_printed"] = {
                "status": "paper-printed (unverified)",
                "numerator": list(printed),
                "denom_exponent": len(printed),
                "first_mismatch": None if mismatch is None else {
                    "k": mismatch[0], "series": mismatch[1], "dim": mismatch[2]},
            }
        rows.append(row)
    code = 0 if all(r["verified"] for r in rows) else 1

    if args.format == "json":
        return render.to_json({"table": "adjoint", "rows": rows}), code
    if args.format == "latex":
        body = []
        for r in rows:
            g = render.latex_poly(r["numerator"])
            body.append((f"n={r['n']}", rf"\frac{{{g}}}{{(1-x)^{{{r['d'] + 1}}}}}"))
            if "paper_printed" in r:
                pg = render.latex_poly(r["paper_printed"]["numerator"])
                body.append((r"\text{paper-printed (unverified)}", pg))
        return render.table_latex(body, ("", "g(x)")), code
    lines = []
    for r in rows:
        mark = "PASS" if r["verified"] else "FAIL"
        lines.append(f"n={r['n']}  d={r['d']}  degree={r['degree']}  [{mark}]  "
                     f"g(x) = {' '.join(map(str, r['numerator']))}")
        if "paper_printed" in r:
            pp = r["paper_printed"]
            lines.append(f"      paper-printed (unverified): {' '.join(map(str, pp['numerator']))}"
                         f"  over (1-x)^{pp['denom_exponent']}")
            mm = pp["first_mismatch"]
            if mm:
                lines.append(f"      printed series gives {mm['series']} at k={mm['k']}, "
                             f"but dim L(k lambda) = {mm['dim']}")
    return "\n".join(lines) + "\n", code


def _table_a1(args) -> tuple[str, int]:
    top = _require_type_a(args.group)
    rows = []
    for n in range(1, top + 1):
        for i in range(1, n + 1):
            row = {
                "n": n,
                "i": i,
                "flag_dim": fundamental_flag_dim(n, i),
                "binomial": binomial(n + 1, i),
                "rascal": rascal(n + 1, i),
                "a1": a1_fundamental(n, i),
            }
            if n <= 6:
                an = analyze(SimpleType("A", n), DominantWeight.fundamental(n, i), verify=False)
                row["a1_series"] = an.numerator.a[1]
            rows.append(row)
    ok = all(r["a1"] == r["binomial"] - r["rascal"] and r["a1"] >= 0
             and r.get("a1_series", r["a1"]) == r["a1"] for r in rows)
    code = 0 if ok else 1
    if args.format == "json":
        return render.to_json({"table": "a1", "rows": rows}), code
    if args.format == "latex":
        out = [r"\begin{tabular}{rr|rrrr}", r"$n$ & $i$ & $\dim G/P$ & $\binom{n+1}{i}$ & rascal & $a_1$ \\", r"\hline"]
        out += [rf"{r['n']} & {r['i']} & {r['flag_dim']} & {r['binomial']} & {r['rascal']} & {r['a1']} \\"
                for r in rows]
        out.append(r"\end{tabular}")
        return "\n".join(out) + "\n", code
    lines = [f"{'n':>3} {'i':>3} {'dimG/P':>7} {'C(n+1,i)':>9} {'rascal':>7} {'a1':>7} {'series':>7}"]
    for r in rows:
        lines.append(f"{r['n']:>3} {r['i']:>3} {r['flag_dim']:>7} {r['binomial']:>9} "
                     f"{r['rascal']:>7} {r['a1']:>7} {str(r.get('a1_series', '-')):>7}")
    return "\n".join(lines) + "\n", code


def run(args: argparse.Namespace) -> tuple[str, int]:
    """Execute a parsed request; returns (stdout text, exit code)."""
    cmd = args.command
    if cmd == "roots":
        return _roots(args), 0
    if cmd == "table-adjoint":
        return _table_adjoint(args)
    if cmd == "table-a1":
        return _table_a1(args)
    weight = parse_weight(args.weight, args.group.rank)
    if cmd == "dim":
        return _dim(args, weight), 0
    if cmd == "hp":
        return _hp(args, weight), 0
    if cmd == "hs":
        return _hs(args, weight), 0
    if cmd == "verify":
        return _verify(args, weight)
    raise AssertionError(cmd)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = run(args)
    except FlagHilbertError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
