"""Text, JSON and LaTeX renderings of computed results.

JSON payloads are plain dicts with a fixed key order; rationals are written
as strings ``"p/q"`` so nothing passes through floating point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .analysis import Analysis
from .exact import Polynomial


def q(x: Fraction | int) -> str:
    return str(Fraction(x))


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def latex_poly(coeffs: Sequence[Fraction | int], var: str = "x") -> str:
    terms: list[str] = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if mag.denominator != 1:
            body = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        elif mag == 1 and i:
            body = ""
        else:
            body = str(mag)
        if i == 1:
            body += var
        elif i > 1:
            body += f"{var}^{{{i}}}"
        sign = "-" if c < 0 else "+"
        if terms:
            terms.append(f"{sign} {body}")
        else:
            terms.append(body if sign == "+" else f"-{body}")
    return " ".join(terms) or "0"


def series_payload(an: Analysis) -> dict[str, Any]:
    t = an.rs.type
    return {
        "family": t.family,
        "rank": t.rank,
        "weight": list(an.weight.coeffs),
        "d": an.d,
        "hp_coeffs": [q(c) for c in an.hp.coeffs],
        "numerator": list(an.numerator.a),
        "denom_exponent": an.numerator.denom_exponent,
        "degree": an.numerator.degree,
        "dims": list(an.dims),
        "checks": dict(an.checks),
    }


def series_text(an: Analysis) -> str:
    g = Polynomial.from_coeffs(an.numerator.trimmed())
    lines = [
        f"group:      {an.rs.type}",
        f"weight:     {an.weight}",
        f"d:          {an.d}",
        f"HP(x) =     {an.hp.poly}",
        f"HS(x) =     ({g}) / (1-x)^{an.numerator.denom_exponent}",
        f"numerator:  {' '.join(str(a) for a in an.numerator.a)}",
        f"degree:     {an.numerator.degree}",
        f"dims:       {' '.join(str(x) for x in an.dims)}",
    ]
    return "\n".join(lines) + "\n"


def series_latex(an: Analysis) -> str:
    g = latex_poly(an.numerator.trimmed())
    return (
        rf"HS_\lambda(x) = \frac{{{g}}}{{(1-x)^{{{an.numerator.denom_exponent}}}}}" + "\n"
    )


def checks_text(an: Analysis) -> str:
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in an.checks.items()]
    for name, note in an.notes.items():
        lines.append(f"      {name}: {note}")
    oracles = ("theorem_vs_recurrence", "truncated_division", "diff_operators")
    if an.ok:
        lines.append(f"PASS ({len(oracles)} oracles agree)")
    else:
        lines.append("FAIL")
    return "\n".join(lines) + "\n"


def checks_latex(an: Analysis) -> str:
    rows = []
    for name, ok in an.checks.items():
        escaped = name.replace("_", r"\_")
        rows.append(rf"\texttt{{{escaped}}} & {'PASS' if ok else 'FAIL'} \\")
    return "\n".join([r"\begin{tabular}{l|c}", *rows, r"\end{tabular}"]) + "\n"


def table_latex(rows: Iterable[tuple[str, str]], header: tuple[str, str]) -> str:
    out = [r"\begin{array}{l|c}", rf"{header[0]} & {header[1]}\\", r"\hline"]
    for label, body in rows:
        out.append(rf"{label} & {body}\\")
    out.append(r"\end{array}")
    return "\n".join(out) + "\n"
