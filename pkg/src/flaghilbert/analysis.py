"""One-shot computation of the Hilbert series of G/P_lambda with all cross-checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .dims import CRatios, HilbertPolynomial, c_ratios, hilbert_polynomial, weyl_dim
from .errors import NonIntegerProduct, PoleOrderMismatch, TailNonzero
from .rootsys import DominantWeight, RootSystem, SimpleType, build_root_system
from .series import (
    SeriesNumerator,
    a1_corollary_check,
    default_depth,
    degree_identity_check,
    log_concavity_check,
    numerator_by_recurrence,
    numerator_from_dims,
    oracle_diff_operators,
    oracle_truncated_division,
    recover_polynomial_values,
)


@dataclass
class Analysis:
    rs: RootSystem
    weight: DominantWeight
    c: CRatios
    hp: HilbertPolynomial
    dims: list[int]
    numerator: SeriesNumerator
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.hp.d

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def h_vector_nonnegative(self) -> bool:
        """Observation only; nonnegativity is not a theorem for general lambda."""
        return all(a >= 0 for a in self.numerator.a)


def analyze(
    rs: RootSystem | SimpleType | str,
    weight: DominantWeight,
    depth: int | None = None,
    corrupt_dim: int | None = None,
    verify: bool = True,
) -> Analysis:
    """Compute g(x) by the closed form and, if ``verify``, run every cross-check.

    ``corrupt_dim`` adds 1 to D_k for that k before anything else sees the
    list; it exists so the checks can be shown to fail.
    """
    if isinstance(rs, str):
        rs = SimpleType.parse(rs)
    if isinstance(rs, SimpleType):
        rs = build_root_system(rs)
    c = c_ratios(rs, weight)
    hp = hilbert_polynomial(c)
    d = hp.d
    dims = [weyl_dim(rs, weight, k) for k in range(d + 1)]
    if corrupt_dim is not None and 0 < corrupt_dim <= d:
        dims[corrupt_dim] += 1
    num = numerator_from_dims(dims, d)
    result = Analysis(rs, weight, c, hp, dims, num)
    if not verify:
        return result

    checks = result.checks
    checks["a0_is_one"] = num.a[0] == 1
    checks["theorem_vs_recurrence"] = numerator_by_recurrence(dims, d) == num

    if depth is None:
        depth = default_depth(d)
    try:
        checks["truncated_division"] = oracle_truncated_division(hp, depth) == num
    except (TailNonzero, PoleOrderMismatch, NonIntegerProduct) as exc:
        checks["truncated_division"] = False
        result.notes["truncated_division"] = str(exc)
    try:
        checks["diff_operators"] = oracle_diff_operators(c) == num
    except (TailNonzero, PoleOrderMismatch, NonIntegerProduct) as exc:
        checks["diff_operators"] = False
        result.notes["diff_operators"] = str(exc)

    later = [weyl_dim(rs, weight, n) for n in range(d + 1, 2 * d + 6)]
    all_dims = dims[: d + 1] + later
    checks["round_trip"] = all(
        recover_polynomial_values(num, i) == all_dims[i] for i in range(2 * d + 1)
    )
    true_dims = [weyl_dim(rs, weight, n) for n in range(d + 1)] + later
    checks["hilbertian"] = all(hp(n) == Fraction(true_dims[n]) for n in range(d + 6))
    if d >= 1:
        checks["a1_corollary"] = a1_corollary_check(num, dims[1], d)
    checks["degree_identity"] = degree_identity_check(num, hp)
    if not weight.is_zero():
        checks["log_concave"] = log_concavity_check(hp)
    return result


def corpus() -> list[tuple[SimpleType, DominantWeight, str]]:
    """Every fundamental weight of every simple type of rank <= 4, plus rho for rank <= 3."""
    types = []
    for fam, ranks in [("A", range(1, 5)), ("B", range(2, 5)), ("C", range(2, 5)),
                       ("D", range(3, 5)), ("F", [4]), ("G", [2])]:
        types.extend(SimpleType(fam, n) for n in ranks)
    out = []
    for t in types:
        for i in range(1, t.rank + 1):
            out.append((t, DominantWeight.fundamental(t.rank, i), f"w{i}"))
    for t in types:
        if t.rank <= 3:
            out.append((t, DominantWeight.rho(t.rank), "rho"))
    return out
