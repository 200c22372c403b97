"""Numerator of the Hilbert series HS(x) = g(x) / (1-x)^(d+1).

Three independent ways to get g(x) live here:

* :func:`numerator_from_dims` -- closed form
  ``a_i = sum_j (-1)^j C(d+1, j) D_{i-j}`` from the dimensions D_k = dim L(k lambda);
* :func:`numerator_by_recurrence` -- the triangular recurrence obtained by
  evaluating ``p(n) = sum_j a_j C(d+n-j, d)`` at n = 0..d;
* two oracles that never look at the D_k: truncated power-series division
  of ``sum HP(n) x^n`` by ``(1-x)^-(d+1)``, and the product of Euler
  operators ``(1 + c x d/dx)`` applied to ``1/(1-x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dims import CRatios, HilbertPolynomial
from .errors import BadD0, BadLength, DomainError, PoleOrderMismatch, TailNonzero
from .exact import Polynomial, as_int, binomial, factorial


@dataclass(frozen=True)
class SeriesNumerator:
    """Coefficients a_0..a_d of g(x); trailing zeros are kept so len(a) == d + 1."""

    a: tuple[int, ...]
    denom_exponent: int

    @property
    def d(self) -> int:
        return self.denom_exponent - 1

    @property
    def degree(self) -> int:
        """g(1), the degree of the projective embedding."""
        return sum(self.a)

    def trimmed(self) -> tuple[int, ...]:
        a = list(self.a)
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        return tuple(a)

    def polynomial(self) -> Polynomial:
        return Polynomial.from_coeffs(self.a)


@dataclass(frozen=True)
class RationalFunction:
    """numerator(x) / (1-x)^pole_order."""

    numerator: Polynomial
    pole_order: int = 0

    def __post_init__(self):
        if self.pole_order < 0:
            raise DomainError("pole order must be >= 0")

    def canonical(self) -> RationalFunction:
        """Cancel common factors of (1-x) between numerator and denominator."""
        num, m = self.numerator, self.pole_order
        while m > 0 and not num.is_zero() and num(1) == 0:
            num = _divide_by_one_minus_x(num)
            m -= 1
        return RationalFunction(num, m)

    def apply_euler(self, c: Fraction) -> RationalFunction:
        """Apply 1 + c * x d/dx.

        x d/dx [p / (1-x)^m] = [x p' (1-x) + m x p] / (1-x)^(m+1).
        """
        p, m = self.numerator, self.pole_order
        one_minus_x = Polynomial.linear(1, -1)
        xp_prime = p.derivative().shift()
        num = p * one_minus_x + (xp_prime * one_minus_x) * c + p.shift() * (c * m)
        return RationalFunction(num, m + 1)


def _divide_by_one_minus_x(p: Polynomial) -> Polynomial:
    # p(x) = (1-x) q(x); synthetic division at x = 1 of -p, i.e. p = -(x-1) q
    coeffs = list(p.coeffs)
    n = len(coeffs) - 1
    q = [Fraction(0)] * n
    carry = Fraction(0)
    for i in range(n, 0, -1):
        carry = coeffs[i] + carry
        q[i - 1] = carry
    # p = (x - 1) q  =>  p / (1 - x) = -q
    return Polynomial(tuple(-c for c in q))


def _check_dims(D: Sequence[int], d: int) -> None:
    if d < 0:
        raise DomainError(f"d must be >= 0, got {d}")
    if len(D) != d + 1:
        raise BadLength(f"need D_0..D_{d} ({d + 1} values), got {len(D)}")
    if D[0] != 1:
        raise BadD0(f"D_0 must be 1, got {D[0]}")


def numerator_from_dims(D: Sequence[int], d: int) -> SeriesNumerator:
    _check_dims(D, d)
    a = tuple(
        sum((-1) ** j * binomial(d + 1, j) * D[i - j] for j in range(i + 1))
        for i in range(d + 1)
    )
    return SeriesNumerator(a, d + 1)


def numerator_by_recurrence(D: Sequence[int], d: int) -> SeriesNumerator:
    """a_i = D_i - C(d+1, d) a_{i-1} - C(d+2, d) a_{i-2} - ... - C(d+i, d) a_0."""
    _check_dims(D, d)
    a: list[int] = []
    for i in range(d + 1):
        a.append(D[i] - sum(binomial(d + j, d) * a[i - j] for j in range(1, i + 1)))
    return SeriesNumerator(tuple(a), d + 1)


def recover_polynomial_values(num: SeriesNumerator, n: int) -> int:
    """p(n) = sum_j a_j C(d + n - j, d)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    d = num.d
    return sum(aj * binomial(d + n - j, d) for j, aj in enumerate(num.a) if d + n - j >= 0)


def default_depth(d: int) -> int:
    return 2 * d + 10


def oracle_truncated_division(hp: HilbertPolynomial, depth: int | None = None) -> SeriesNumerator:
    """Multiply sum_{n<=depth} HP(n) x^n by (1-x)^(d+1) and read off g(x).

    Every coefficient above degree d must vanish; otherwise d or HP is wrong.
    """
    d = hp.d
    if depth is None:
        depth = default_depth(d)
    if depth < 2 * d + 2:
        raise DomainError(f"depth must be >= 2d+2 = {2 * d + 2}, got {depth}")
    values = [as_int(hp(n), f"HP({n})") for n in range(depth + 1)]
    kernel = [(-1) ** j * binomial(d + 1, j) for j in range(d + 2)]
    product = [
        sum(kernel[j] * values[i - j] for j in range(min(i, d + 1) + 1))
        for i in range(depth + 1)
    ]
    tail = [(i, v) for i, v in enumerate(product) if i > d and v != 0]
    if tail:
        i, v = tail[0]
        raise TailNonzero(f"coefficient of x^{i} is {v}, expected 0 beyond degree {d}")
    return SeriesNumerator(tuple(product[: d + 1]), d + 1)


def diff_operator_series(c: CRatios) -> RationalFunction:
    """prod over alpha of (1 + c_lambda(alpha) x d/dx) applied to 1/(1-x), canonicalized."""
    rf = RationalFunction(Polynomial.constant(1), 1)
    for v in c.nonzero():
        rf = rf.apply_euler(v)
    return rf.canonical()


def oracle_diff_operators(c: CRatios) -> SeriesNumerator:
    rf = diff_operator_series(c)
    d = sum(1 for v in c.values if v)
    if rf.pole_order != d + 1:
        raise PoleOrderMismatch(f"pole order {rf.pole_order}, expected d+1 = {d + 1}")
    if rf.numerator.degree > d:
        raise PoleOrderMismatch(f"numerator degree {rf.numerator.degree} exceeds d = {d}")
    a = tuple(as_int(rf.numerator.coeff(i), f"a_{i}") for i in range(d + 1))
    return SeriesNumerator(a, d + 1)


def binomial_identity_check(d: int, l: int) -> bool:
    """-sum_{j=1}^{l} (-1)^(l-j) C(d+j, d) C(d+1, l-j) == (-1)^l C(d+1, l)."""
    if not 1 <= l <= d:
        raise DomainError(f"need 1 <= l <= d, got d={d}, l={l}")
    lhs = -sum((-1) ** (l - j) * binomial(d + j, d) * binomial(d + 1, l - j) for j in range(1, l + 1))
    return lhs == (-1) ** l * binomial(d + 1, l)


def log_concavity_check(hp: HilbertPolynomial | Polynomial) -> bool:
    """Strict log-concavity c_i^2 > c_{i-1} c_{i+1} of the coefficient sequence."""
    cs = hp.coeffs
    return all(cs[i] * cs[i] > cs[i - 1] * cs[i + 1] for i in range(1, len(cs) - 1))


def a1_corollary_check(num: SeriesNumerator, D1: int, d: int) -> bool:
    """a_1 == dim L(lambda) - (dim G/P_lambda + 1)."""
    if d < 1:
        raise DomainError("a_1 is only defined when d >= 1")
    return num.a[1] == D1 - (d + 1)


def degree_identity_check(num: SeriesNumerator, hp: HilbertPolynomial) -> bool:
    """sum a_i == d! * leading coefficient of HP."""
    return Fraction(num.degree) == factorial(hp.d) * hp.leading and num.degree > 0
