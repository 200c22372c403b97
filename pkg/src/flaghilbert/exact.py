"""Exact scalars, dense univariate polynomials and combinatorial primitives.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and a ``Fraction`` is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError, NonIntegerProduct

Scalar = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(x: int, m: int) -> int:
    """x (x-1) ... (x-m+1); the empty product (m = 0) is 1."""
    if m < 0:
        raise DomainError(f"falling factorial needs m >= 0, got m={m}")
    return math.prod(range(x, x - m, -1))


def rising_factorial(x: int, m: int) -> int:
    """x (x+1) ... (x+m-1); the empty product (m = 0) is 1."""
    if m < 0:
        raise DomainError(f"rising factorial needs m >= 0, got m={m}")
    return math.prod(range(x, x + m))


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial needs n >= 0, got n={n}")
    return math.factorial(n)


def as_int(q: Scalar, what: str = "value") -> int:
    """Return ``q`` as an int, raising if it has a nontrivial denominator."""
    q = Fraction(q)
    if q.denominator != 1:
        raise NonIntegerProduct(f"{what} is not an integer: {q}")
    return q.numerator


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with exact rational coefficients, ``coeffs[i]`` of x**i.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> Polynomial:
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> Polynomial:
        return cls((c0, c1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Union[Polynomial, Scalar]) -> Polynomial:
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return Polynomial(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, t: Scalar) -> Fraction:
        return poly_eval(self, t)

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial((Fraction(0),) * k + self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if mag == 1 and i:
                body = ""
            elif mag.denominator != 1 and i:
                body = f"({mag})"
            else:
                body = str(mag)
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def poly_eval(p: Polynomial, t: Scalar) -> Fraction:
    # Horner
    acc = Fraction(0)
    t = Fraction(t)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc
