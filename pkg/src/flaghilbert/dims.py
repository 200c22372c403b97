"""Weyl dimension formula and the Hilbert polynomial of G/P_lambda."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import Polynomial, as_int, poly_mul
from .rootsys import DominantWeight, Root, RootSystem, pairing, rho_pairing


@dataclass(frozen=True)
class CRatios:
    """c_lambda(alpha) = (lambda, alpha) / (rho, alpha), one per positive root."""

    values: tuple[Fraction, ...]
    roots: tuple[Root, ...] = ()

    def nonzero(self) -> tuple[Fraction, ...]:
        return tuple(c for c in self.values if c)


@dataclass(frozen=True)
class HilbertPolynomial:
    poly: Polynomial
    d: int

    def __call__(self, n) -> Fraction:
        return self.poly(n)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs

    @property
    def leading(self) -> Fraction:
        return self.poly.leading


def c_ratios(rs: RootSystem, weight: DominantWeight) -> CRatios:
    values = tuple(pairing(rs, weight, a) / rho_pairing(rs, a) for a in rs.positive_roots)
    return CRatios(values, rs.positive_roots)


def flag_dimension(c: CRatios) -> int:
    """dim G/P_lambda: the number of positive roots not orthogonal to lambda."""
    return sum(1 for v in c.values if v != 0)


def weyl_dim(rs: RootSystem, weight: DominantWeight, k: int = 1) -> int:
    """dim L(k lambda) = prod over positive roots of (k lambda + rho, alpha) / (rho, alpha)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    num = Fraction(1)
    for a in rs.positive_roots:
        rp = rho_pairing(rs, a)
        num *= (k * pairing(rs, weight, a) + rp) / rp
    return as_int(num, f"dim L({k}*({weight})) for {rs.type}")


def weyl_dims(rs: RootSystem, weight: DominantWeight, kmax: int) -> list[int]:
    """[dim L(k lambda) for k = 0..kmax]."""
    c = c_ratios(rs, weight).nonzero()
    out = []
    for k in range(kmax + 1):
        out.append(as_int(math.prod((1 + k * v for v in c), start=Fraction(1)), f"D_{k}"))
    return out


def hilbert_polynomial(c: CRatios) -> HilbertPolynomial:
    """HP(x) = prod over alpha of (1 + x c_lambda(alpha)); factors with c = 0 are 1."""
    hp = Polynomial.constant(1)
    for v in c.nonzero():
        hp = poly_mul(hp, Polynomial.linear(1, v))
    return HilbertPolynomial(hp, flag_dimension(c))
