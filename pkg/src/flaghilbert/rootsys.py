"""Root systems of the simple Lie algebras over exact rationals.

Simple roots are numbered as in Bourbaki. The invariant form is normalized
so that long roots have squared length 2; any other normalization rescales
every pairing by the same positive constant, and that constant cancels in
all the ratios computed downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidRank, NegativeCoefficient, ParseError, RankMismatch

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

# Classification count of positive roots, used as a self-check.
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in FAMILIES or len(fam) != 1:
            raise InvalidRank(f"unknown family {fam!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise InvalidRank(f"{fam}{n} is not a simple type")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if m is None:
            raise ParseError("expected a type such as A3 or E8", text, 0)
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DominantWeight:
    """lambda = sum_i coeffs[i] * omega_{i+1} in the fundamental-weight basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        for i, c in enumerate(cs):
            if c < 0:
                raise NegativeCoefficient(f"coefficient of w{i + 1} is {c} < 0")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, rank: int) -> DominantWeight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> DominantWeight:
        """omega_i, 1-based."""
        if not 1 <= i <= rank:
            raise RankMismatch(f"w{i} does not exist in rank {rank}")
        return cls(tuple(int(j == i - 1) for j in range(rank)))

    @classmethod
    def rho(cls, rank: int) -> DominantWeight:
        return cls((1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: DominantWeight) -> DominantWeight:
        if self.rank != other.rank:
            raise RankMismatch("cannot add weights of different rank")
        return DominantWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, k: int) -> DominantWeight:
        return DominantWeight(tuple(k * c for c in self.coeffs))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{'' if c == 1 else c}w{i + 1}")
        return "+".join(parts) or "0"


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    positive_roots: tuple[Root, ...]
    form: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """(a, b) for vectors given in the simple-root basis."""
        n = self.rank
        return sum(
            (a[i] * b[j] * self.form[i][j] for i in range(n) for j in range(n) if a[i] and b[j]),
            Fraction(0),
        )

    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i - 1) for j in range(self.rank))

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]


def _diagram(family: str, n: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of the simple roots and the edges of the Dynkin diagram."""
    chain = [(i, i + 1) for i in range(n - 1)]
    two, one = Fraction(2), Fraction(1)
    if family == "A":
        return [two] * n, chain
    if family == "B":
        return [two] * (n - 1) + [one], chain
    if family == "C":
        return [one] * (n - 1) + [two], chain
    if family == "D":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
        return [two] * n, [(i, j) for i, j in edges if i < n and j < n]
    if family == "F":
        return [two, two, one, one], chain
    if family == "G":
        return [Fraction(2, 3), two], chain
    raise InvalidRank(family)


def _form(family: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    lengths, edges = _diagram(family, n)
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = lengths[i]
    for i, j in edges:
        # adjacent simple roots: (a_i, a_j) = -|long|^2 / 2
        B[i][j] = B[j][i] = -max(lengths[i], lengths[j]) / 2
    return tuple(tuple(row) for row in B)


def _enumerate_positive_roots(form, cartan) -> list[Root]:
    n = len(form)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    roots: set[Root] = set(simple)
    level = list(simple)
    while level:
        nxt: set[Root] = set()
        for beta in level:
            for i in range(n):
                if beta == simple[i]:
                    continue  # 2 * alpha_i is never a root
                # alpha_i-string through beta: beta - p a_i, ..., beta + q a_i
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        roots |= nxt
        level = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), tuple(-m for m in r)))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Positive roots, invariant form and Cartan matrix of a simple type.

    Roots are generated height by height from the simple roots with the
    root-string criterion, and returned sorted by height and then by
    descending coordinates (so alpha_1, alpha_2, ... come first).
    """
    n = t.rank
    form = _form(t.family, n)
    # cartan[i][j] = <alpha_i^vee, alpha_j> = 2 (a_i, a_j) / (a_i, a_i)
    cartan = tuple(
        tuple(int(2 * form[i][j] / form[i][i]) for j in range(n)) for i in range(n)
    )
    roots = _enumerate_positive_roots(form, cartan)
    expected = _POSITIVE_ROOT_COUNT[t.family](n)
    if len(roots) != expected:
        raise AssertionError(f"{t}: enumerated {len(roots)} positive roots, expected {expected}")
    return RootSystem(t, tuple(roots), form, cartan)


def _check_rank(rs: RootSystem, vec: Sequence[int], what: str) -> None:
    if len(vec) != rs.rank:
        raise RankMismatch(f"{what} has length {len(vec)}, but {rs.type} has rank {rs.rank}")


def pairing(rs: RootSystem, weight: DominantWeight, alpha: Sequence[int]) -> Fraction:
    """(lambda, alpha), using (omega_i, alpha_j^vee) = delta_ij.

    That gives (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2.
    """
    _check_rank(rs, weight.coeffs, "weight")
    _check_rank(rs, alpha, "root")
    return sum(
        (c * m * rs.form[j][j] / 2 for j, (c, m) in enumerate(zip(weight.coeffs, alpha))),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _rho_in_root_basis(rs: RootSystem) -> tuple[Fraction, ...]:
    n = rs.rank
    return tuple(
        Fraction(sum(r[j] for r in rs.positive_roots), 2) for j in range(n)
    )


def rho_pairing(rs: RootSystem, alpha: Sequence[int]) -> Fraction:
    """(rho, alpha) with rho half the sum of the positive roots."""
    _check_rank(rs, alpha, "root")
    return rs.inner(_rho_in_root_basis(rs), alpha)
