"""Closed forms for SL(n+1): the adjoint variety and the fundamental weights."""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError
from .exact import binomial, factorial, falling_factorial
from .series import SeriesNumerator, recover_polynomial_values

# Numerators of the adjoint-variety Hilbert series exactly as printed in the
# source table (computed there with d = 2n-2). Shown for comparison only.
PRINTED_ADJOINT_NUMERATORS: dict[int, tuple[int, ...]] = {
    3: (1, 10, 19, 20, 20),
    4: (1, 17, 53, 69, 70, 70, 70),
    5: (1, 26, 126, 226, 251, 252, 252, 252, 252),
}


def adjoint_dim_closed_form(n: int, k: int) -> int:
    """dim L(k (w_1 + w_n)) for SL(n+1): ((n+k-1)_{n-1})^2 (n+2k) / ((n-1)! n!)."""
    if n < 1 or k < 0:
        raise DomainError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    num = falling_factorial(n + k - 1, n - 1) ** 2 * (n + 2 * k)
    den = factorial(n - 1) * factorial(n)
    q, r = divmod(num, den)
    assert r == 0, (n, k)
    return q


def lattice_path_count(n: int, steps: int) -> int:
    """Paths of exactly `steps` moves from (0,0) that first reach (n,n) at the last move.

    Moves: (1,0), (0,1), (1,1) and the idle move (0,0).
    """
    if n < 1 or steps < n:
        raise DomainError(f"need n >= 1 and steps >= n, got n={n}, steps={steps}")
    moves = ((1, 0), (0, 1), (1, 1), (0, 0))
    cur = {(0, 0): 1}
    for _ in range(steps):
        nxt: dict[tuple[int, int], int] = {}
        for (x, y), cnt in cur.items():
            if (x, y) == (n, n):
                continue  # already arrived; later visits are not first arrivals
            for dx, dy in moves:
                u, v = x + dx, y + dy
                if u <= n and v <= n:
                    nxt[u, v] = nxt.get((u, v), 0) + cnt
        cur = nxt
    return cur.get((n, n), 0)


def fundamental_flag_dim(n: int, i: int) -> int:
    """dim SL(n+1)/P_{w_i} = (n-i+1) i."""
    if not 1 <= i <= n:
        raise DomainError(f"need 1 <= i <= n, got n={n}, i={i}")
    return (n - i + 1) * i


@lru_cache(maxsize=None)
def _rascal_rows(rows: int) -> tuple[tuple[int, ...], ...]:
    table = [(1,), (1, 1)]
    for r in range(2, rows + 1):
        north, prev = table[r - 2], table[r - 1]
        row = [1]
        for c in range(1, r):
            q, rem = divmod(prev[c - 1] * prev[c] + 1, north[c - 1])
            assert rem == 0, f"inexact division at rascal({r}, {c})"
            row.append(q)
        row.append(1)
        table.append(tuple(row))
    return tuple(table[: rows + 1])


def rascal(row: int, col: int) -> int:
    """Rascal-triangle entry built with (East * West + 1) / North."""
    if row < 0 or not 0 <= col <= row:
        raise DomainError(f"need 0 <= col <= row, got row={row}, col={col}")
    value = _rascal_rows(max(row, 1))[row][col]
    assert value == col * (row - col) + 1
    return value


def a1_fundamental(n: int, i: int) -> int:
    """a_1 for SL(n+1), lambda = w_i: C(n+1, i) - (i (n-i+1) + 1)."""
    return binomial(n + 1, i) - (fundamental_flag_dim(n, i) + 1)


def printed_adjoint_first_mismatch(n: int, kmax: int | None = None) -> tuple[int, int, int] | None:
    """First k where the printed numerator's series disagrees with D_k.

    Returns (k, series value, D_k), or None when they agree up to kmax.
    """
    printed = PRINTED_ADJOINT_NUMERATORS[n]
    num = SeriesNumerator(printed, len(printed))
    if kmax is None:
        kmax = 2 * n + 2
    for k in range(kmax + 1):
        value = recover_polynomial_values(num, k)
        actual = adjoint_dim_closed_form(n, k)
        if value != actual:
            return k, value, actual
    return None
