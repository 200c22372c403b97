import itertools
from collections import Counter
from fractions import Fraction

import pytest

from flaghilbert.analysis import analyze
from flaghilbert.dims import c_ratios, flag_dimension, weyl_dim
from flaghilbert.errors import DomainError
from flaghilbert.exact import binomial
from flaghilbert.rootsys import DominantWeight as W, SimpleType, build_root_system
from flaghilbert.typea import (
    PRINTED_ADJOINT_NUMERATORS,
    a1_fundamental,
    adjoint_dim_closed_form,
    fundamental_flag_dim,
    lattice_path_count,
    printed_adjoint_first_mismatch,
    rascal,
)


def adjoint(n):
    return W.fundamental(n, 1) + W.fundamental(n, n) if n > 1 else W((2,))


def brute_force_paths(n, steps):
    moves = ((1, 0), (0, 1), (1, 1), (0, 0))
    count = 0
    for seq in itertools.product(moves, repeat=steps):
        x = y = 0
        early = False
        for t, (dx, dy) in enumerate(seq):
            x, y = x + dx, y + dy
            if (x, y) == (n, n) and t < steps - 1:
                early = True
                break
        if not early and (x, y) == (n, n):
            count += 1
    return count


@pytest.mark.parametrize("n,k,expected", [(3, 0, 1), (4, 1, 24), (3, 5, 1911)])
def test_adjoint_closed_form_examples(n, k, expected):
    assert adjoint_dim_closed_form(n, k) == expected
    assert weyl_dim(build_root_system(SimpleType("A", n)), adjoint(n), k) == expected


def test_adjoint_dimension_is_n_plus_one_squared_minus_one():
    for n in range(1, 9):
        assert adjoint_dim_closed_form(n, 1) == (n + 1) ** 2 - 1


@pytest.mark.parametrize("n,steps,expected", [(1, 1, 1), (1, 2, 3), (3, 4, 15)])
def test_lattice_path_examples(n, steps, expected):
    assert lattice_path_count(n, steps) == expected


@pytest.mark.parametrize("n,steps", [(1, s) for s in range(1, 8)] + [(2, s) for s in range(2, 8)]
                         + [(3, s) for s in range(3, 8)])
def test_lattice_path_dp_matches_enumeration(n, steps):
    assert lattice_path_count(n, steps) == brute_force_paths(n, steps)


def test_lattice_path_domain():
    with pytest.raises(DomainError):
        lattice_path_count(3, 2)
    with pytest.raises(DomainError):
        adjoint_dim_closed_form(0, 1)


@pytest.mark.parametrize("n,i,expected", [(3, 2, 4), (5, 1, 5), (7, 4, 16)])
def test_fundamental_flag_dim(n, i, expected):
    assert fundamental_flag_dim(n, i) == expected
    rs = build_root_system(SimpleType("A", n))
    assert sum(1 for r in rs.positive_roots if r[i - 1]) == expected


def test_rascal():
    assert rascal(2, 1) == 2
    assert all(rascal(r, 0) == rascal(r, r) == 1 for r in range(10))
    assert rascal(4, 2) == 5
    assert [rascal(3, c) for c in range(4)] == [1, 3, 3, 1]
    with pytest.raises(DomainError):
        rascal(3, 4)


@pytest.mark.parametrize("n,i,expected", [(3, 2, 1), (5, 1, 0), (5, 3, 10)])
def test_a1_fundamental_examples(n, i, expected):
    assert a1_fundamental(n, i) == expected
    assert a1_fundamental(n, i) == binomial(n + 1, i) - rascal(n + 1, i)
    an = analyze(SimpleType("A", n), W.fundamental(n, i), verify=False)
    assert an.numerator.a[1] == expected


def test_a1_symmetry():
    for n in range(1, 31):
        for i in range(1, n + 1):
            assert a1_fundamental(n, i) == a1_fundamental(n, n + 1 - i)


def test_grassmannian_gr24_is_a_quadric():
    an = analyze(SimpleType("A", 3), W.fundamental(3, 2))
    assert an.numerator.trimmed() == (1, 1) and an.numerator.denom_exponent == 5
    assert an.ok


def test_adjoint_ratio_multiset():
    # {1, 1, 1/2, 1/2, ..., 1/(n-1), 1/(n-1), 2/n}
    for n in range(2, 9):
        rs = build_root_system(SimpleType("A", n))
        c = c_ratios(rs, adjoint(n))
        expected = Counter([Fraction(1, i) for i in range(1, n) for _ in range(2)] + [Fraction(2, n)])
        assert Counter(c.nonzero()) == expected
        assert flag_dimension(c) == 2 * n - 1


def test_printed_table_mismatches():
    assert printed_adjoint_first_mismatch(3) == (5, 1891, 1911)
    for n, printed in PRINTED_ADJOINT_NUMERATORS.items():
        k, _, _ = printed_adjoint_first_mismatch(n)
        # printed rows were built from D_0..D_{2n-2}, so they fail exactly at 2n-1
        assert len(printed) == 2 * n - 1
        assert k == 2 * n - 1
