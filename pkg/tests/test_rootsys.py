from fractions import Fraction

import pytest

from flaghilbert.errors import InvalidRank, NegativeCoefficient, RankMismatch
from flaghilbert.rootsys import (
    DominantWeight,
    SimpleType,
    build_root_system,
    pairing,
    rho_pairing,
)


def all_types(max_rank=8):
    for fam, ranks in [("A", range(1, max_rank + 1)), ("B", range(2, max_rank + 1)),
                       ("C", range(2, max_rank + 1)), ("D", range(3, max_rank + 1)),
                       ("E", (6, 7, 8)), ("F", (4,)), ("G", (2,))]:
        for n in ranks:
            if n <= max_rank:
                yield SimpleType(fam, n)


CLASSIFICATION = {
    "A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
    "D": lambda n: n * (n - 1), "E": {6: 36, 7: 63, 8: 120}.get,
    "F": lambda n: 24, "G": lambda n: 6,
}

HIGHEST_ROOT = {
    "A4": (1, 1, 1, 1), "B4": (1, 2, 2, 2), "C4": (2, 2, 2, 1), "D5": (1, 2, 2, 1, 1),
    "E6": (1, 2, 2, 3, 2, 1), "E7": (2, 2, 3, 4, 3, 2, 1), "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 3, 4, 2), "G2": (3, 2),
}


@pytest.mark.parametrize("t", list(all_types()), ids=str)
def test_positive_root_counts(t):
    rs = build_root_system(t)
    assert len(rs.positive_roots) == CLASSIFICATION[t.family](t.rank)
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)
    assert all(min(r) >= 0 and any(r) for r in rs.positive_roots)


@pytest.mark.parametrize("name,root", HIGHEST_ROOT.items())
def test_highest_root(name, root):
    assert build_root_system(SimpleType.parse(name)).highest_root == root


@pytest.mark.parametrize("t", list(all_types()), ids=str)
def test_closed_under_simple_reflections(t):
    rs = build_root_system(t)
    roots = set(rs.positive_roots)
    for beta in rs.positive_roots:
        for i in range(rs.rank):
            if beta == rs.simple_root(i + 1):
                continue
            k = sum(beta[j] * rs.cartan[i][j] for j in range(rs.rank))
            image = list(beta)
            image[i] -= k
            assert tuple(image) in roots


def _leading_minors_positive(m):
    n = len(m)
    for size in range(1, n + 1):
        a = [list(row[:size]) for row in m[:size]]
        det = Fraction(1)
        for col in range(size):
            piv = next(r for r in range(col, size) if a[r][col] != 0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det *= a[col][col]
            for r in range(col + 1, size):
                f = a[r][col] / a[col][col]
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
        if det <= 0:
            return False
    return True


@pytest.mark.parametrize("t", list(all_types()), ids=str)
def test_form_symmetric_positive_definite(t):
    rs = build_root_system(t)
    n = rs.rank
    assert all(rs.form[i][j] == rs.form[j][i] for i in range(n) for j in range(n))
    assert _leading_minors_positive(rs.form)
    assert all(rs.inner(a, a) > 0 for a in rs.positive_roots)
    assert max(rs.inner(a, a) for a in rs.positive_roots) == 2
    if t.family in "ADE":
        assert all(rs.form[i][j] == rs.cartan[i][j] for i in range(n) for j in range(n))


def test_examples():
    a2 = build_root_system(SimpleType("A", 2))
    assert a2.positive_roots == ((1, 0), (0, 1), (1, 1))
    assert len(build_root_system(SimpleType("G", 2)).positive_roots) == 6

    a3 = build_root_system(SimpleType("A", 3))
    # interval roots [k, l] of {1, 2, 3} touching 1 or 3
    intervals = [(k, l) for k in range(1, 4) for l in range(k, 4) if k == 1 or l == 3]
    assert len(a3.positive_roots) == 6
    assert sum(1 for r in a3.positive_roots if r[0] or r[2]) == len(intervals) == 5


def test_invalid_ranks():
    for fam, n in [("E", 5), ("B", 1), ("D", 2), ("F", 3), ("G", 3), ("A", 0), ("H", 3)]:
        with pytest.raises(InvalidRank):
            SimpleType(fam, n)


def test_pairings_a2():
    rs = build_root_system(SimpleType("A", 2))
    w1 = DominantWeight.fundamental(2, 1)
    assert [pairing(rs, w1, a) for a in rs.positive_roots] == [1, 0, 1]
    assert [rho_pairing(rs, a) for a in rs.positive_roots] == [1, 1, 2]
    a3 = build_root_system(SimpleType("A", 3))
    assert rho_pairing(a3, (1, 1, 1)) == 3


def test_rank_mismatch():
    rs = build_root_system(SimpleType("A", 2))
    with pytest.raises(RankMismatch):
        pairing(rs, DominantWeight((1, 0, 0)), (1, 0))
    with pytest.raises(NegativeCoefficient):
        DominantWeight((1, -1))


@pytest.mark.parametrize("t", list(all_types(6)), ids=str)
def test_rho_is_sum_of_fundamental_weights(t):
    rs = build_root_system(t)
    rho = DominantWeight.rho(t.rank)
    for a in rs.positive_roots:
        rp = rho_pairing(rs, a)
        assert rp > 0
        assert pairing(rs, rho, a) == rp


def test_parse_type():
    assert SimpleType.parse("e8") == SimpleType("E", 8)
    assert str(SimpleType.parse(" B3 ")) == "B3"
