from itertools import product as cartesian
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from artifact import partitions as pt
from artifact.partitions import Partition

small_partitions = st.integers(0, 7).flatmap(lambda n: st.sampled_from(list(pt.partitions_of(n))))


def brute_lr(lam, mu, nu):
    """Count LR fillings of lam/mu with content nu by trying every filling."""
    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r] if r < len(mu) else 0, lam[r])]
    labels = [i for i, k in enumerate(nu, start=1) for _ in range(k)]
    if len(cells) != len(labels):
        return 0
    count = 0
    for fill in cartesian(range(1, len(nu) + 1), repeat=len(cells)):
        if sorted(fill) != labels:
            continue
        T = dict(zip(cells, fill))
        ok = all(T[(r, c)] <= T.get((r, c + 1), 99) for r, c in cells)
        ok = ok and all(T[(r, c)] < T[(r + 1, c)] for r, c in cells if (r + 1, c) in T)
        if not ok:
            continue
        word = [T[(r, c)] for r in range(len(lam)) for c in reversed(range(lam[r])) if (r, c) in T]
        seen = [0] * (len(nu) + 2)
        good = True
        for x in word:
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                good = False
                break
        count += good
    return count


def test_partition_basics():
    lam = Partition.parse("3,1,0")
    assert lam == (3, 1) and str(lam) == "[3,1]"
    assert lam.conjugate() == (2, 1, 1)
    assert lam.size() == 4 and lam.length() == 2
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_enumeration_counts():
    assert [len(list(pt.partitions_of(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(pt.partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert all(len(x) <= 2 for x in pt.partitions_of(6, max_len=2))


@given(small_partitions)
def test_conjugate_involution(lam):
    assert pt.conjugate(pt.conjugate(lam)) == lam
    assert sum(pt.conjugate(lam)) == sum(lam)


@pytest.mark.parametrize("lam,mu,nu,expected", [
    ((2,), (1,), (1,), 1),
    ((1, 1), (1,), (1,), 1),
    ((3, 2, 1), (2, 1), (2, 1), 2),
    ((4, 2), (2, 1), (2, 1), 1),
    ((2, 2), (2,), (1, 1), 0),
])
def test_lr_known_values(lam, mu, nu, expected):
    assert pt.lr_coefficient(lam, mu, nu) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.data())
def test_lr_matches_brute_force(total, data):
    lam = data.draw(st.sampled_from(list(pt.partitions_of(total))))
    k = data.draw(st.integers(0, total))
    mu = data.draw(st.sampled_from(list(pt.partitions_of(k))))
    nu = data.draw(st.sampled_from(list(pt.partitions_of(total - k))))
    assert pt.lr_coefficient(lam, mu, nu) == brute_lr(lam, mu, nu)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.data())
def test_lr_symmetry_and_count(total, data):
    lam = data.draw(st.sampled_from(list(pt.partitions_of(total))))
    k = data.draw(st.integers(0, total))
    mu = data.draw(st.sampled_from(list(pt.partitions_of(k))))
    nu = data.draw(st.sampled_from(list(pt.partitions_of(total - k))))
    assert pt.lr_coefficient(lam, mu, nu) == pt.lr_coefficient(lam, nu, mu)
    c = lambda l: pt.conjugate(l)
    assert pt.lr_coefficient(lam, mu, nu) == pt.lr_coefficient(c(lam), c(mu), c(nu))


@given(small_partitions, st.integers(1, 4))
def test_schur_dim_counts_tableaux(lam, n):
    assert pt.schur_dim(lam, n) == sum(1 for _ in pt.semistandard_tableaux(lam, n))


@given(small_partitions)
def test_hook_length_formula(lam):
    # sum of f_lam^2 over lam |- k is k!
    k = sum(lam)
    assert sum(pt.num_standard_tableaux(x) ** 2 for x in pt.partitions_of(k)) == factorial(k)


def test_so_dimensions():
    assert pt.weyl_dim_so((1,), 5) == 5
    assert pt.weyl_dim_so((1, 1), 5) == 10
    assert pt.weyl_dim_so((1, 1), 4) == 3
    assert pt.so_harmonic_dim((1, 1), 4) == 6
    assert pt.so_harmonic_dim((1,), 2) == 2
    assert pt.so_harmonic_dim((2,), 3) == 5
    with pytest.raises(ValueError):
        pt.so_harmonic_dim((1, 1), 3)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_spherical_harmonic_dims(m):
    for ell in range(5):
        expected = comb(ell + m - 1, m - 1) - (comb(ell + m - 3, m - 1) if ell >= 2 else 0)
        assert pt.so_harmonic_dim((ell,) if ell else (), m) == expected


def test_even_rows_and_littlewood():
    assert list(pt.even_row_partitions(4)) == [(4,), (2, 2)]
    assert pt.littlewood_so_multiplicity((2,), ()) == 1
    assert pt.littlewood_so_multiplicity((1, 1), ()) == 0
    assert pt.littlewood_so_multiplicity((3, 1), (1, 1)) == 1


@pytest.mark.parametrize("p,q", [(1, 1), (2, 2), (2, 3), (3, 3), (4, 2)])
def test_cauchy(p, q):
    for R in range(p * q + 1):
        pairs = pt.cauchy_decompose(p, q, R)
        assert sum(pt.schur_dim(a, p) * pt.schur_dim(b, q) for a, b in pairs) == comb(p * q, R)


def test_fundamental_round_trip():
    assert pt.fundamental_to_partition([1, 0, 2]) == (3, 2, 2)
    assert pt.partition_to_fundamental((3, 2, 2), 3) == [1, 0, 2]
    assert pt.dominates((3, 1), (2, 2)) and not pt.dominates((2, 2), (3, 1))
