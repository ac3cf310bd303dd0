"""Young diagrams: conjugation, Littlewood-Richardson counts, branching and dimensions."""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. Trailing zeros are stripped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def part(self, i: int) -> int:
        """0-based part access that returns 0 past the end."""
        return self[i] if i < len(self) else 0

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(b <= self[i] for i, b in enumerate(other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("[]()")
        if not text:
            return cls()
        return cls(int(x) for x in text.split(","))

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Partition":
        return cls([cols] * rows if cols else [])


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, optionally boxed."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest: int, cap: int, slots: int, acc: list[int]):
        if rest == 0:
            yield Partition(acc)
            return
        if slots == 0:
            return
        for k in range(min(rest, cap), 0, -1):
            if k * slots < rest:
                break
            acc.append(k)
            yield from rec(rest - k, k, slots - 1, acc)
            acc.pop()

    yield from rec(n, max_part, max_len, [])


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def _lr_count(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    # cells of lam/mu, rows top to bottom, each row right to left, so the fill
    # order is exactly the reverse reading word
    cells = []
    for r, length in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        for c in range(length - 1, start - 1, -1):
            cells.append((r, c))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    inner = list(mu) + [0] * (len(lam) - len(mu))

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = len(nu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = filling[(r - 1, c)] + 1
        # in the LR filling, an entry in row r is at most r+1
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(k + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape lam/mu and weight nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not lam.contains(mu) or lam.size() != mu.size() + nu.size():
        return 0
    if len(nu) > len(lam):
        return 0
    return _lr_count(lam, mu, nu)


def even_row_partitions(n: int) -> Iterator[Partition]:
    if n % 2:
        return
    for half in partitions_of(n // 2):
        yield Partition(2 * x for x in half)


def littlewood_so_multiplicity(mu: Sequence[int], nu: Sequence[int]) -> int:
    """Sum of c^mu_{nu, xi} over xi with all rows of even length."""
    mu, nu = Partition(mu), Partition(nu)
    diff = mu.size() - nu.size()
    if diff < 0 or not mu.contains(nu):
        return 0
    return sum(lr_coefficient(mu, nu, xi) for xi in even_row_partitions(diff))


def schur_dim(lam: Sequence[int], n: int) -> int:
    """dim S_lam(C^n) by the hook-content formula."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def semistandard_tableaux(shape: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All SSYT of the given shape with entries in 1..n, rows as tuples."""
    shape = Partition(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(grid[(r, c)] for c in range(length)) for r, length in enumerate(shape))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = grid[(r, c - 1)]
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            grid[(r, c)] = v
            yield from rec(k + 1)
        grid.pop((r, c), None)

    yield from rec(0)


def weyl_dim_so(lam: Sequence[int], m: int) -> int:
    """Weyl dimension of the SO(m) irreducible with highest weight lam.

    For even m the last entry may be negative.
    """
    ell = m // 2
    lam = list(lam) + [0] * (ell - len(lam))
    if len(lam) > ell:
        raise ValueError(f"highest weight {lam} has more than {ell} entries for SO({m})")
    if m % 2:
        rho = [Fraction(2 * (ell - i) - 1, 2) for i in range(ell)]
    else:
        rho = [Fraction(ell - i - 1) for i in range(ell)]
    shifted = [Fraction(a) + r for a, r in zip(lam, rho)]
    num = Fraction(1)
    den = Fraction(1)
    for i in range(ell):
        for j in range(i + 1, ell):
            num *= shifted[i] ** 2 - shifted[j] ** 2
            den *= rho[i] ** 2 - rho[j] ** 2
        if m % 2:
            num *= shifted[i]
            den *= rho[i]
    value = num / den
    assert value.denominator == 1
    return int(value)


def so_harmonic_dim(lam: Sequence[int], m: int) -> int:
    """Dimension of the harmonic Schur functor S_[lam](C^m).

    This is the O(m)-irreducible attached to lam; for even m and
    length(lam) = m/2 it is the sum of the SO(m) pieces with last entry +-lam_l.
    """
    lam = Partition(lam)
    ell = m // 2
    if len(lam) > ell:
        raise ValueError(f"length of {list(lam)} exceeds floor({m}/2) = {ell}")
    d = weyl_dim_so(lam, m)
    if m % 2 == 0 and ell > 0 and len(lam) == ell:
        d *= 2
    return d


def cauchy_decompose(p: int, q: int, R: int) -> list[tuple[Partition, Partition]]:
    """Pairs (mu, mu*) with mu |- R fitting in a p x q box."""
    if R > p * q or R < 0:
        return []
    return [(mu, conjugate(mu)) for mu in partitions_of(R, max_part=q, max_len=p)]


def fundamental_to_partition(a: Sequence[int]) -> Partition:
    """lam_k = sum_{i >= k} a_i."""
    out = []
    acc = 0
    for x in reversed(a):
        acc += x
        out.append(acc)
    return Partition(reversed(out))


def partition_to_fundamental(lam: Sequence[int], n: int) -> list[int]:
    lam = list(lam) + [0] * (n - len(lam))
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    return [lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n)]


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    lam = Partition(lam)
    conj = conjugate(lam)
    return [[(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)] for i, row in enumerate(lam)]


def num_standard_tableaux(lam: Sequence[int]) -> int:
    from math import factorial
    hooks = hook_lengths(lam)
    return factorial(sum(lam)) // prod(h for row in hooks for h in row)
