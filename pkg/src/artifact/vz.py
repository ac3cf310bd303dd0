"""theta-stable parabolic bookkeeping for SO(p, q).

The compact torus acts on V+ through Witt planes with weights +-x_i (plus a
zero weight when p is odd) and on V- through +-y_k (plus zero when q is odd).
A Levi U(p_1, q_1) x ... x SO(p0, q0) is realized by a defining element that
puts a common positive value on p_j of the x's and q_j of the y's for each
unitary block, and zero on the rest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as cartesian


@dataclass(frozen=True)
class LeviDatum:
    u_blocks: tuple[tuple[int, int], ...]
    so_block: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "u_blocks", tuple((int(a), int(b)) for a, b in self.u_blocks))
        object.__setattr__(self, "so_block", (int(self.so_block[0]), int(self.so_block[1])))
        for a, b in self.u_blocks:
            if a < 0 or b < 0 or a + b == 0:
                raise ValueError(f"bad unitary block U({a},{b})")
        if min(self.so_block) < 0:
            raise ValueError(f"bad SO block {self.so_block}")

    @property
    def p(self) -> int:
        return self.so_block[0] + 2 * sum(a for a, _ in self.u_blocks)

    @property
    def q(self) -> int:
        return self.so_block[1] + 2 * sum(b for _, b in self.u_blocks)

    @property
    def m(self) -> int:
        return self.p + self.q

    @property
    def m0(self) -> int:
        return sum(self.so_block)

    def block_sizes(self) -> list[int]:
        return [a + b for a, b in self.u_blocks]

    def check(self, p: int, q: int):
        if (self.p, self.q) != (p, q):
            raise ValueError(f"Levi {self.label()} lives in SO({self.p},{self.q}), not SO({p},{q})")

    def normalized(self) -> "LeviDatum":
        """Split compact blocks U(a,0) and U(0,b) into copies of U(1,0) and U(0,1)."""
        blocks = []
        for a, b in self.u_blocks:
            if b == 0:
                blocks.extend([(1, 0)] * a)
            elif a == 0:
                blocks.extend([(0, 1)] * b)
            else:
                blocks.append((a, b))
        return LeviDatum(tuple(blocks), self.so_block)

    def canonical(self) -> "LeviDatum":
        norm = self.normalized()
        return LeviDatum(tuple(sorted(norm.u_blocks, reverse=True)), norm.so_block)

    def label(self) -> str:
        parts = [f"U({a},{b})" for a, b in self.u_blocks] + [f"SO({self.so_block[0]},{self.so_block[1]})"]
        return "x".join(parts)

    def to_json(self) -> dict:
        return {"u_blocks": [list(b) for b in self.u_blocks], "so_block": list(self.so_block)}

    @classmethod
    def from_json(cls, data) -> "LeviDatum":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(b) for b in data.get("u_blocks", [])), tuple(data["so_block"]))

    @classmethod
    def standard(cls, n: int, p: int, q: int) -> "LeviDatum":
        """U(1)^n x SO(p - 2n, q)."""
        if 2 * n > p:
            raise ValueError(f"n={n} too large for p={p}")
        return cls(((1, 0),) * n, (p - 2 * n, q))


def defining_values(levi: LeviDatum) -> tuple[list[int], list[int]]:
    """Values of the defining element on the x and y coordinates."""
    k = len(levi.u_blocks)
    xs: list[int] = []
    ys: list[int] = []
    for idx, (a, b) in enumerate(levi.u_blocks):
        val = k - idx
        xs.extend([val] * a)
        ys.extend([val] * b)
    p, q = levi.p, levi.q
    xs.extend([0] * (p // 2 - len(xs)))
    ys.extend([0] * (q // 2 - len(ys)))
    return xs, ys


def _side_weights(rank: int, odd: bool) -> list[tuple[int, int]]:
    # (coordinate, sign) with coordinate -1 for the zero weight
    out = [(i, s) for i in range(rank) for s in (1, -1)]
    if odd:
        out.append((-1, 0))
    return out


def noncompact_weights(p: int, q: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Torus weights of p = V+ (x) V- as (x-part, y-part) integer vectors."""
    rp, rq = p // 2, q // 2
    out = []
    for (i, s), (k, t) in cartesian(_side_weights(rp, p % 2 == 1), _side_weights(rq, q % 2 == 1)):
        xv = [0] * rp
        yv = [0] * rq
        if i >= 0:
            xv[i] = s
        if k >= 0:
            yv[k] = t
        out.append((tuple(xv), tuple(yv)))
    return out


def positive_noncompact_weights(levi: LeviDatum):
    xs, ys = defining_values(levi)
    out = []
    for xv, yv in noncompact_weights(levi.p, levi.q):
        val = sum(a * b for a, b in zip(xv, xs)) + sum(a * b for a, b in zip(yv, ys))
        if val > 0:
            out.append((xv, yv))
    return out


def dim_u_cap_p(levi: LeviDatum, p: int | None = None, q: int | None = None) -> int:
    """R = number of noncompact roots with positive value on the defining element."""
    if p is not None and q is not None:
        levi.check(p, q)
    return len(positive_noncompact_weights(levi))


def two_rho_u_cap_p(levi: LeviDatum) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sum of the weights of u cap p, split into x and y coordinates."""
    rp, rq = levi.p // 2, levi.q // 2
    sx = [0] * rp
    sy = [0] * rq
    for xv, yv in positive_noncompact_weights(levi):
        sx = [a + b for a, b in zip(sx, xv)]
        sy = [a + b for a, b in zip(sy, yv)]
    return tuple(sx), tuple(sy)


def all_levis(p: int, q: int) -> list[LeviDatum]:
    """Every Levi of SO(p,q) up to compact-factor normalization and block order."""
    seen = set()
    out = []

    def rec(blocks: list[tuple[int, int]], rp: int, rq: int):
        lev = LeviDatum(tuple(blocks), (p - 2 * (p // 2 - rp), q - 2 * (q // 2 - rq))).canonical()
        if lev not in seen:
            seen.add(lev)
            out.append(lev)
        for a in range(rp + 1):
            for b in range(rq + 1):
                if a + b:
                    rec(blocks + [(a, b)], rp - a, rq - b)

    rec([], p // 2, q // 2)
    return sorted(out, key=lambda l: (dim_u_cap_p(l), l.u_blocks, l.so_block))


def shape_of(levi: LeviDatum) -> str | None:
    """Classify as trivial, compact-plus (C x SO(p-2n,q)), compact-minus
    (C x SO(p,q-2n)), or None for anything else."""
    blocks = levi.normalized().u_blocks
    if not blocks:
        return "trivial"
    if all(b == (1, 0) for b in blocks):
        return "compact-plus"
    if all(b == (0, 1) for b in blocks):
        return "compact-minus"
    return None


def expected_R(levi: LeviDatum) -> int | None:
    shape = shape_of(levi)
    n = len(levi.normalized().u_blocks)
    if shape == "trivial":
        return 0
    if shape == "compact-plus":
        return n * levi.q
    if shape == "compact-minus":
        return n * levi.p
    return None


def low_degree_bound_ok(R: int, p: int, q: int) -> bool:
    return R < p + q - 3 and 4 * R < p * q


def low_degree_levis(R: int, p: int, q: int) -> list[LeviDatum]:
    """All Levis with dim(u cap p) = R, for R below min(p+q-3, pq/4)."""
    if not low_degree_bound_ok(R, p, q):
        raise ValueError(f"R={R} is not below min(p+q-3={p + q - 3}, pq/4={p * q / 4})")
    return [lev for lev in all_levis(p, q) if dim_u_cap_p(lev) == R]


def classification_holds(p: int, q: int) -> bool:
    for R in range(0, p + q):
        if not low_degree_bound_ok(R, p, q):
            continue
        for lev in low_degree_levis(R, p, q):
            if expected_R(lev) != R:
                return False
    return True


# cohomology tables for the worked families

FAMILIES = ("so_n1_trivial", "so_n1_standard", "so_n2_trivial")


def cohomology_degrees(family: str, **params) -> dict[int, int]:
    """degree -> dimension for the three worked example families.

    so_n1_trivial(n, q, sign=None): the module with cohomology starting in degree q;
      when n = 2l and q = l, sign picks one of the two modules.
    so_n1_standard(n): coefficients in the standard representation.
    so_n2_trivial(n, r): the module A_{r,r}, 4r < n.
    """
    if family == "so_n1_trivial":
        n, q = params["n"], params["q"]
        ell = (n + 1) // 2
        if n % 2 == 0 and q == n // 2:
            if params.get("sign") not in (1, -1):
                raise ValueError("n = 2q needs sign = +1 or -1")
            return {q: 1}
        if not 0 <= q < ell:
            raise ValueError(f"q={q} outside 0..{ell - 1}")
        return {q: 1, n - q: 1}
    if family == "so_n1_standard":
        n = params["n"]
        if n < 2:
            raise ValueError("need n >= 2")
        return {1: 1, n - 1: 1}
    if family == "so_n2_trivial":
        n, r = params["n"], params["r"]
        if not (r >= 0 and 4 * r < n):
            raise ValueError(f"need 4r < n, got r={r}, n={n}")
        return {2 * r + 2 * k: 1 for k in range(n - 2 * r + 1)}
    raise ValueError(f"unsupported family {family!r}; choose from {FAMILIES}")


def family_levi(family: str, **params) -> LeviDatum:
    """The Levi attached to each worked family."""
    if family == "so_n1_trivial":
        n, q = params["n"], params["q"]
        return LeviDatum(((1, 0),) * q, (n - 2 * q, 1))
    if family == "so_n1_standard":
        n = params["n"]
        return LeviDatum(((1, 0),), (n - 2, 1))
    if family == "so_n2_trivial":
        n, r = params["n"], params["r"]
        return LeviDatum(((1, 0),) * r, (n - 2 * r, 2))
    raise ValueError(f"unsupported family {family!r}")
