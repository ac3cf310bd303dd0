"""Sparse polynomials over Q(i) in the Fock-model variables z[alpha, j].

Variables are indexed by alpha in 1..m (m = p + q) and a copy index j in 1..n.
Exponent vectors are dense tuples flattened in (alpha, j) order, so the
variable z[alpha, j] sits at position (alpha - 1) * n + (j - 1).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .gaussian import GaussianRational, ONE, ZERO, I
from .linalg import integer_rank, ring_det

DEFAULT_NULLSPACE_CAP = 2000
CAP_ENV = "ARTIFACT_NULLSPACE_CAP"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Ambient:
    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.n < 1:
            raise ValueError(f"bad signature {self}")

    @property
    def m(self) -> int:
        return self.p + self.q

    @property
    def p0(self) -> int:
        return self.p // 2

    @property
    def nvars(self) -> int:
        return self.m * self.n

    def index(self, alpha: int, j: int) -> int:
        if not (1 <= alpha <= self.m and 1 <= j <= self.n):
            raise ValueError(f"variable z[{alpha},{j}] outside m={self.m}, n={self.n}")
        return (alpha - 1) * self.n + (j - 1)

    def var_of(self, idx: int) -> tuple[int, int]:
        return idx // self.n + 1, idx % self.n + 1

    def is_positive(self, idx: int) -> bool:
        return idx // self.n < self.p

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "n": self.n}


def _coerce(c) -> GaussianRational:
    return GaussianRational.coerce(c)


class SparsePoly:
    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[tuple[int, ...], object] | None = None):
        self.ambient = ambient
        clean: dict[tuple[int, ...], GaussianRational] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != ambient.nvars:
                    raise ValueError("exponent vector has wrong length")
                c = _coerce(c)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ambient: Ambient, terms: dict) -> "SparsePoly":
        # trusted constructor: terms already canonical and nonzero
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def zero(cls, ambient: Ambient) -> "SparsePoly":
        return cls._raw(ambient, {})

    @classmethod
    def constant(cls, ambient: Ambient, c=1) -> "SparsePoly":
        c = _coerce(c)
        return cls._raw(ambient, {(0,) * ambient.nvars: c} if c else {})

    @classmethod
    def monomial(cls, ambient: Ambient, exps: Mapping[int, int], c=1) -> "SparsePoly":
        vec = [0] * ambient.nvars
        for idx, e in exps.items():
            vec[idx] += e
        return cls(ambient, {tuple(vec): c})

    @classmethod
    def var(cls, ambient: Ambient, alpha: int, j: int) -> "SparsePoly":
        return cls.monomial(ambient, {ambient.index(alpha, j): 1})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(mono) for mono in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(mono) for mono in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def homogeneous_component(self, d: int) -> "SparsePoly":
        return SparsePoly._raw(self.ambient, {mono: c for mono, c in self.terms.items() if sum(mono) == d})

    def positive_only(self) -> bool:
        amb = self.ambient
        cut = amb.p * amb.n
        return all(not any(mono[cut:]) for mono in self.terms)

    def coefficient(self, mono: Sequence[int]) -> GaussianRational:
        return self.terms.get(tuple(mono), ZERO)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], GaussianRational]]:
        # graded lex: higher degree first, then lex with z[1,1] largest
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    # arithmetic

    def _check(self, other: "SparsePoly"):
        if self.ambient != other.ambient:
            raise ValueError(f"signature mismatch: {self.ambient} vs {other.ambient}")

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        return SparsePoly.constant(self.ambient, other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s = s + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return SparsePoly._raw(self.ambient, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.ambient, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            try:
                c = _coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return SparsePoly.zero(self.ambient)
            return SparsePoly._raw(self.ambient, {mono: x * c for mono, x in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                s = out.get(mono)
                out[mono] = prod if s is None else s + prod
        return SparsePoly._raw(self.ambient, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = SparsePoly.constant(self.ambient, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.ambient == other.ambient and self.terms == other.terms
        try:
            return self == SparsePoly.constant(self.ambient, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    # evaluation and substitution

    def evaluate(self, values: Mapping[int, object]) -> GaussianRational:
        """Evaluate with values[idx] for each flat variable index; missing ones are 0."""
        vals = {k: _coerce(v) for k, v in values.items()}
        total = ZERO
        for mono, c in self.terms.items():
            t = c
            for idx, e in enumerate(mono):
                if e:
                    v = vals.get(idx)
                    if v is None or not v:
                        t = ZERO
                        break
                    t = t * v ** e
            total = total + t
        return total

    def evaluate_at(self, xs: Sequence[Sequence[object]]) -> GaussianRational:
        """Evaluate at the n-tuple x = (x_1..x_n); xs[j][alpha - 1] is z[alpha, j + 1]."""
        amb = self.ambient
        values = {}
        for j, vec in enumerate(xs):
            for a, v in enumerate(vec):
                values[amb.index(a + 1, j + 1)] = v
        return self.evaluate(values)

    def substitute(self, images: Mapping[int, "SparsePoly"], target: Ambient | None = None) -> "SparsePoly":
        """Replace variable idx by images[idx]; unlisted variables are kept."""
        amb = self.ambient
        target = target or amb
        powers: dict[tuple[int, int], SparsePoly] = {}

        def power(idx: int, e: int) -> SparsePoly:
            key = (idx, e)
            if key not in powers:
                base = images.get(idx)
                if base is None:
                    base = SparsePoly.monomial(target, {idx: 1})
                powers[key] = base if e == 1 else power(idx, e - 1) * base
            return powers[key]

        total = SparsePoly.zero(target)
        for mono, c in self.terms.items():
            t = SparsePoly.constant(target, c)
            for idx, e in enumerate(mono):
                if e:
                    t = t * power(idx, e)
            total = total + t
        return total

    # text

    def __repr__(self):
        return f"SparsePoly({self.ambient.p},{self.ambient.q},{self.ambient.n}: {to_text(self)})"

    def __str__(self):
        return to_text(self)


# differential operators

def partial(P: SparsePoly, v: int | tuple[int, int]) -> SparsePoly:
    """Formal derivative with respect to a flat index or an (alpha, j) pair."""
    idx = P.ambient.index(*v) if isinstance(v, tuple) else v
    out: dict[tuple[int, ...], GaussianRational] = {}
    for mono, c in P.terms.items():
        e = mono[idx]
        if e:
            new = list(mono)
            new[idx] = e - 1
            key = tuple(new)
            val = c * e
            s = out.get(key)
            out[key] = val if s is None else s + val
    return SparsePoly._raw(P.ambient, {k: v for k, v in out.items() if v})


def _require_positive(P: SparsePoly):
    if not P.positive_only():
        raise ValueError("polynomial involves negative variables z[mu, j] with mu > p")


def laplacian(P: SparsePoly, i: int, j: int) -> SparsePoly:
    """Delta_ij = sum over alpha <= p of d^2 / dz[alpha,i] dz[alpha,j]."""
    _require_positive(P)
    amb = P.ambient
    total = SparsePoly.zero(amb)
    for alpha in range(1, amb.p + 1):
        total = total + partial(partial(P, amb.index(alpha, i)), amb.index(alpha, j))
    return total


def is_pluriharmonic(P: SparsePoly) -> bool:
    _require_positive(P)
    n = P.ambient.n
    return all(laplacian(P, i, j).is_zero() for i in range(1, n + 1) for j in range(i, n + 1))


# Witt coordinates and minors

def witt_w(kind: str, alpha: int, j: int, ambient: Ambient) -> SparsePoly:
    """w'[alpha, j] = z[alpha, j] + i z[alpha', j] and w'' with a minus sign."""
    p0 = ambient.p0
    if not 1 <= alpha <= p0:
        raise ValueError(f"alpha={alpha} outside 1..{p0}")
    if not 1 <= j <= ambient.n:
        raise ValueError(f"j={j} outside 1..{ambient.n}")
    if kind not in ("w'", "w''"):
        raise ValueError(f"unknown Witt coordinate kind {kind!r}")
    alpha_prime = 2 * p0 - alpha + 1
    sign = 1 if kind == "w'" else -1
    z = SparsePoly.var(ambient, alpha, j)
    zp = SparsePoly.var(ambient, alpha_prime, j)
    return z + zp * (I * sign)


def t_var(j: int, ambient: Ambient) -> SparsePoly:
    if ambient.p % 2 == 0:
        raise ValueError("t coordinates exist only for odd p")
    return SparsePoly.var(ambient, ambient.p, j)


def w_matrix(ambient: Ambient) -> list[list[SparsePoly]]:
    """The p0 x n matrix W'' with entries w''[alpha, j]."""
    return [[witt_w("w''", a, j, ambient) for j in range(1, ambient.n + 1)] for a in range(1, ambient.p0 + 1)]


def minor_delta(k: int, ambient: Ambient) -> SparsePoly:
    """Leading principal k x k minor of W''."""
    if not 1 <= k <= min(ambient.p0, ambient.n):
        raise ValueError(f"k={k} outside 1..min(p0={ambient.p0}, n={ambient.n})")
    W = w_matrix(ambient)
    block = [row[:k] for row in W[:k]]
    return ring_det(block, SparsePoly.zero(ambient), SparsePoly.constant(ambient, 1), lambda x: x.is_zero())


# GL(n) action

@dataclass(frozen=True)
class TwistedPoly:
    """det(g)^exponent * poly with a half-integral exponent kept formal."""
    poly: SparsePoly
    det: GaussianRational
    exponent: Fraction

    def with_root(self, sqrt_det) -> SparsePoly:
        r = _coerce(sqrt_det)
        if r * r != self.det:
            raise ValueError(f"{r} is not a square root of {self.det}")
        return self.poly * r ** int(2 * self.exponent)


def matrix_det(g: Sequence[Sequence[object]]) -> GaussianRational:
    rows = [[_coerce(x) for x in row] for row in g]
    return ring_det(rows, ZERO, ONE)


def gl_act(g: Sequence[Sequence[object]], P: SparsePoly, twist=0, sqrt_det=None,
           require_scalar: bool = False):
    """det(g)^twist * P(Z g), where z[alpha, j] -> sum_k g[k][j] z[alpha, k].

    A half-integral twist returns a TwistedPoly unless sqrt_det is given.
    """
    amb = P.ambient
    n = amb.n
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError(f"g must be {n} x {n}")
    g = [[_coerce(x) for x in row] for row in g]
    d = matrix_det(g)
    if not d:
        raise ValueError("g is singular")
    twist = Fraction(twist)
    if twist.denominator not in (1, 2):
        raise ValueError(f"twist {twist} is not a half-integer")
    images = {}
    for alpha in range(1, amb.m + 1):
        for j in range(1, n + 1):
            img = SparsePoly.zero(amb)
            for k in range(1, n + 1):
                if g[k - 1][j - 1]:
                    img = img + SparsePoly.var(amb, alpha, k) * g[k - 1][j - 1]
            images[amb.index(alpha, j)] = img
    moved = P.substitute(images)
    if twist.denominator == 1:
        return moved * d ** int(twist)
    if sqrt_det is not None:
        return TwistedPoly(moved, d, twist).with_root(sqrt_det)
    if require_scalar:
        raise ValueError("half-integral twist needs a designated square root of det(g)")
    return TwistedPoly(moved, d, twist)


# oscillator generators

def sp_generator(P: SparsePoly, kind: str, i: int, j: int) -> SparsePoly:
    """raise: z_i z_j P; lower: d_i d_j P; mixed: z_i d_j P + delta_ij/2 P. Flat indices."""
    amb = P.ambient
    for x in (i, j):
        if not 0 <= x < amb.nvars:
            raise ValueError(f"flat index {x} outside 0..{amb.nvars - 1}")
    if kind == "raise":
        return P * SparsePoly.monomial(amb, {i: 1}) * SparsePoly.monomial(amb, {j: 1})
    if kind == "lower":
        return partial(partial(P, i), j)
    if kind == "mixed":
        out = SparsePoly.monomial(amb, {i: 1}) * partial(P, j)
        if i == j:
            out = out + P * Fraction(1, 2)
        return out
    raise ValueError(f"unknown generator kind {kind!r}")


# harmonic dimensions

def _cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_NULLSPACE_CAP


def positive_monomials(ambient: Ambient, ell: int) -> list[tuple[int, ...]]:
    npos = ambient.p * ambient.n
    out = []
    for combo in combinations_with_replacement(range(npos), ell):
        vec = [0] * ambient.nvars
        for idx in combo:
            vec[idx] += 1
        out.append(tuple(vec))
    return out


def harmonic_space_dim(ambient: Ambient, ell: int, cap: int | None = None) -> int:
    """Dimension of the joint kernel of all Delta_ij on degree-ell polynomials in the positive variables."""
    cap = _cap() if cap is None else cap
    if ell < 0:
        raise ValueError("degree must be nonnegative")
    source = positive_monomials(ambient, ell)
    if len(source) > cap:
        raise CapExceeded(f"homogeneous component has dimension {len(source)} > cap {cap}")
    if ell < 2:
        return len(source)
    n = ambient.n
    row_index: dict[tuple, int] = {}
    columns: list[dict[int, int]] = []
    for mono in source:
        col: dict[int, int] = {}
        P = SparsePoly._raw(ambient, {mono: ONE})
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                for tgt, c in laplacian(P, i, j).terms.items():
                    key = (i, j, tgt)
                    r = row_index.setdefault(key, len(row_index))
                    col[r] = col.get(r, 0) + int(c.re)
        columns.append(col)
    rows = [[0] * len(source) for _ in range(len(row_index))]
    for c, col in enumerate(columns):
        for r, v in col.items():
            rows[r][c] = v
    return len(source) - integer_rank(rows)


# serialization

def _var_text(amb: Ambient, idx: int, e: int) -> str:
    a, j = amb.var_of(idx)
    return f"z[{a},{j}]" + (f"^{e}" if e > 1 else "")


def to_text(P: SparsePoly) -> str:
    if P.is_zero():
        return "0"
    parts = []
    for mono, c in P.sorted_terms():
        factors = [str(c)] + [_var_text(P.ambient, idx, e) for idx, e in enumerate(mono) if e]
        parts.append("*".join(factors))
    return " + ".join(parts)


_VAR_RE = re.compile(r"z\[(\d+),(\d+)\](?:\^(\d+))?")


def parse_text(text: str, ambient: Ambient) -> SparsePoly:
    text = text.strip()
    if text == "0":
        return SparsePoly.zero(ambient)
    total = SparsePoly.zero(ambient)
    for chunk in text.split(" + "):
        chunk = chunk.strip()
        pos = chunk.find("z[")
        if pos < 0:
            coef_text, rest = chunk, ""
        else:
            coef_text, rest = chunk[:pos].rstrip("*"), chunk[pos:]
        coef = GaussianRational.parse(coef_text) if coef_text else ONE
        exps: dict[int, int] = {}
        for piece in filter(None, rest.split("*")):
            mt = _VAR_RE.fullmatch(piece)
            if not mt:
                raise ValueError(f"cannot parse factor {piece!r}")
            idx = ambient.index(int(mt.group(1)), int(mt.group(2)))
            exps[idx] = exps.get(idx, 0) + int(mt.group(3) or 1)
        total = total + SparsePoly.monomial(ambient, exps, coef)
    return total


def to_json(P: SparsePoly) -> dict:
    return {
        "ambient": P.ambient.to_json(),
        "terms": [[list(mono), c.to_json()] for mono, c in P.sorted_terms()],
    }


def from_json(data: Mapping) -> SparsePoly:
    amb = Ambient(**data["ambient"])
    return SparsePoly(amb, {tuple(mono): GaussianRational.from_json(c) for mono, c in data["terms"]})


def linear_form(ambient: Ambient, coeffs: Mapping[tuple[int, int], object]) -> SparsePoly:
    out = SparsePoly.zero(ambient)
    for (a, j), c in coeffs.items():
        out = out + SparsePoly.var(ambient, a, j) * c
    return out


def product(polys: Iterable[SparsePoly], ambient: Ambient) -> SparsePoly:
    out = SparsePoly.constant(ambient, 1)
    for P in polys:
        out = out * P
    return out
