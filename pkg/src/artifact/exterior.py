"""Exterior algebra on p = V+ (x) V-* with basis omega[alpha, mu], alpha <= p < mu."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .gaussian import GaussianRational, ONE, ZERO, I
from .linalg import nullspace, rref

Pair = tuple[int, int]
Key = tuple[Pair, ...]


def perm_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting seq (entries distinct)."""
    sign = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def canonical(pairs: Sequence[Pair]) -> tuple[int, Key]:
    """Sort a wedge of basis one-forms; returns (sign, key), sign 0 on a repeat."""
    if len(set(pairs)) < len(pairs):
        return 0, ()
    return perm_sign(pairs), tuple(sorted(pairs))


class MultiVector:
    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: tuple[int, int], terms: Mapping[Key, object] | None = None):
        self.ambient = (int(ambient[0]), int(ambient[1]))
        p, q = self.ambient
        out: dict[Key, GaussianRational] = {}
        for key, c in (terms or {}).items():
            for a, mu in key:
                if not (1 <= a <= p and p < mu <= p + q):
                    raise ValueError(f"basis index ({a},{mu}) out of range for (p,q)={self.ambient}")
            sign, k = canonical(list(key))
            if not sign:
                continue
            c = GaussianRational.coerce(c) * sign
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        self.terms = out

    @classmethod
    def _raw(cls, ambient, terms):
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, ambient, c=1) -> "MultiVector":
        return cls(ambient, {(): c})

    @classmethod
    def basis(cls, ambient, alpha: int, mu: int) -> "MultiVector":
        return cls(ambient, {((alpha, mu),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("not homogeneous")
        return degs.pop()

    def component(self, d: int) -> "MultiVector":
        return MultiVector._raw(self.ambient, {k: c for k, c in self.terms.items() if len(k) == d})

    def _check(self, other):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other: "MultiVector"):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MultiVector._raw(self.ambient, out)

    def __neg__(self):
        return MultiVector._raw(self.ambient, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, MultiVector):
            return NotImplemented
        c = GaussianRational.coerce(c)
        if not c:
            return MultiVector._raw(self.ambient, {})
        return MultiVector._raw(self.ambient, {k: x * c for k, x in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "MultiVector(0)"
        parts = []
        for k, c in self.sorted_terms():
            name = "^".join(f"w[{a},{mu}]" for a, mu in k) or "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[[list(pr) for pr in k], c.to_json()] for k, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, ambient, data) -> "MultiVector":
        return cls(ambient, {tuple(tuple(pr) for pr in k): GaussianRational.from_json(c) for k, c in data})

    def power(self, k: int) -> "MultiVector":
        out = MultiVector.scalar(self.ambient, 1)
        for _ in range(k):
            out = wedge(out, self)
        return out


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    a._check(b)
    out: dict[Key, GaussianRational] = {}
    for ka, ca in a.terms.items():
        sa = set(ka)
        for kb, cb in b.terms.items():
            if sa.intersection(kb):
                continue
            # moving each element of kb leftward past larger elements of ka
            inv = sum(1 for x in ka for y in kb if x > y)
            key = tuple(sorted(ka + kb))
            c = ca * cb
            if inv % 2:
                c = -c
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return MultiVector._raw(a.ambient, out)


def wedge_all(items: Iterable[MultiVector], ambient) -> MultiVector:
    out = MultiVector.scalar(ambient, 1)
    for x in items:
        out = wedge(out, x)
    return out


def _check_mu(mu: int, ambient):
    p, q = ambient
    if not p < mu <= p + q:
        raise ValueError(f"index {mu} outside {p + 1}..{p + q}")


def curvature_form(mu: int, nu: int, ambient) -> MultiVector:
    """Omega[mu, nu] = sum over alpha of omega[alpha, mu] ^ omega[alpha, nu]."""
    _check_mu(mu, ambient)
    _check_mu(nu, ambient)
    p, _ = ambient
    out = MultiVector(ambient)
    for a in range(1, p + 1):
        out = out + wedge(MultiVector.basis(ambient, a, mu), MultiVector.basis(ambient, a, nu))
    return out


def euler_form(ambient) -> MultiVector:
    """Alternating sum over S_q of products of curvature forms; zero for odd q."""
    p, q = ambient
    if q % 2:
        return MultiVector(ambient)
    omegas = {(i, j): curvature_form(p + i, p + j, ambient)
              for i in range(1, q + 1) for j in range(1, q + 1) if i != j}
    out = MultiVector(ambient)
    for sigma in permutations(range(1, q + 1)):
        term = MultiVector.scalar(ambient, perm_sign(sigma))
        for t in range(0, q, 2):
            term = wedge(term, omegas[(sigma[t], sigma[t + 1])])
            if term.is_zero():
                break
        out = out + term
    return out


def u_prime(j: int, p: int) -> dict[int, GaussianRational]:
    """Coordinates of u'_j = v_j - i v_j' in V+, with j' = 2 p0 - j + 1."""
    p0 = p // 2
    if not 1 <= j <= p0:
        raise ValueError(f"j={j} outside 1..{p0}")
    return {j: ONE, 2 * p0 - j + 1: -I}


def u_double_prime(j: int, p: int) -> dict[int, GaussianRational]:
    """Coordinates of u''_j = (v_j + i v_j') / 2, the dual of u'_j."""
    p0 = p // 2
    if not 1 <= j <= p0:
        raise ValueError(f"j={j} outside 1..{p0}")
    half = GaussianRational(1, 0) / 2
    return {j: half, 2 * p0 - j + 1: I * half}


def vector_wedge_form(coords: Mapping[int, object], mu: int, ambient) -> MultiVector:
    """The one-form attached to x (x) v_mu* for x in V+ with the given coordinates."""
    _check_mu(mu, ambient)
    return MultiVector(ambient, {((a, mu),): c for a, c in coords.items()})


def vz_vector(n: int, ambient) -> MultiVector:
    """e(q) = wedge over j then nu of (u'_j ^ v_nu)."""
    p, q = ambient
    if not 0 <= n <= p // 2:
        raise ValueError(f"n={n} exceeds floor(p/2)={p // 2}")
    pieces = [vector_wedge_form(u_prime(j, p), nu, ambient)
              for j in range(1, n + 1) for nu in range(p + 1, p + q + 1)]
    return wedge_all(pieces, ambient)


def act(mv: MultiVector, a_plus: Sequence[Sequence[object]] | None = None,
        a_minus: Sequence[Sequence[object]] | None = None) -> MultiVector:
    """Derivation action of (A+, A-) in gl(V+) x gl(V-).

    A+ moves v_alpha to sum_beta A+[beta][alpha] v_beta; the second factor
    acts on V-* by the negative transpose.
    """
    p, q = mv.ambient
    out: dict[Key, GaussianRational] = {}

    def add(pairs, c):
        sign, key = canonical(pairs)
        if not sign:
            return
        s = out.get(key, ZERO) + c * sign
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for key, c in mv.terms.items():
        for slot, (a, mu) in enumerate(key):
            if a_plus is not None:
                for b in range(1, p + 1):
                    x = a_plus[b - 1][a - 1]
                    if x:
                        add(key[:slot] + ((b, mu),) + key[slot + 1:], c * x)
            if a_minus is not None:
                for nu in range(p + 1, p + q + 1):
                    x = a_minus[mu - p - 1][nu - p - 1]
                    if x:
                        add(key[:slot] + ((a, nu),) + key[slot + 1:], -(c * x))
    return MultiVector._raw(mv.ambient, out)


def so_basis(d: int) -> list[list[list[int]]]:
    """E_ab - E_ba for a < b, as d x d integer matrices."""
    out = []
    for a in range(d):
        for b in range(a + 1, d):
            M = [[0] * d for _ in range(d)]
            M[a][b] = 1
            M[b][a] = -1
            out.append(M)
    return out


def sl_basis(d: int) -> list[list[list[int]]]:
    out = []
    for a in range(d):
        for b in range(d):
            if a != b:
                M = [[0] * d for _ in range(d)]
                M[a][b] = 1
                out.append(M)
    for a in range(d - 1):
        M = [[0] * d for _ in range(d)]
        M[a][a] = 1
        M[a + 1][a + 1] = -1
        out.append(M)
    return out


def k_operators(ambient) -> list[tuple]:
    """Basis of so(p) + so(q) as (A+, A-) pairs."""
    p, q = ambient
    return [(A, None) for A in so_basis(p)] + [(None, B) for B in so_basis(q)]


def is_k_invariant(mv: MultiVector) -> bool:
    return all(act(mv, A, B).is_zero() for A, B in k_operators(mv.ambient))


def _coord_rows(vectors: Sequence[MultiVector]):
    keys = sorted({k for v in vectors for k in v.terms})
    return keys, [[v.terms.get(k, ZERO) for k in keys] for v in vectors]


def span_basis(vectors: Sequence[MultiVector]) -> list[MultiVector]:
    """A basis (as reduced rows) of the span of the given multivectors."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    ambient = vectors[0].ambient
    keys, rows = _coord_rows(vectors)
    mat, pivots = rref(rows, len(keys))
    return [MultiVector(ambient, dict(zip(keys, mat[r]))) for r in range(len(pivots))]


def k_span(mv: MultiVector, max_rounds: int = 50) -> list[MultiVector]:
    """Basis of the span of mv under repeated action of so(p) + so(q)."""
    ops = k_operators(mv.ambient)
    basis = span_basis([mv])
    frontier = list(basis)
    for _ in range(max_rounds):
        new = [act(v, A, B) for v in frontier for A, B in ops]
        grown = span_basis(basis + new)
        if len(grown) == len(basis):
            return basis
        frontier = grown
        basis = grown
    raise RuntimeError("span did not stabilize")


def invariant_forms(ambient, degree: int) -> list[MultiVector]:
    """Basis of K-invariant elements of the given degree, by exact linear algebra."""
    p, q = ambient
    pairs = [(a, mu) for a in range(1, p + 1) for mu in range(p + 1, p + q + 1)]
    keys = list(combinations(pairs, degree))
    if not keys:
        return []
    # constraint rows: for each operator and each image key, the coefficient
    rows = []
    for A, B in k_operators(ambient):
        images = [act(MultiVector._raw(ambient, {k: ONE}), A, B) for k in keys]
        targets = sorted({t for im in images for t in im.terms})
        for t in targets:
            rows.append([im.terms.get(t, ZERO) for im in images])
    if not rows:
        return [MultiVector(ambient, {k: ONE}) for k in keys]
    basis = nullspace(rows, len(keys))
    return [MultiVector(ambient, dict(zip(keys, vec))) for vec in basis]
