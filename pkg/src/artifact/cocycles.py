"""Cocycle values in the Fock model: the top-degree pairing, the degree-zero
cochain on harmonic tensors, and their products with principal minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as cartesian
from math import factorial
from typing import Mapping, Sequence

from .exterior import MultiVector, perm_sign, u_double_prime, u_prime, vz_vector
from .gaussian import GaussianRational, ONE, ZERO
from .linalg import ring_det
from .partitions import Partition, fundamental_to_partition
from .polyfock import Ambient, SparsePoly, is_pluriharmonic, minor_delta

Tensor = dict[tuple[tuple[int, ...], tuple[int, ...]], GaussianRational]


def km_pair(xs: Sequence[Sequence[object]], mv: MultiVector):
    """Pair x_1 ^ ... ^ x_n (each wedged against v_{p+1}..v_{p+q}) with mv.

    Rows are ordered by (i, nu), columns by the sorted basis of each term;
    entry ((i, nu), (alpha, mu)) is x_i[alpha] when mu == nu, else 0.
    Entries of xs may be scalars or SparsePoly.
    """
    p, q = mv.ambient
    n = len(xs)
    if any(len(x) != p for x in xs):
        raise ValueError(f"each coordinate vector needs {p} entries")
    if any(len(k) != n * q for k in mv.terms):
        raise ValueError(f"multivector must have degree n*q = {n * q}")
    polys = [x for vec in xs for x in vec if isinstance(x, SparsePoly)]
    if polys:
        amb = polys[0].ambient
        zero, one = SparsePoly.zero(amb), SparsePoly.constant(amb, 1)
        entries = [[x if isinstance(x, SparsePoly) else SparsePoly.constant(amb, x) for x in vec] for vec in xs]
        is_zero = SparsePoly.is_zero
    else:
        zero, one = ZERO, ONE
        entries = [[GaussianRational.coerce(x) for x in vec] for vec in xs]
        is_zero = None
    rows = [(i, nu) for i in range(n) for nu in range(p + 1, p + q + 1)]
    total = zero
    for key, c in mv.terms.items():
        M = [[entries[i][a - 1] if mu == nu else zero for (a, mu) in key] for (i, nu) in rows]
        d = ring_det(M, zero, one, is_zero)
        total = total + d * c
    return total


def _check_range(ambient: Ambient):
    if ambient.n > ambient.p0:
        raise ValueError(f"n={ambient.n} exceeds floor(p/2)={ambient.p0}")


def coordinate_variables(ambient: Ambient) -> list[list[SparsePoly]]:
    """x_j with entries z[alpha, j], alpha <= p."""
    return [[SparsePoly.var(ambient, a, j) for a in range(1, ambient.p + 1)] for j in range(1, ambient.n + 1)]


def km_value_on_vz(ambient: Ambient) -> SparsePoly:
    """The polynomial x -> km_pair(x, e(q)) with x in the Fock variables."""
    _check_range(ambient)
    mv = vz_vector(ambient.n, (ambient.p, ambient.q))
    return km_pair(coordinate_variables(ambient), mv)


def dual_frame(ambient: Ambient) -> list[list[GaussianRational]]:
    """Coordinates of (u''_1, ..., u''_n) in V+."""
    out = []
    for j in range(1, ambient.n + 1):
        vec = [ZERO] * ambient.p
        for a, c in u_double_prime(j, ambient.p).items():
            vec[a - 1] = c
        out.append(vec)
    return out


# degree-zero cochain

def fm_zero(I: Sequence[int], beta: Sequence[int], ambient: Ambient) -> SparsePoly:
    """v_beta (x) e_I -> z[beta_1, I_1] ... z[beta_l, I_l]."""
    if len(I) != len(beta):
        raise ValueError("multi-indices must have equal length")
    exps: dict[int, int] = {}
    for i, b in zip(I, beta):
        if not 1 <= b <= ambient.p:
            raise ValueError(f"beta entry {b} outside 1..{ambient.p}")
        idx = ambient.index(b, i)
        exps[idx] = exps.get(idx, 0) + 1
    return SparsePoly.monomial(ambient, exps)


def fm_apply(tensor: Mapping, ambient: Ambient) -> SparsePoly:
    total = SparsePoly.zero(ambient)
    for (I, beta), c in tensor.items():
        total = total + fm_zero(I, beta, ambient) * c
    return total


def tensor_product(a: Mapping, b: Mapping) -> Tensor:
    out: Tensor = {}
    for (I1, b1), c1 in a.items():
        for (I2, b2), c2 in b.items():
            key = (I1 + I2, b1 + b2)
            s = out.get(key, ZERO) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def wedge_factor(k: int, p: int) -> Tensor:
    """(e_1 ^ ... ^ e_k) (x) (u'_1 ^ ... ^ u'_k).

    The e side is the plain alternating sum, the u' side is divided by k!.
    """
    out: Tensor = {}
    scale = Fraction(1, factorial(k))
    coords = {j: u_prime(j, p) for j in range(1, k + 1)}
    for sigma in permutations(range(1, k + 1)):
        s_sigma = perm_sign(sigma)
        for tau in permutations(range(1, k + 1)):
            s = s_sigma * perm_sign(tau)
            for choice in cartesian(*(coords[t].items() for t in tau)):
                beta = tuple(b for b, _ in choice)
                c = GaussianRational(scale * s)
                for _, x in choice:
                    c = c * x
                key = (tuple(sigma), beta)
                tot = out.get(key, ZERO) + c
                if tot:
                    out[key] = tot
                else:
                    out.pop(key, None)
    return out


def _factor_list(a: Sequence[int]) -> list[int]:
    return [k for k, ak in enumerate(a, start=1) for _ in range(ak)]


def highest_weight_tensor(a: Sequence[int], ambient: Ambient) -> Tensor:
    """Product over k of the wedge factor of size k taken a_k times."""
    _check_weights(a, ambient)
    out: Tensor = {((), ()): ONE}
    for k in _factor_list(a):
        out = tensor_product(out, wedge_factor(k, ambient.p))
    return out


def _check_weights(a: Sequence[int], ambient: Ambient):
    _check_range(ambient)
    if len(a) > ambient.n:
        raise ValueError(f"{len(a)} fundamental weights given for n={ambient.n}")
    if any(x < 0 for x in a):
        raise ValueError("fundamental weight coefficients must be nonnegative")


def fm_highest_weight_value(a: Sequence[int], ambient: Ambient, method: str = "factorized") -> SparsePoly:
    """Apply the degree-zero cochain to the highest weight tensor.

    method="factorized" applies it factor by factor and multiplies;
    method="full" expands the whole tensor first.
    """
    _check_weights(a, ambient)
    if method == "full":
        return fm_apply(highest_weight_tensor(a, ambient), ambient)
    if method != "factorized":
        raise ValueError(f"unknown method {method!r}")
    cache: dict[int, SparsePoly] = {}
    out = SparsePoly.constant(ambient, 1)
    for k in _factor_list(a):
        if k not in cache:
            cache[k] = fm_apply(wedge_factor(k, ambient.p), ambient)
        out = out * cache[k]
    return out


def closed_form(a: Sequence[int], ambient: Ambient, extra_top: int = 0) -> SparsePoly:
    """Delta_1^{a_1} ... Delta_n^{a_n + extra_top}."""
    n = ambient.n
    exps = list(a) + [0] * (n - len(a))
    exps[n - 1] += extra_top
    out = SparsePoly.constant(ambient, 1)
    for k, e in enumerate(exps, start=1):
        if e:
            out = out * minor_delta(k, ambient) ** e
    return out


def full_cocycle_value(a: Sequence[int], ambient: Ambient) -> SparsePoly:
    return km_value_on_vz(ambient) * fm_highest_weight_value(a, ambient)


# operators on tensors, for highest weight checks

def gl_raise(tensor: Mapping, i: int, j: int) -> Tensor:
    """E_ij acting as a derivation on the C^n side (e_j -> e_i)."""
    out: Tensor = {}
    for (I, beta), c in tensor.items():
        for t, x in enumerate(I):
            if x == j:
                key = (I[:t] + (i,) + I[t + 1:], beta)
                s = out.get(key, ZERO) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


def v_operator(tensor: Mapping, A: Sequence[Sequence[object]]) -> Tensor:
    """A acting as a derivation on the V+ side; v_g -> sum_b A[b][g] v_b."""
    out: Tensor = {}
    p = len(A)
    for (I, beta), c in tensor.items():
        for t, g in enumerate(beta):
            for b in range(1, p + 1):
                x = A[b - 1][g - 1]
                if not x:
                    continue
                key = (I, beta[:t] + (b,) + beta[t + 1:])
                s = out.get(key, ZERO) + c * x
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


def so_root_operator(u: Mapping[int, object], v: Mapping[int, object], p: int) -> list[list[GaussianRational]]:
    """Matrix of w -> (u, w) v - (v, w) u for the standard form on V+."""
    A = [[ZERO] * p for _ in range(p)]
    for g in range(1, p + 1):
        ug = GaussianRational.coerce(u.get(g, 0))
        vg = GaussianRational.coerce(v.get(g, 0))
        for b in range(1, p + 1):
            A[b - 1][g - 1] = ug * GaussianRational.coerce(v.get(b, 0)) - vg * GaussianRational.coerce(u.get(b, 0))
    return A


def raising_operators(ambient: Ambient) -> dict[str, list[list[GaussianRational]]]:
    """Positive root vectors of so(V+) for the flag u'_1, u'_1 ^ u'_2, ..."""
    p, p0 = ambient.p, ambient.p0
    ops = {}
    for j in range(1, p0 + 1):
        for i in range(j + 1, p0 + 1):
            ops[f"u'{j}^u''{i}"] = so_root_operator(u_prime(j, p), u_double_prime(i, p), p)
            ops[f"u'{j}^u'{i}"] = so_root_operator(u_prime(j, p), u_prime(i, p), p)
        if p % 2:
            ops[f"u'{j}^v{p}"] = so_root_operator(u_prime(j, p), {p: 1}, p)
    return ops


def is_highest_weight(tensor: Mapping, ambient: Ambient) -> bool:
    n = ambient.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if gl_raise(tensor, i, j):
                return False
    return all(not v_operator(tensor, A) for A in raising_operators(ambient).values())


@dataclass(frozen=True)
class KTypeWeight:
    weight: tuple[int, ...]
    det_twist: Fraction


def vz_ktype_weight(n: int, q: int, lam: Sequence[int], p: int) -> KTypeWeight:
    """Highest weight (q + lam_1, ..., q + lam_n) and the twist (p + q) / 2."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{list(lam)} has more than {n} parts")
    parts = list(lam) + [0] * (n - len(lam))
    return KTypeWeight(tuple(q + x for x in parts), Fraction(p + q, 2))


@dataclass
class CocycleReport:
    ambient: Ambient
    a: tuple[int, ...]
    value: SparsePoly
    reference: SparsePoly
    pluriharmonic: bool

    @property
    def matches(self) -> bool:
        return self.value == self.reference


def verify_top(ambient: Ambient) -> CocycleReport:
    value = km_value_on_vz(ambient)
    ref = minor_delta(ambient.n, ambient) ** ambient.q
    return CocycleReport(ambient, (), value, ref, is_pluriharmonic(value))


def verify_full(a: Sequence[int], ambient: Ambient) -> CocycleReport:
    value = full_cocycle_value(a, ambient)
    ref = closed_form(a, ambient, extra_top=ambient.q)
    return CocycleReport(ambient, tuple(a), value, ref, is_pluriharmonic(value))


def weight_partition(a: Sequence[int]) -> Partition:
    return fundamental_to_partition(a)
