"""Identity suites and the independent oracles they compare against.

Each criterion function returns a CriterionResult; run_all runs them in order.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product as cartesian
from math import comb
from typing import Callable

from . import arthur as ar
from .cocycles import (closed_form, dual_frame, fm_highest_weight_value, full_cocycle_value,
                       km_value_on_vz)
from .exterior import euler_form
from .partitions import (Partition, cauchy_decompose, littlewood_so_multiplicity, partitions_of,
                         schur_dim, semistandard_tableaux, so_harmonic_dim, weyl_dim_so)
from .polyfock import Ambient, harmonic_space_dim, is_pluriharmonic, minor_delta
from .vz import LeviDatum, classification_holds, dim_u_cap_p


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float = 0.0
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    budget: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        budget = f" (budget {self.budget:.0f}s)" if self.budget else ""
        return f"[{status}] criterion {self.number}: {self.name} ({self.checked} checks, {self.seconds:.2f}s){budget}{extra}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "checked": self.checked, "failures": self.failures[:10]}


class _Run:
    def __init__(self, number: int, name: str, budget: float | None = None):
        self.result = CriterionResult(number, name, True, budget=budget)
        self.start = time.perf_counter()

    def check(self, ok: bool, label: str):
        self.result.checked += 1
        if not ok:
            self.result.passed = False
            self.result.failures.append(label)

    def done(self) -> CriterionResult:
        self.result.seconds = time.perf_counter() - self.start
        if self.result.budget is not None and self.result.seconds > self.result.budget:
            self.result.passed = False
            self.result.failures.append(f"took {self.result.seconds:.1f}s > {self.result.budget}s")
        return self.result


# shared data so criterion 3 can reuse what 1 and 2 produced
TOP_CASES = [(2, 1, 1), (2, 2, 1), (3, 1, 1), (4, 1, 2), (4, 2, 2), (6, 1, 3)]
_emitted: dict = {}


def weight_vectors(n: int, total: int):
    for a in cartesian(range(total + 1), repeat=n):
        if sum(a) <= total:
            yield a


def full_cases():
    for n in (1, 2):
        for p in range(2 * n, 7):
            for q in (1, 2):
                for a in weight_vectors(n, 3):
                    yield Ambient(p, q, n), a


def criterion_1() -> CriterionResult:
    run = _Run(1, "top-degree value equals Delta_n^q", budget=60)
    for p, q, n in TOP_CASES:
        amb = Ambient(p, q, n)
        value = km_value_on_vz(amb)
        _emitted[f"top{(p, q, n)}"] = value
        run.check(value == minor_delta(n, amb) ** q, f"(p,q,n)={(p, q, n)}")
    return run.done()


def criterion_2() -> CriterionResult:
    run = _Run(2, "full cocycle value equals the minor product", budget=120)
    for amb, a in full_cases():
        value = full_cocycle_value(a, amb)
        _emitted[f"full{(amb.p, amb.q, amb.n)}{a}"] = value
        run.check(value == closed_form(a, amb, extra_top=amb.q), f"(p,q,n)={(amb.p, amb.q, amb.n)} a={a}")
        run.check(value.evaluate_at(dual_frame(amb)) == 1, f"normalization at u'' for a={a}")
    return run.done()


def criterion_3() -> CriterionResult:
    run = _Run(3, "all emitted values are pluriharmonic")
    if not _emitted:
        criterion_1()
        criterion_2()
    for label, value in _emitted.items():
        run.check(is_pluriharmonic(value), label)
    return run.done()


def criterion_4() -> CriterionResult:
    run = _Run(4, "Cauchy dimension identity", budget=10)
    for p in range(1, 17):
        for q in range(1, 17):
            if p * q > 16:
                continue
            for R in range(p * q + 1):
                total = sum(schur_dim(mu, p) * schur_dim(mus, q) for mu, mus in cauchy_decompose(p, q, R))
                run.check(total == comb(p * q, R), f"p={p} q={q} R={R}")
    return run.done()


# character oracle for SO(p) branching

def _weyl_group(ell: int, odd: bool):
    """Signed permutations (all sign changes for B, even ones for D) as (perm, signs, sgn)."""
    out = []
    for perm in permutations(range(ell)):
        inv = sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        for signs in cartesian((1, -1), repeat=ell):
            flips = signs.count(-1)
            if not odd and flips % 2:
                continue
            sgn = (-1) ** inv
            if odd:
                sgn *= (-1) ** flips
            out.append((perm, signs, sgn))
    return out


def _act(w, vec):
    perm, signs, _ = w
    return tuple(signs[i] * vec[perm[i]] for i in range(len(vec)))


def restricted_character(mu, p: int) -> Counter:
    """GL(p) character s_mu on the SO(p) torus, weights doubled."""
    ell = p // 2
    char: Counter = Counter()
    for T in semistandard_tableaux(mu, p):
        e = [0] * p
        for row in T:
            for x in row:
                e[x - 1] += 1
        wt = tuple(2 * (e[2 * i] - e[2 * i + 1]) for i in range(ell))
        char[wt] += 1
    return char


def so_decompose(char: Counter, p: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of SO(p) highest weights (doubled coordinates) by the
    Weyl character formula and leading-term subtraction."""
    ell = p // 2
    odd = p % 2 == 1
    group = _weyl_group(ell, odd)
    rho = tuple(2 * ell - 2 * i - 1 for i in range(ell)) if odd else tuple(2 * (ell - i - 1) for i in range(ell))

    def alternant(v) -> Counter:
        out: Counter = Counter()
        for w in group:
            out[_act(w, v)] += w[2]
        return out

    numer: Counter = Counter()
    denom = alternant(rho)
    for a, ca in char.items():
        for b, cb in denom.items():
            numer[tuple(x + y for x, y in zip(a, b))] += ca * cb
    numer = Counter({k: v for k, v in numer.items() if v})

    def strictly_dominant(v) -> bool:
        if odd:
            return all(v[i] > v[i + 1] for i in range(ell - 1)) and (ell == 0 or v[-1] > 0)
        return all(v[i] > v[i + 1] for i in range(ell - 1)) and (ell < 2 or v[-2] > abs(v[-1]))

    def dominance_key(v):
        acc, out = 0, []
        for x in v:
            acc += x
            out.append(acc)
        return tuple(out)

    result: dict[tuple[int, ...], int] = {}
    while numer:
        candidates = [v for v in numer if strictly_dominant(v)]
        if not candidates:
            raise ArithmeticError("character is not a combination of Weyl characters")
        top = max(candidates, key=dominance_key)
        c = numer[top]
        result[tuple(x - r for x, r in zip(top, rho))] = c
        for k, v in alternant(top).items():
            numer[k] -= c * v
            if not numer[k]:
                del numer[k]
    return result


def littlewood_prediction(mu, p: int) -> dict[tuple[int, ...], int]:
    """SO(p) multiplicities predicted by the even-row LR sum (doubled weights)."""
    ell = p // 2
    out: dict[tuple[int, ...], int] = {}
    for k in range(sum(mu) + 1):
        for nu in partitions_of(k, max_len=ell):
            c = littlewood_so_multiplicity(mu, nu)
            if not c:
                continue
            wt = [2 * x for x in nu] + [0] * (ell - len(nu))
            out[tuple(wt)] = out.get(tuple(wt), 0) + c
            if p % 2 == 0 and ell > 0 and len(nu) == ell:
                wt[-1] = -wt[-1]
                out[tuple(wt)] = out.get(tuple(wt), 0) + c
    return out


def criterion_5() -> CriterionResult:
    run = _Run(5, "Littlewood branching matches the character oracle", budget=300)
    for p in (3, 4, 5):
        for size in range(6):
            for mu in partitions_of(size, max_len=p // 2):
                oracle = so_decompose(restricted_character(mu, p), p)
                dim = sum(c * weyl_dim_so([x // 2 for x in wt], p) for wt, c in oracle.items())
                run.check(dim == schur_dim(mu, p), f"oracle dimension p={p} mu={list(mu)}")
                run.check(oracle == littlewood_prediction(mu, p), f"p={p} mu={list(mu)}")
    return run.done()


def criterion_6() -> CriterionResult:
    run = _Run(6, "rectangular branching multiplicity")
    for q in range(1, 5):
        for n in range(1, 4):
            for p in range(2 * n, 2 * n + 2):
                for r in range(n + 1):
                    mult = littlewood_so_multiplicity(Partition.rectangle(n, q), Partition.rectangle(r, q))
                    expected = 1 if (r == n or q % 2 == 0) else 0
                    run.check(mult == expected, f"q={q} n={n} r={r} p={p}: got {mult}")
    return run.done()


def kv_cases():
    for p in range(1, 5):
        for n in (1, 2):
            if n <= p // 2:
                for ell in range(5):
                    yield p, n, ell


def kv_rhs(p: int, n: int, ell: int) -> int:
    return sum(schur_dim(lam, n) * so_harmonic_dim(lam, p) for lam in partitions_of(ell, max_len=n))


def criterion_7() -> CriterionResult:
    run = _Run(7, "harmonic dimension identity", budget=120)
    for p, n, ell in kv_cases():
        lhs = harmonic_space_dim(Ambient(p, 0, n), ell)
        rhs = kv_rhs(p, n, ell)
        run.check(lhs == rhs, f"p={p} n={n} l={ell}: {lhs} != {rhs}")
    return run.done()


def criterion_8() -> CriterionResult:
    run = _Run(8, "Euler form vanishing and non-vanishing")
    for q in (1, 3, 5):
        for p in range(1, 4):
            run.check(euler_form((p, q)).is_zero(), f"e_q != 0 for odd q={q}, p={p}")
    run.check(not euler_form((2, 2)).is_zero(), "e_2 = 0 at (2,2)")
    for p in range(1, 4):
        for q in range(1, 4):
            if q % 2:
                continue
            e = euler_form((p, q))
            for k in range(1, p + 1):
                if k * q <= p * q:
                    run.check(not e.power(k).is_zero(), f"e_{q}^{k} = 0 at (p,q)=({p},{q})")
    return run.done()


def criterion_9() -> CriterionResult:
    run = _Run(9, "root count and low-degree Levi shapes")
    for p in range(0, 11):
        for q in range(0, 11 - p):
            for n in range(p // 2 + 1):
                if p + q == 0:
                    continue
                R = dim_u_cap_p(LeviDatum.standard(n, p, q), p, q)
                run.check(R == n * q, f"U(1)^{n} x SO({p - 2 * n},{q}): R={R}")
    for p in range(1, 8):
        for q in range(1, 9 - p):
            run.check(classification_holds(p, q), f"shape classification at (p,q)=({p},{q})")
    return run.done()


def predicate_oracle(n: int, p: int, m: int) -> dict:
    """Same predicates through an independent arithmetic route."""
    half = Fraction(1, 2)
    return {
        "thm_intro4_bound": n < half * ((m - 1) // 2),
        "thm_intro1_bound": n < half * (p // 2),
        "thm_intro3_bound": n < half * ((p + 1) // 2),
    }


def criterion_10() -> CriterionResult:
    run = _Run(10, "Arthur exponents, infinitesimal characters and predicates")
    for m in range(3, 13):
        for r in range(0, 4):
            for q in range(1, m):
                p = m - q
                if p - 2 * r < 1:
                    continue
                levi = LeviDatum.standard(r, p, q)
                psi = ar.aj_parameter(levi)
                label = f"m={m} r={r} (p,q)=({p},{q})"
                run.check(psi.is_valid(), f"{label}: {psi.problems()}")
                exps = ar.exponents(psi)
                run.check(exps == ar.standard_exponents(m, r), f"{label}: exponents {exps}")
                run.check(max(exps) == levi.m0 - 2, f"{label}: max exponent")
                ic = ar.infinitesimal_character(psi)
                run.check(tuple(e.re for e in ic.entries) == ar.rho_so(m) and ic.is_regular(),
                          f"{label}: infinitesimal character {ic}")
                run.check(ar.sl2_lower_bound_met(psi, r, m), f"{label}: SL2 bound")
                if ar.levi_forces_non_tempered(m, r):
                    run.check(ar.highly_non_tempered(psi, m), f"{label}: not highly non-tempered")
    # equal-parity quadratic pairs collide
    for a in range(2, 9):
        for b in range(2, a + 1):
            if (a - b) % 2:
                continue
            psi = ar.ArchArthurParameter((ar.Factor(ar.CharDatum.quadratic(0), a),
                                          ar.Factor(ar.CharDatum.quadratic(1), b)))
            run.check(not ar.infinitesimal_character(psi).is_regular(), f"R{a} + R{b} regular")
    for m in range(3, 13):
        for psi in ar.enumerate_parameters(m):
            run.check(ar.ll_shape_holds(psi), f"m={m}: {psi}")
    for m in range(3, 13):
        for q in range(1, m):
            p = m - q
            for n in range(0, 4):
                rep = ar.predicates(n=n, p=p, m=m).values
                for key, val in predicate_oracle(n, p, m).items():
                    run.check(rep[key] == val, f"{key} n={n} p={p} m={m}")
        for a in range(1, m + 1):
            psi = ar.ArchArthurParameter((ar.Factor(ar.CharDatum.quadratic(0), a),), m)
            run.check(ar.highly_non_tempered(psi, m) == (Fraction(a) > Fraction(m - 1, 3)), f"3a > m-1 at a={a} m={m}")
    return run.done()


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
]


def run_all(selected: list[int] | None = None) -> list[CriterionResult]:
    _emitted.clear()
    out = []
    for i, fn in enumerate(CRITERIA, start=1):
        if selected is None or i in selected:
            out.append(fn())
    return out
