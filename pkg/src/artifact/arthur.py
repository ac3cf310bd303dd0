"""Archimedean Arthur parameters for SO(p, q): infinitesimal characters,
exponents, Adams-Johnson shapes and the bound predicates."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .gaussian import GaussianRational
from .vz import LeviDatum


class ParameterError(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True, order=True)
class CharDatum:
    """quadratic(sign), unitary(w, t) or discrete(k).

    The attached values P are s for quadratic, s + w/2 + i t for unitary,
    and s +- k/2 for discrete, where s runs over the SL2 string.
    """
    kind: str
    sign: int = 0
    w: Fraction = Fraction(0)
    t: Fraction = Fraction(0)
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "w", Fraction(self.w))
        object.__setattr__(self, "t", Fraction(self.t))
        if self.kind not in ("quadratic", "unitary", "discrete"):
            raise ValueError(f"unknown character kind {self.kind!r}")

    @classmethod
    def quadratic(cls, sign: int = 0) -> "CharDatum":
        return cls("quadratic", sign=sign % 2)

    @classmethod
    def unitary(cls, w=0, t=0) -> "CharDatum":
        return cls("unitary", w=Fraction(w), t=Fraction(t))

    @classmethod
    def discrete(cls, k: int) -> "CharDatum":
        return cls("discrete", k=k)

    @property
    def d(self) -> int:
        return 2 if self.kind == "discrete" else 1

    def inverse(self) -> "CharDatum":
        if self.kind == "unitary":
            return CharDatum.unitary(-self.w, -self.t)
        return self

    def problems(self) -> list[str]:
        out = []
        if self.kind == "quadratic" and self.sign not in (0, 1):
            out.append(f"quadratic sign must be 0 or 1, got {self.sign}")
        if self.kind == "unitary" and self.w == 0 and self.t == 0:
            out.append("unitary character with w = t = 0 is quadratic; use quadratic(0)")
        if self.kind == "discrete" and self.k < 2:
            out.append(f"discrete series needs k >= 2, got {self.k}")
        return out

    def values(self, s: Fraction) -> list[GaussianRational]:
        if self.kind == "quadratic":
            return [GaussianRational(s)]
        if self.kind == "unitary":
            return [GaussianRational(s + self.w / 2, self.t)]
        half = Fraction(self.k, 2)
        return [GaussianRational(s + half), GaussianRational(s - half)]

    def to_json(self) -> dict:
        if self.kind == "quadratic":
            return {"kind": "quadratic", "sign": self.sign}
        if self.kind == "unitary":
            return {"kind": "unitary", "w": str(self.w), "t": str(self.t)}
        return {"kind": "discrete", "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "CharDatum":
        kind = data.get("kind")
        if kind == "quadratic":
            return cls.quadratic(int(data.get("sign", 0)))
        if kind == "unitary":
            return cls.unitary(Fraction(str(data.get("w", 0))), Fraction(str(data.get("t", 0))))
        if kind == "discrete":
            return cls.discrete(int(data["k"]))
        raise ValueError(f"unknown character kind {kind!r}")

    def __str__(self):
        if self.kind == "quadratic":
            return "sgn" if self.sign else "1"
        if self.kind == "unitary":
            return f"mu(w={self.w},t={self.t})"
        return f"D{self.k}"


@dataclass(frozen=True, order=True)
class Factor:
    char: CharDatum
    a: int

    @property
    def d(self) -> int:
        return self.char.d

    def inverse(self) -> "Factor":
        return Factor(self.char.inverse(), self.a)

    def sl2_string(self) -> list[Fraction]:
        return [Fraction(self.a - 1 - 2 * j, 2) for j in range(self.a)]

    def __str__(self):
        return f"{self.char}xR{self.a}"


def group_rank_N(m: int) -> int:
    """N = 2 floor(m/2), the size of the dual group's standard representation."""
    return 2 * (m // 2)


@dataclass(frozen=True)
class ArchArthurParameter:
    factors: tuple[Factor, ...]
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def N(self) -> int:
        return sum(f.d * f.a for f in self.factors)

    @property
    def parity(self) -> str | None:
        if self.m is None:
            return None
        return "odd" if self.m % 2 else "even"

    def structural_problems(self) -> list[str]:
        out = []
        for f in self.factors:
            if f.a < 1:
                out.append(f"SL2 dimension must be >= 1 in {f}")
            out.extend(f.char.problems())
        return out

    def problems(self) -> list[str]:
        out = self.structural_problems()
        counts = Counter(self.factors)
        dups = sorted(str(f) for f, c in counts.items() if c > 1)
        if dups:
            out.append(f"repeated factors: {', '.join(dups)}")
        if Counter(f.inverse() for f in self.factors) != counts:
            out.append("parameter is not stable under inverting the characters")
        if self.m is not None:
            if self.N != group_rank_N(self.m):
                out.append(f"total dimension {self.N} != {group_rank_N(self.m)} for m={self.m}")
            for f in self.factors:
                if f.char.kind == "quadratic" and (f.a - (self.m - 1)) % 2:
                    out.append(f"{f}: a must be congruent to m-1 mod 2")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "ArchArthurParameter":
        probs = self.problems()
        if probs:
            raise ParameterError(probs)
        return self

    def inverted(self) -> "ArchArthurParameter":
        return ArchArthurParameter(tuple(f.inverse() for f in self.factors), self.m)

    def same_multiset(self, other: "ArchArthurParameter") -> bool:
        return Counter(self.factors) == Counter(other.factors)

    def to_json(self) -> dict:
        out: dict = {"factors": [{"char": f.char.to_json(), "d": f.d, "a": f.a} for f in self.factors]}
        if self.m is not None:
            out["m"] = self.m
        return out

    @classmethod
    def from_json(cls, data) -> "ArchArthurParameter":
        if isinstance(data, str):
            data = json.loads(data)
        factors = []
        for item in data["factors"]:
            char = CharDatum.from_json(item["char"])
            if "d" in item and int(item["d"]) != char.d:
                raise ParameterError([f"d={item['d']} does not match character {char}"])
            factors.append(Factor(char, int(item["a"])))
        return cls(tuple(factors), data.get("m"))

    def __str__(self):
        return " + ".join(map(str, self.factors)) or "0"


# infinitesimal character

def _positive(z: GaussianRational) -> GaussianRational:
    if z.re > 0 or (z.re == 0 and z.im >= 0):
        return z
    return -z


@dataclass(frozen=True)
class InfChar:
    entries: tuple[GaussianRational, ...]

    def is_regular(self) -> bool:
        return len(set(self.entries)) == len(self.entries)

    def to_json(self) -> list:
        return [str(e) for e in self.entries]

    def __str__(self):
        return "(" + ", ".join(map(str, self.entries)) + ")"


def eigenvalues(psi: ArchArthurParameter) -> list[GaussianRational]:
    """All N values P attached to the parameter."""
    out = []
    for f in psi.factors:
        for s in f.sl2_string():
            out.extend(f.char.values(s))
    return out


def canonical_infchar(values: Iterable[GaussianRational]) -> InfChar:
    """Fold +-P together, halve the counts (rounding up) and sort descending."""
    counts = Counter(_positive(GaussianRational.coerce(v)) for v in values)
    entries = []
    for val, c in counts.items():
        entries.extend([val] * ((c + 1) // 2))
    entries.sort(key=lambda z: (z.re, z.im), reverse=True)
    return InfChar(tuple(entries))


def infinitesimal_character(psi: ArchArthurParameter) -> InfChar:
    probs = psi.structural_problems()
    if probs:
        raise ParameterError(probs)
    return canonical_infchar(eigenvalues(psi))


def is_regular(ic: InfChar | Sequence) -> bool:
    if isinstance(ic, InfChar):
        return ic.is_regular()
    vals = [GaussianRational.coerce(x) for x in ic]
    return len(set(vals)) == len(vals)


def rho_so(m: int) -> tuple[Fraction, ...]:
    """rho of SO(m): m/2 - i for i = 1..floor(m/2)."""
    return tuple(Fraction(m, 2) - i for i in range(1, m // 2 + 1))


# Adams-Johnson parameters

def aj_parameter(levi: LeviDatum, chars: Sequence[CharDatum] | None = None,
                 so_chars: tuple[CharDatum, CharDatum] | None = None) -> ArchArthurParameter:
    """Parameter attached to U(p_1,q_1) x ... x SO(p0,q0).

    Each unitary block j gives mu_j x R_{m_j} and its inverse; the SO block
    gives chi x R_{m0-1}, plus chi' x R_1 when m0 is even. By default mu_j
    is chosen so the infinitesimal character is rho.
    """
    p0, q0 = levi.so_block
    if p0 * q0 == 0:
        raise ValueError(f"SO block {levi.so_block} must have p0*q0 != 0")
    m = levi.m
    sizes = levi.block_sizes()
    if chars is None:
        rho = rho_so(m)
        chars = []
        pos = 0
        for mj in sizes:
            run = rho[pos:pos + mj]
            pos += mj
            centre = sum(run) / mj
            chars.append(CharDatum.unitary(2 * centre, 0))
    if len(chars) != len(sizes):
        raise ValueError(f"need {len(sizes)} unitary characters, got {len(chars)}")
    chi, chi2 = so_chars or (CharDatum.quadratic(0), CharDatum.quadratic(1))
    factors = []
    for mu, mj in zip(chars, sizes):
        factors.append(Factor(mu, mj))
        factors.append(Factor(mu.inverse(), mj))
    m0 = levi.m0
    factors.append(Factor(chi, m0 - 1))
    if m0 % 2 == 0:
        factors.append(Factor(chi2, 1))
    return ArchArthurParameter(tuple(factors), m)


def is_aj_shape(psi: ArchArthurParameter) -> bool:
    if any(f.char.kind == "discrete" for f in psi.factors):
        return False
    quads = [f for f in psi.factors if f.char.kind == "quadratic"]
    if len(quads) > 2:
        return False
    if len(quads) == 2 and min(f.a for f in quads) != 1:
        return False
    units = Counter(f for f in psi.factors if f.char.kind == "unitary")
    return all(units[f.inverse()] == c for f, c in units.items())


def _string(a: int) -> list[int]:
    return [a - 1 - 2 * j for j in range(a)]


def exponents(psi: ArchArthurParameter, reading: str = "multiplicity") -> list[Fraction]:
    """Exp as a descending list.

    Each factor contributes d copies of {a-1, a-3, ..., 1-a}, so a unitary
    pair contributes its string twice. reading="scaled" instead contributes
    each unitary pair once with every entry doubled.
    """
    if reading not in ("multiplicity", "scaled"):
        raise ValueError(f"unknown reading {reading!r}")
    probs = psi.structural_problems()
    if probs:
        raise ParameterError(probs)
    if not is_aj_shape(psi):
        raise ParameterError(["parameter is not of Adams-Johnson shape"])
    out: list[Fraction] = []
    seen_pairs: Counter = Counter()
    for f in psi.factors:
        if f.char.kind == "unitary" and reading == "scaled":
            key = frozenset([f, f.inverse()])
            seen_pairs[key] += 1
            if seen_pairs[key] % 2 == 1:
                out.extend(Fraction(2 * x) for x in _string(f.a))
            continue
        for _ in range(f.d):
            out.extend(Fraction(x) for x in _string(f.a))
    return sorted(out, reverse=True)


def standard_exponents(m: int, r: int) -> list[Fraction]:
    """{m-2r-2, m-2r-4, ..., 2r+2-m} padded with zeros to N entries."""
    top = m - 2 * r - 2
    core = [Fraction(x) for x in range(top, -top - 1, -2)] if top >= 0 else []
    zeros = group_rank_N(m) - len(core)
    return sorted(core + [Fraction(0)] * zeros, reverse=True)


# predicates

def highly_non_tempered(psi: ArchArthurParameter, m: int | None = None) -> bool:
    m = psi.m if m is None else m
    if m is None:
        raise ValueError("m is required")
    return any(f.char.kind == "quadratic" and 3 * f.a > m - 1 for f in psi.factors)


def thm_intro4_bound(n: int, m: int) -> bool:
    return 2 * n < m - m // 2 - 1


def thm_intro1_bound(n: int, p: int) -> bool:
    return 2 * n < p // 2


def thm_intro3_bound(n: int, p: int) -> bool:
    return 2 * n < (p + 1) // 2


def sl2_lower_bound_met(psi: ArchArthurParameter, r: int, m: int | None = None) -> bool:
    m = psi.m if m is None else m
    return any(f.a >= m - 2 * r - 1 for f in psi.factors)


def rank_condition_1(n: int, m: int) -> bool:
    """For even m: n < floor(m/2) - 1."""
    return m % 2 == 1 or n < m // 2 - 1


def rank_condition_2(n: int, m: int) -> bool:
    """For odd m: n < floor(m/2)."""
    return m % 2 == 0 or n < m // 2


def rank_condition_3(n: int, p: int) -> bool:
    return n <= p // 2


def conjectural_range(n: int, p: int, m: int) -> bool:
    return p > 2 * n and m - 1 > 3 * n


def levi_forces_non_tempered(m: int, r: int) -> bool:
    """m - 2r - 1 > floor(m/2), the sufficient condition for the standard Levi."""
    return m - 2 * r - 1 > m // 2


@dataclass
class PredicateReport:
    values: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return dict(sorted(self.values.items()))


def predicates(psi: ArchArthurParameter | None = None, *, n: int | None = None, p: int | None = None,
               q: int | None = None, r: int | None = None, m: int | None = None) -> PredicateReport:
    if m is None:
        if psi is not None and psi.m is not None:
            m = psi.m
        elif p is not None and q is not None:
            m = p + q
    if p is None and m is not None and q is not None:
        p = m - q
    out: dict = {}
    if psi is not None and m is not None:
        out["highly_non_tempered"] = highly_non_tempered(psi, m)
        if r is not None:
            out["sl2_lower_bound_met"] = sl2_lower_bound_met(psi, r, m)
    if n is not None and m is not None:
        out["thm_intro4_bound"] = thm_intro4_bound(n, m)
        out["rank_condition_1"] = rank_condition_1(n, m)
        out["rank_condition_2"] = rank_condition_2(n, m)
    if n is not None and p is not None:
        out["thm_intro1_bound"] = thm_intro1_bound(n, p)
        out["thm_intro3_bound"] = thm_intro3_bound(n, p)
        out["rank_condition_3"] = rank_condition_3(n, p)
        if m is not None:
            out["conjectural_range"] = conjectural_range(n, p, m)
    if r is not None and m is not None:
        out["levi_forces_non_tempered"] = levi_forces_non_tempered(m, r)
    return PredicateReport(out)


# exhaustive enumeration for the regularity argument

def _quadratic_strings(m: int):
    return [a for a in range(1, group_rank_N(m) + 1) if (a - (m - 1)) % 2 == 0]


def enumerate_parameters(m: int, weights: Sequence[Fraction] = (Fraction(1), Fraction(2)),
                         ks: Sequence[int] = (2, 3)) -> list[ArchArthurParameter]:
    """Valid parameters for SO(m) built from quadratic factors, unitary pairs
    with w in +-weights (t = 0) or t = 1/2 (w = 0), and discrete factors."""
    N = group_rank_N(m)
    atoms: list[tuple[Factor, ...]] = []
    for sign in (0, 1):
        for a in _quadratic_strings(m):
            atoms.append((Factor(CharDatum.quadratic(sign), a),))
    chars = [CharDatum.unitary(w, 0) for w in weights] + [CharDatum.unitary(0, Fraction(1, 2))]
    for mu in chars:
        for a in range(1, N // 2 + 1):
            atoms.append((Factor(mu, a), Factor(mu.inverse(), a)))
    for k in ks:
        for a in range(1, N // 2 + 1):
            atoms.append((Factor(CharDatum.discrete(k), a),))
    atoms.sort()
    out = []

    def rec(start: int, chosen: list[tuple[Factor, ...]], size: int):
        if size == N:
            flat = tuple(f for atom in chosen for f in atom)
            psi = ArchArthurParameter(flat, m)
            if psi.is_valid():
                out.append(psi)
            return
        for idx in range(start, len(atoms)):
            atom = atoms[idx]
            w = sum(f.d * f.a for f in atom)
            if size + w <= N:
                chosen.append(atom)
                rec(idx + 1, chosen, size + w)
                chosen.pop()

    rec(0, [], 0)
    return out


def ll_shape_holds(psi: ArchArthurParameter) -> bool:
    """If a quadratic factor has 3a > m-1 and the infinitesimal character is
    regular, every other factor has smaller SL2 dimension."""
    m = psi.m
    big = [f for f in psi.factors if f.char.kind == "quadratic" and 3 * f.a > m - 1]
    if not big or not infinitesimal_character(psi).is_regular():
        return True
    return all(all(g.a < f.a for g in psi.factors if g != f) for f in big)
