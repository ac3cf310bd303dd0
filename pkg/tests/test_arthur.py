from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artifact import arthur as ar
from artifact.arthur import ArchArthurParameter, CharDatum, Factor
from artifact.gaussian import GaussianRational
from artifact.vz import LeviDatum

Q0, Q1 = CharDatum.quadratic(0), CharDatum.quadratic(1)

chars = st.one_of(
    st.builds(CharDatum.quadratic, st.integers(0, 1)),
    st.builds(CharDatum.unitary, st.fractions(-3, 3, max_denominator=2), st.fractions(-2, 2, max_denominator=2))
    .filter(lambda c: c.w or c.t),
    st.builds(CharDatum.discrete, st.integers(2, 6)),
)


@given(chars)
def test_char_json_round_trip(c):
    assert CharDatum.from_json(c.to_json()) == c
    assert c.inverse().inverse() == c


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(chars, st.integers(1, 4)), min_size=1, max_size=4), st.integers(2, 12))
def test_parameter_json_round_trip(items, m):
    psi = ArchArthurParameter(tuple(Factor(c, a) for c, a in items), m)
    assert ArchArthurParameter.from_json(psi.to_json()) == psi
    assert psi.inverted().inverted() == psi


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(chars, st.integers(1, 4)), min_size=1, max_size=4))
def test_infchar_counts(items):
    psi = ArchArthurParameter(tuple(Factor(c, a) for c, a in items))
    vals = ar.eigenvalues(psi)
    assert len(vals) == psi.N
    ic = ar.infinitesimal_character(psi)
    assert psi.N // 2 <= len(ic.entries) <= psi.N
    assert all(e.re > 0 or (e.re == 0 and e.im >= 0) for e in ic.entries)


def test_char_problems():
    assert CharDatum.unitary(0, 0).problems()
    assert CharDatum.discrete(1).problems()
    assert not CharDatum.discrete(2).problems()
    with pytest.raises(ValueError):
        CharDatum("bogus")


def test_validation():
    assert ArchArthurParameter((Factor(Q0, 4),), 5).is_valid()
    assert ArchArthurParameter((Factor(Q0, 5), Factor(Q1, 1)), 6).is_valid()
    assert not ArchArthurParameter((Factor(Q0, 2),), 5).is_valid()  # N = 4 for m = 5
    assert not ArchArthurParameter((Factor(Q0, 3), Factor(Q1, 1)), 5).is_valid()  # parity
    assert not ArchArthurParameter((Factor(Q0, 1), Factor(Q0, 1)), 3).is_valid()  # repeat
    mu = CharDatum.unitary(2, 0)
    assert not ArchArthurParameter((Factor(mu, 1), Factor(Q0, 1)), 4).is_valid()  # not self-dual
    with pytest.raises(ar.ParameterError):
        ArchArthurParameter((Factor(Q0, 3),), 5).validate()


def test_discrete_values():
    f = Factor(CharDatum.discrete(3), 2)
    vals = ar.eigenvalues(ArchArthurParameter((f,)))
    assert sorted(v.re for v in vals) == [-2, -1, 1, 2]


def test_unitary_values():
    psi = ArchArthurParameter((Factor(CharDatum.unitary(1, Fraction(1, 2)), 1),))
    assert ar.eigenvalues(psi) == [GaussianRational(Fraction(1, 2), Fraction(1, 2))]


def test_trivial_parameter_is_rho():
    for m in range(3, 13):
        psi = ArchArthurParameter((Factor(Q0, ar.group_rank_N(m) - (m % 2 == 0)),) +
                                  ((Factor(Q1, 1),) if m % 2 == 0 else ()), m)
        assert psi.is_valid()
        ic = ar.infinitesimal_character(psi)
        assert tuple(e.re for e in ic.entries) == ar.rho_so(m)


@pytest.mark.parametrize("m", range(3, 13))
@pytest.mark.parametrize("r", range(0, 4))
def test_aj_standard_levi(m, r):
    for q in range(1, m):
        p = m - q
        if p - 2 * r < 1:
            continue
        psi = ar.aj_parameter(LeviDatum.standard(r, p, q))
        assert psi.is_valid() and ar.is_aj_shape(psi)
        assert ar.exponents(psi) == ar.standard_exponents(m, r)
        ic = ar.infinitesimal_character(psi)
        assert ic.is_regular() and tuple(e.re for e in ic.entries) == ar.rho_so(m)


def test_worked_example_exponents():
    psi = ar.aj_parameter(LeviDatum(((1, 0),), (3, 1)))
    assert [int(x) for x in ar.exponents(psi)] == [2, 0, 0, 0, 0, -2]
    assert [int(x) for x in ar.exponents(psi, reading="scaled")] == [2, 0, 0, 0, -2]
    assert str(ar.infinitesimal_character(psi)) == "(2, 1, 0)"


def test_aj_rejects_compact_so_block():
    with pytest.raises(ValueError):
        ar.aj_parameter(LeviDatum(((1, 0),), (3, 0)))
    with pytest.raises(ar.ParameterError):
        ar.exponents(ArchArthurParameter((Factor(CharDatum.discrete(2), 1),), 2))


@pytest.mark.parametrize("a,b", [(a, b) for a in range(2, 9) for b in range(2, a + 1) if (a - b) % 2 == 0])
def test_equal_parity_quadratics_are_singular(a, b):
    psi = ArchArthurParameter((Factor(Q0, a), Factor(Q1, b)))
    assert not ar.infinitesimal_character(psi).is_regular()


@pytest.mark.parametrize("m", range(3, 10))
def test_ll_shape(m):
    params = ar.enumerate_parameters(m)
    assert params and all(ar.ll_shape_holds(psi) for psi in params)


def test_ll_shape_fails_at_m2():
    psi = ArchArthurParameter((Factor(Q0, 1), Factor(Q1, 1)), 2)
    assert psi.is_valid() and not ar.ll_shape_holds(psi)


# hand-computed truth tables
INTRO4_TRUE = {1: lambda m: m >= 7, 2: lambda m: m >= 11, 3: lambda m: False}
INTRO1_TRUE = {1: lambda p: p >= 6, 2: lambda p: p >= 10, 3: lambda p: False}


@pytest.mark.parametrize("m", range(3, 13))
def test_predicate_tables(m):
    for n in (1, 2, 3):
        assert ar.thm_intro4_bound(n, m) == INTRO4_TRUE[n](m)
        for p in range(1, m):
            assert ar.thm_intro1_bound(n, p) == INTRO1_TRUE[n](p)
    for a in range(1, m + 1):
        psi = ArchArthurParameter((Factor(Q0, a),), m)
        assert ar.highly_non_tempered(psi) == (3 * a > m - 1)


def test_predicate_report():
    rep = ar.predicates(n=1, p=6, q=1).to_json()
    assert rep["thm_intro1_bound"] and rep["thm_intro4_bound"]
    rep = ar.predicates(n=1, p=5, q=2).to_json()
    assert not rep["thm_intro1_bound"]
    assert ar.levi_forces_non_tempered(10, 1) and not ar.levi_forces_non_tempered(10, 3)
