from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from artifact import polyfock as pf
from artifact.gaussian import GaussianRational, I
from artifact.polyfock import Ambient, SparsePoly

AMB = Ambient(3, 1, 2)

coeffs = st.builds(GaussianRational, st.fractions(min_value=-9, max_value=9, max_denominator=5),
                   st.integers(-3, 3))


@st.composite
def polys(draw, amb=AMB, max_terms=4, max_exp=2):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(draw(st.lists(st.integers(0, max_exp), min_size=amb.nvars, max_size=amb.nvars)))
        terms[mono] = draw(coeffs)
    return SparsePoly(amb, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == SparsePoly.zero(AMB)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.integers(0, AMB.nvars - 1))
def test_leibniz(a, b, idx):
    assert pf.partial(a * b, idx) == pf.partial(a, idx) * b + a * pf.partial(b, idx)


@settings(max_examples=60, deadline=None)
@given(polys())
def test_text_and_json_round_trip(P):
    assert pf.parse_text(pf.to_text(P), AMB) == P
    assert pf.from_json(pf.to_json(P)) == P


@settings(max_examples=40, deadline=None)
@given(polys(), polys(), st.lists(coeffs, min_size=AMB.nvars, max_size=AMB.nvars))
def test_evaluation_is_a_homomorphism(a, b, values):
    vals = dict(enumerate(values))
    assert (a * b).evaluate(vals) == a.evaluate(vals) * b.evaluate(vals)
    assert (a + b).evaluate(vals) == a.evaluate(vals) + b.evaluate(vals)


def test_text_format():
    amb = Ambient(2, 0, 1)
    P = SparsePoly.var(amb, 1, 1) ** 2 - SparsePoly.var(amb, 2, 1) * (I * 2)
    assert pf.to_text(P) == "1*z[1,1]^2 + -2*i*z[2,1]"
    assert pf.to_text(SparsePoly.zero(amb)) == "0"


def test_signature_mismatch():
    with pytest.raises(ValueError):
        SparsePoly.var(Ambient(2, 0, 1), 1, 1) + SparsePoly.var(Ambient(3, 0, 1), 1, 1)


def test_laplacian():
    amb = Ambient(3, 0, 1)
    x, y, z = (SparsePoly.var(amb, a, 1) for a in (1, 2, 3))
    assert not pf.is_pluriharmonic(x * x)
    assert pf.is_pluriharmonic(x * x - y * y)
    assert pf.is_pluriharmonic(x * y * z)
    assert pf.laplacian(x * x + y * y + z * z, 1, 1) == SparsePoly.constant(amb, 6)


def test_laplacian_rejects_negative_variables():
    amb = Ambient(2, 1, 1)
    with pytest.raises(ValueError):
        pf.laplacian(SparsePoly.var(amb, 3, 1) ** 2, 1, 1)


@pytest.mark.parametrize("p,n", [(2, 1), (4, 2), (5, 2), (6, 3)])
def test_minors_pluriharmonic_and_normalized(p, n):
    amb = Ambient(p, 1, n)
    frame = [[GaussianRational(0)] * p for _ in range(n)]
    for j in range(n):
        a, b = j + 1, 2 * (p // 2) - j
        frame[j][a - 1] = GaussianRational(Fraction(1, 2))
        frame[j][b - 1] = GaussianRational(0, Fraction(1, 2))
    for k in range(1, n + 1):
        D = pf.minor_delta(k, amb)
        assert D.is_homogeneous(k)
        assert pf.is_pluriharmonic(D)
        assert D.evaluate_at(frame) == 1


def test_minor_is_gl_equivariant():
    amb = Ambient(4, 0, 2)
    D = pf.minor_delta(2, amb)
    g = [[2, 1], [I, 3]]
    assert pf.gl_act(g, D) == D * pf.matrix_det(g)


def test_gl_action_composes():
    amb = Ambient(3, 0, 2)
    P = SparsePoly.var(amb, 1, 1) * SparsePoly.var(amb, 2, 2) + SparsePoly.var(amb, 3, 1) ** 2
    g = [[1, 2], [0, 1]]
    h = [[3, 0], [1, 1]]
    # substituting Z -> Zh into P(Zg) gives P(Zhg)
    hg = [[sum(h[i][k] * g[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert pf.gl_act(h, pf.gl_act(g, P)) == pf.gl_act(hg, P)


def test_half_twist():
    amb = Ambient(2, 0, 1)
    P = SparsePoly.var(amb, 1, 1)
    tw = pf.gl_act([[4]], P, twist=Fraction(1, 2))
    assert isinstance(tw, pf.TwistedPoly)
    assert tw.with_root(2) == P * 8
    with pytest.raises(ValueError):
        tw.with_root(3)
    with pytest.raises(ValueError):
        pf.gl_act([[0]], P)


def test_sp_generators():
    amb = Ambient(2, 0, 1)
    one = SparsePoly.constant(amb, 1)
    up = pf.sp_generator(one, "raise", 0, 0)
    assert pf.sp_generator(up, "lower", 0, 0) == one * 2
    assert pf.sp_generator(one, "mixed", 0, 0) == one * Fraction(1, 2)
    with pytest.raises(ValueError):
        pf.sp_generator(one, "raise", 0, 5)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_harmonic_dim_n1(p):
    for ell in range(5):
        expected = comb(ell + p - 1, p - 1) - (comb(ell + p - 3, p - 1) if ell >= 2 else 0)
        assert pf.harmonic_space_dim(Ambient(p, 0, 1), ell) == expected


def test_nullspace_cap(monkeypatch):
    amb = Ambient(4, 0, 2)
    with pytest.raises(pf.CapExceeded):
        pf.harmonic_space_dim(amb, 3, cap=10)
    monkeypatch.setenv(pf.CAP_ENV, "5")
    with pytest.raises(pf.CapExceeded):
        pf.harmonic_space_dim(amb, 2)


def test_witt_and_t():
    amb = Ambient(5, 0, 1)
    assert pf.witt_w("w'", 1, 1, amb) == SparsePoly.var(amb, 1, 1) + SparsePoly.var(amb, 4, 1) * I
    assert pf.t_var(1, amb) == SparsePoly.var(amb, 5, 1)
    with pytest.raises(ValueError):
        pf.t_var(1, Ambient(4, 0, 1))
    with pytest.raises(ValueError):
        pf.witt_w("w'", 3, 1, amb)
