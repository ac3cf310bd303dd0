import pytest
from hypothesis import given, settings, strategies as st

from artifact import exterior as ex
from artifact.exterior import MultiVector
from artifact.gaussian import GaussianRational

AMB = (2, 2)
PAIRS = [(a, mu) for a in (1, 2) for mu in (3, 4)]


@st.composite
def forms(draw, degree=None):
    d = draw(st.integers(0, 3)) if degree is None else degree
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        key = tuple(draw(st.permutations(PAIRS))[:d])
        terms[key] = GaussianRational(draw(st.integers(-4, 4)), draw(st.integers(-2, 2)))
    return MultiVector(AMB, terms), d


@settings(max_examples=60, deadline=None)
@given(forms(), forms(), forms())
def test_wedge_associative(a, b, c):
    a, b, c = a[0], b[0], c[0]
    assert (a ^ b) ^ c == a ^ (b ^ c)


@settings(max_examples=60, deadline=None)
@given(forms(), forms())
def test_graded_commutative(a, b):
    (x, dx), (y, dy) = a, b
    assert x ^ y == (y ^ x) * ((-1) ** (dx * dy))


@settings(max_examples=40, deadline=None)
@given(forms(), forms(), st.sampled_from(ex.k_operators(AMB)))
def test_action_is_derivation(a, b, op):
    x, y = a[0], b[0]
    A, B = op
    assert ex.act(x ^ y, A, B) == (ex.act(x, A, B) ^ y) + (x ^ ex.act(y, A, B))


def test_one_forms_square_to_zero():
    w = MultiVector.basis(AMB, 1, 3) + MultiVector.basis(AMB, 2, 4) * 5
    assert (w ^ w).is_zero()


def test_bad_index():
    with pytest.raises(ValueError):
        MultiVector.basis(AMB, 3, 3)
    with pytest.raises(ValueError):
        MultiVector.basis(AMB, 1, 3) ^ MultiVector.basis((3, 1), 1, 4)


def test_json_round_trip():
    mv = ex.euler_form((2, 2))
    assert MultiVector.from_json((2, 2), mv.to_json()) == mv


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (2, 3), (3, 3), (1, 5)])
def test_euler_vanishes_for_odd_q(p, q):
    assert ex.euler_form((p, q)).is_zero()


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2)])
def test_euler_invariant(p, q):
    e = ex.euler_form((p, q))
    assert not e.is_zero()
    assert e.degree() == q
    assert ex.is_k_invariant(e)


def test_invariant_forms_degree_two():
    basis = ex.invariant_forms((2, 2), 2)
    assert len(basis) == 2
    e = ex.euler_form((2, 2))
    assert len(ex.span_basis(basis + [e])) == 2


def test_curvature_antisymmetric():
    assert ex.curvature_form(3, 4, (2, 2)) == -ex.curvature_form(4, 3, (2, 2))
    assert ex.curvature_form(3, 3, (2, 2)).is_zero()


def test_frame_duality():
    p = 5
    for j in range(1, 3):
        up = ex.u_prime(j, p)
        for k in range(1, 3):
            udp = ex.u_double_prime(k, p)
            pairing = sum((up[a] * udp[a] for a in up if a in udp), GaussianRational(0))
            assert pairing == (1 if j == k else 0)


@pytest.mark.parametrize("n,amb", [(1, (2, 1)), (1, (3, 2)), (2, (4, 1))])
def test_vz_vector(n, amb):
    e = ex.vz_vector(n, amb)
    assert e.degree() == n * amb[1]
    assert not e.is_zero()
    with pytest.raises(ValueError):
        ex.vz_vector(amb[0] // 2 + 1, amb)


def test_k_span_of_a_basis_vector():
    # so(2) x so(1) moves w[1,3] only to w[2,3]
    span = ex.k_span(MultiVector.basis((2, 1), 1, 3))
    assert len(span) == 2


def test_perm_sign():
    assert ex.perm_sign([1, 2, 3]) == 1
    assert ex.perm_sign([2, 1, 3]) == -1
    assert ex.perm_sign([3, 1, 2]) == 1
