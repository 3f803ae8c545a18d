import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebident.multipoly import MultiPoly

P = MultiPoly.var("p")
A = MultiPoly.var("a")
B = MultiPoly.var("b")


def test_add_cancellation():
    assert (P * P + 1) + MultiPoly.const(-1) == P * P


def test_add_identity():
    f = A * B + 3 * P - 7
    assert MultiPoly.zero() + f == f
    assert f + 0 == f


def test_add_collects_terms():
    assert (A + B) + (A - B) == 2 * A


def test_mul_difference_of_squares():
    assert (P + 1) * (P - 1) == P * P - 1


def test_mul_zero_absorbs():
    f = A * A - 4 * B + 1
    assert f * MultiPoly.zero() == MultiPoly.zero()
    assert 0 * f == 0


def test_mul_binomial_square():
    f = A + B * P
    assert f * f == A * A + 2 * A * B * P + B * B * P * P


def test_pow_examples():
    assert P**3 == P * P * P
    assert (A * B - 5) ** 0 == 1
    assert MultiPoly.zero() ** 0 == 1  # empty-product convention
    assert (P - 1) ** 2 == P * P - 2 * P + 1


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        P ** (-1)


def test_substitute_elementary_to_letters():
    e1, e2 = MultiPoly.var("e1"), MultiPoly.var("e2")
    x1, x2 = MultiPoly.var("x1"), MultiPoly.var("x2")
    f = e1 * e1 - 2 * e2
    assert f.substitute({"e1": x1 + x2, "e2": x1 * x2}) == x1 * x1 + x2 * x2


def test_substitute_identity_and_constant():
    f = P * P
    assert f.substitute({"p": P}) == f
    assert (P * P - 2).substitute({"p": 2}) == 2


def test_substitute_unbound_variables_persist():
    f = A * P + B
    assert f.substitute({"a": 3}) == 3 * P + B


def test_eq_examples():
    assert P * P - 1 == (P + 1) * (P - 1)
    assert P == P + 0 * A
    assert P != A


def test_serialize_examples():
    assert (P * P - 2).serialize() == "+1*p^2 -2"
    assert MultiPoly.zero().serialize() == "0"
    omega = A * A + 4 * B * B - B * B * P * P
    assert omega.serialize() == "-1*b^2*p^2 +1*a^2 +4*b^2"
    assert (2 * P).serialize() == "+2*p"


def test_parse_round_trips_examples():
    for text in ("+1*p^2 -2", "0", "-1*b^2*p^2 +1*a^2 +4*b^2", "+2*p"):
        assert MultiPoly.parse(text).serialize() == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        MultiPoly.parse("p^2 - 2")
    with pytest.raises(ValueError):
        MultiPoly.parse("")


def test_degree():
    assert MultiPoly.zero().degree() == -1
    assert (A * A * P + B).degree() == 3
    assert (A * A * P + B).degree("a") == 2
    assert (A * A * P + B).degree("missing") == 0


def test_rejects_non_integer_coefficients():
    with pytest.raises(ValueError):
        MultiPoly([(1.5, {"p": 1})])


# Randomized corpus: <= 4 variables, small exponents, coefficients in [-9, 9].
_VARS = ("a", "b", "p", "x1")
_monomials = st.dictionaries(st.sampled_from(_VARS), st.integers(0, 3), max_size=4)
_polys = st.lists(st.tuples(st.integers(-9, 9), _monomials), max_size=5).map(MultiPoly)


@given(f=_polys, g=_polys, h=_polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f + 0 == f
    assert f * 1 == f
    assert f + (-f) == 0


@given(f=_polys, e=st.integers(0, 6))
def test_pow_matches_repeated_mul(f, e):
    expected = MultiPoly.const(1)
    for _ in range(e):
        expected = expected * f
    assert f**e == expected


@given(f=_polys, g=_polys)
@settings(max_examples=60)
def test_substitution_is_ring_morphism(f, g):
    bindings = {"a": P + 1, "b": MultiPoly.const(2), "x1": A * P}
    assert (f + g).substitute(bindings) == f.substitute(bindings) + g.substitute(bindings)
    assert (f * g).substitute(bindings) == f.substitute(bindings) * g.substitute(bindings)


@given(f=_polys)
def test_serialize_round_trips(f):
    assert MultiPoly.parse(f.serialize()) == f
