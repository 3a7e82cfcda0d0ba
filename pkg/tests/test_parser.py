import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from latticebv.cochains import Cochain
from latticebv.parser import ParseError, parse_cochain, parse_scalar
from latticebv.scalars import ALPHA, HBAR, Scalar

from strategies import cochains, scalars

d = Cochain.field
bd = Cochain.antifield


def test_grammar_examples():
    assert parse_cochain("delta[0]*delta[1]") == d(0) * d(1)
    got = parse_cochain("3*delta[0]*delta[1] - 2*hbar*bdelta[2]")
    assert got == d(0) * d(1) * 3 - bd(2) * (HBAR * 2)
    assert parse_cochain("bdelta[1]*bdelta[1]").is_zero


def test_scalars_and_powers():
    assert parse_scalar("alpha^-1") == Scalar.alpha(-1)
    assert parse_scalar("3/2*hbar^2") == HBAR * HBAR * Fraction(3, 2)
    assert parse_scalar("(alpha + alpha^-1)^2") == (ALPHA + Scalar.alpha(-1)) ** 2
    assert parse_cochain("delta[-3]^2") == d(-3) ** 2
    assert parse_cochain("bdelta[0]^2").is_zero


def test_unary_minus_and_whitespace():
    assert parse_cochain("-delta[0]") == -d(0)
    assert parse_cochain("--delta[0]") == d(0)
    assert parse_cochain("  3 * delta[ 2 ]  ") == d(2) * 3
    assert parse_cochain("delta[0] - -delta[1]") == d(0) + d(1)


def test_parentheses():
    got = parse_cochain("(delta[0] + delta[1]) * delta[0]")
    assert got == d(0) ** 2 + d(0) * d(1)
    assert parse_cochain("2*(1 + hbar)") == Cochain.scalar(HBAR * 2 + Scalar.rational(2))


def test_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_cochain("delta[0] + ")
    assert err.value.position == 11
    with pytest.raises(ParseError):
        parse_cochain("delta[]")
    with pytest.raises(ParseError):
        parse_cochain("gamma[0]")
    with pytest.raises(ParseError):
        parse_cochain("delta[0] delta[1]")  # missing '*'
    with pytest.raises(ParseError):
        parse_cochain("1/0")
    with pytest.raises(ParseError):
        parse_cochain("delta[0]^-1")
    with pytest.raises(ParseError):
        parse_cochain("hbar^-1")
    with pytest.raises(ParseError):
        parse_cochain("delta[0] @ delta[1]")
    with pytest.raises(ParseError):
        parse_scalar("delta[0]")


@given(cochains(max_poly_degree=4))
@settings(max_examples=150, deadline=None)
def test_round_trip_cochains(c):
    assert parse_cochain(str(c)) == c


@given(scalars())
@settings(max_examples=100)
def test_round_trip_scalars(s):
    assert parse_scalar(str(s)) == s


def test_round_trip_seeded_bulk():
    from strategies import seeded_cochain

    rng = random.Random(21)
    for _ in range(200):
        c = seeded_cochain(rng, min_site=-6, max_site=6, max_poly_degree=4)
        assert parse_cochain(str(c)) == c
