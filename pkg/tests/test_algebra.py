"""Presentation of the deformed torus algebra and its arithmetic."""

import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nctorus.algebra import (
    BezoutPair,
    add,
    bezout,
    coeff,
    derivation,
    involution,
    monomial,
    mul,
    norm_max,
    scale,
    sub,
    theta_double_prime,
    theta_prime,
    trace,
    unit,
)
from nctorus.errors import DegenerateDenominator, NotCoprime

from conftest import random_element


def _close(a, b, tol=1e-12):
    return abs(a - b) <= tol * (1 + max(abs(a), abs(b)))


def _elem_close(f, g, tol=1e-12):
    d = sub(f, g)
    return norm_max(d) <= tol * (1 + max(norm_max(f), norm_max(g)))


# ---------------------------------------------------------------- generators

def test_generator_product_phase():
    theta = 0.3
    u1 = monomial(1, 0)
    u2 = monomial(0, 1)
    p = mul(u1, u2, theta)
    assert set(p.coeffs) == {(1, 1)}
    assert _close(coeff(p, 1, 1), cmath.exp(1j * math.pi * theta))


def test_weyl_commutation():
    # U1 U2 = exp(2 pi i theta) U2 U1
    for theta in (0.2, math.sqrt(2) - 1, 0.5):
        u1 = monomial(1, 0)
        u2 = monomial(0, 1)
        lhs = mul(u1, u2, theta)
        rhs = scale(cmath.exp(2j * math.pi * theta), mul(u2, u1, theta))
        assert _elem_close(lhs, rhs)


def test_unit_is_neutral():
    rng = random.Random(7)
    f = random_element(rng)
    assert _elem_close(mul(unit(), f, 0.37), f)
    assert _elem_close(mul(f, unit(), 0.37), f)


def test_monomial_inverse():
    theta = 0.61
    v = (2, -3)
    p = mul(monomial(*v), monomial(-v[0], -v[1]), theta)
    assert _elem_close(p, unit())


# ---------------------------------------------------------------- ring laws

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.floats(0.01, 0.99))
def test_associativity(seed, theta):
    rng = random.Random(seed)
    f, g, h = (random_element(rng) for _ in range(3))
    assert _elem_close(mul(mul(f, g, theta), h, theta),
                       mul(f, mul(g, h, theta), theta))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.floats(0.01, 0.99))
def test_involution_antihomomorphism(seed, theta):
    rng = random.Random(seed)
    f, g = random_element(rng), random_element(rng)
    assert _elem_close(involution(mul(f, g, theta)),
                       mul(involution(g), involution(f), theta))


def test_involution_involutive():
    rng = random.Random(11)
    f = random_element(rng)
    assert _elem_close(involution(involution(f)), f)


def test_distributivity():
    rng = random.Random(13)
    f, g, h = (random_element(rng) for _ in range(3))
    theta = 0.29
    assert _elem_close(mul(add(f, g), h, theta),
                       add(mul(f, h, theta), mul(g, h, theta)))


# ------------------------------------------------------------------- trace

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.floats(0.01, 0.99))
def test_trace_cyclic(seed, theta):
    rng = random.Random(seed)
    f, g = random_element(rng), random_element(rng)
    assert _close(trace(mul(f, g, theta)), trace(mul(g, f, theta)))


def test_trace_positive_matches_coefficient_sum():
    rng = random.Random(17)
    for _ in range(25):
        theta = rng.uniform(0.05, 0.95)
        f = random_element(rng)
        t = trace(mul(f, involution(f), theta))
        expected = sum(abs(c) ** 2 for c in f.coeffs.values())
        assert t.real >= 0
        assert abs(t.imag) <= 1e-12 * (1 + t.real)
        assert _close(t, expected)


def test_trace_of_nonconstant_monomial_vanishes():
    assert trace(monomial(2, -1)) == 0
    assert trace(monomial(0, 0, 3.5)) == 3.5


# -------------------------------------------------------------- derivations

def test_derivation_on_monomial():
    f = monomial(2, -3)
    d1 = derivation(f, 1)
    d2 = derivation(f, 2)
    assert _close(coeff(d1, 2, -3), 2j * math.pi * 2)
    assert _close(coeff(d2, 2, -3), 2j * math.pi * (-3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.floats(0.01, 0.99), st.sampled_from([1, 2]))
def test_derivation_leibniz(seed, theta, axis):
    rng = random.Random(seed)
    f, g = random_element(rng), random_element(rng)
    lhs = derivation(mul(f, g, theta), axis)
    rhs = add(mul(derivation(f, axis), g, theta),
              mul(f, derivation(g, axis), theta))
    assert _elem_close(lhs, rhs)


def test_derivations_commute():
    rng = random.Random(19)
    f = random_element(rng)
    assert _elem_close(derivation(derivation(f, 1), 2),
                       derivation(derivation(f, 2), 1))


def test_derivation_respects_star():
    # delta(f*) = (delta f)*
    rng = random.Random(23)
    f = random_element(rng)
    for axis in (1, 2):
        assert _elem_close(derivation(involution(f), axis),
                           involution(derivation(f, axis)))


def test_trace_kills_derivations():
    rng = random.Random(29)
    f = random_element(rng)
    assert abs(trace(derivation(f, 1))) == 0
    assert abs(trace(derivation(f, 2))) == 0


def test_derivation_bad_axis():
    with pytest.raises(ValueError):
        derivation(unit(), 3)


# ------------------------------------------------------------------ Bezout

def test_bezout_canonical_values():
    cases = {
        (1, 2): (1, 0),
        (1, 3): (1, 0),
        (2, 3): (2, 1),
        (3, 2): (1, 1),
        (1, 1): (0, -1),
        (2, 1): (0, -1),
        (0, 1): (0, -1),
        (1, 0): (1, 0),
        (-1, 0): (-1, 0),
        (-1, 2): (1, -1),
    }
    for (n, m), (a, b) in cases.items():
        pair = bezout(n, m)
        assert (pair.a, pair.b) == (a, b)
        assert pair.a * n - pair.b * m == 1


def test_bezout_normalization_range():
    rng = random.Random(31)
    for _ in range(50):
        m = rng.randint(1, 40)
        n = rng.randint(-40, 40)
        if math.gcd(n, m) != 1:
            continue
        pair = bezout(n, m)
        assert 0 <= pair.a < m
        assert pair.a * n - pair.b * m == 1


def test_bezout_rejects_common_factor():
    with pytest.raises(NotCoprime):
        bezout(2, 4)
    with pytest.raises(NotCoprime):
        bezout(0, 0)


def test_bezout_pair_validates():
    with pytest.raises(ValueError):
        BezoutPair(a=1, b=1, n=1, m=2)


# --------------------------------------------------- induced angle formulas

def test_theta_prime_oracle():
    # (n, m) = (1, 2) at theta = sqrt(2) - 1 gives theta/(1 + 2 theta)
    theta = math.sqrt(2) - 1
    value = theta_prime(theta, bezout(1, 2))
    assert abs(value - 0.22654091966098644) < 1e-15


def test_theta_prime_sl2_shift():
    # Replacing (a, b) by (a + m, b + n) shifts the angle by exactly 1.
    theta = 0.37
    base = bezout(2, 3)
    shifted = BezoutPair(a=base.a + 3, b=base.b + 2, n=2, m=3)
    assert abs(theta_prime(theta, shifted) - theta_prime(theta, base) - 1) < 1e-14


def test_theta_double_prime_oracle():
    value = theta_double_prime(0.2, bezout(1, 3))
    assert abs(value - 0.5) < 1e-15


def test_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        theta_prime(-0.5, bezout(1, 2))
    with pytest.raises(DegenerateDenominator):
        theta_double_prime(0.5, bezout(1, 2))
