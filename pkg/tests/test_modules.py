"""Module actions, endomorphism generators and bimodule invariants."""

import cmath
import math
import random

import pytest

from nctorus.algebra import TWO_PI_I, BezoutPair, bezout, monomial, mul
from nctorus.errors import (
    DegenerateDenominator,
    DimensionMismatch,
    NotCoprime,
    SignAssumptionViolated,
    WrongSide,
)
from nctorus.gaussians import evaluate, grid_abs_max, scale, sub
from nctorus.modules import (
    LEFT,
    act_U1,
    act_U2,
    act_Z1,
    act_Z2,
    act_element,
    bimodule_profile,
    module_tag,
)

from conftest import coprime_pair, random_gaussian, random_theta, random_vector


def _rel(v, w):
    d = sub(v, w)
    return grid_abs_max(d) / (1 + max(grid_abs_max(v), grid_abs_max(w)))


# ------------------------------------------------------------ construction

def test_module_tag_validation():
    with pytest.raises(NotCoprime):
        module_tag(2, 4, 0.3)
    with pytest.raises(ValueError):
        module_tag(1, 0, 0.3)
    with pytest.raises(ValueError):
        module_tag(1, 2, 0.3, side="middle")
    with pytest.raises(DegenerateDenominator):
        module_tag(-1, 2, 0.5)
    with pytest.raises(DegenerateDenominator):
        module_tag(1, 2, 0.5, side=LEFT)


def test_denominator_by_side():
    assert module_tag(1, 2, 0.3).denominator == 1 + 2 * 0.3
    assert module_tag(1, 2, 0.3, side=LEFT).denominator == 1 - 2 * 0.3


def test_tag_rejects_foreign_pair():
    with pytest.raises(ValueError):
        module_tag(1, 2, 0.3, pair=bezout(1, 3))


# -------------------------------------------------------- pointwise action

def test_act_u1_translates_and_rotates():
    theta = 0.3
    tag = module_tag(1, 2, theta)
    rng = random.Random(1)
    v = random_vector(rng, 2)
    w = act_U1(v, tag)
    step = (1 + 2 * theta) / 2
    for x in (-0.9, 0.0, 0.7):
        for mu in range(2):
            want = evaluate(v, x - step, (mu - 1) % 2)
            assert abs(evaluate(w, x, mu) - want) < 1e-12


def test_act_u2_is_component_phase():
    theta = 0.3
    tag = module_tag(1, 2, theta)
    rng = random.Random(2)
    v = random_vector(rng, 2)
    w = act_U2(v, tag)
    for x in (-0.9, 0.0, 0.7):
        for mu in range(2):
            want = cmath.exp(TWO_PI_I * (x - mu / 2)) * evaluate(v, x, mu)
            assert abs(evaluate(w, x, mu) - want) < 1e-12


def test_act_z_pointwise():
    theta = 0.3
    tag = module_tag(1, 2, theta)
    a = tag.pair.a
    rng = random.Random(3)
    v = random_vector(rng, 2)
    w1 = act_Z1(v, tag)
    w2 = act_Z2(v, tag)
    D = tag.denominator
    for x in (-0.9, 0.0, 0.7):
        for mu in range(2):
            assert abs(evaluate(w1, x, mu) - evaluate(v, x - 0.5, (mu - a) % 2)) < 1e-12
            want = cmath.exp(TWO_PI_I * (x / D - mu / 2)) * evaluate(v, x, mu)
            assert abs(evaluate(w2, x, mu) - want) < 1e-12


def test_negative_power_inverts():
    tag = module_tag(2, 3, 0.41)
    rng = random.Random(4)
    v = random_vector(rng, 3)
    assert _rel(act_U1(act_U1(v, tag), tag, power=-1), v) < 1e-13
    assert _rel(act_U2(act_U2(v, tag, power=2), tag, power=-2), v) < 1e-13
    assert _rel(act_Z1(act_Z1(v, tag), tag, power=-1), v) < 1e-13


# ------------------------------------------------------- commutation phases

def test_generator_phase_random_labels():
    rng = random.Random(5)
    for _ in range(20):
        theta = random_theta(rng)
        n, m = coprime_pair(rng)
        if abs(n + m * theta) < 0.05:
            continue
        tag = module_tag(n, m, theta)
        v = random_gaussian(rng, m, with_poly=True)
        lhs = act_U2(act_U1(v, tag), tag)
        rhs = scale(cmath.exp(TWO_PI_I * theta), act_U1(act_U2(v, tag), tag))
        assert _rel(lhs, rhs) < 1e-12


def test_endomorphism_phase_random_labels():
    rng = random.Random(6)
    for _ in range(20):
        theta = random_theta(rng)
        n, m = coprime_pair(rng)
        if abs(n + m * theta) < 0.05:
            continue
        tag = module_tag(n, m, theta)
        tp = (tag.pair.b + tag.pair.a * theta) / tag.denominator
        v = random_gaussian(rng, m, with_poly=True)
        lhs = act_Z2(act_Z1(v, tag), tag)
        rhs = scale(cmath.exp(-TWO_PI_I * tp), act_Z1(act_Z2(v, tag), tag))
        assert _rel(lhs, rhs) < 1e-12


def test_endomorphisms_commute_with_action():
    rng = random.Random(7)
    tag = module_tag(1, 2, 0.37)
    v = random_vector(rng, 2)
    for ez in (act_Z1, act_Z2):
        for eu in (act_U1, act_U2):
            assert _rel(ez(eu(v, tag), tag), eu(ez(v, tag), tag)) < 1e-12


def test_z_requires_right_side():
    tag = module_tag(1, 2, 0.3, side=LEFT)
    v = random_gaussian(random.Random(8), 2)
    with pytest.raises(WrongSide):
        act_Z1(v, tag)
    with pytest.raises(WrongSide):
        act_Z2(v, tag)


def test_dimension_checked():
    tag = module_tag(1, 2, 0.3)
    v = random_gaussian(random.Random(9), 3)
    with pytest.raises(DimensionMismatch):
        act_U1(v, tag)


# ------------------------------------------------------------ module axiom

def test_right_module_axiom():
    theta = 0.31
    tag = module_tag(1, 2, theta)
    rng = random.Random(10)
    v = random_vector(rng, 2)
    f = monomial(1, 1, 0.8 - 0.3j)
    g = monomial(-1, 2, 0.5 + 0.1j)
    lhs = act_element(g, act_element(f, v, tag), tag)
    rhs = act_element(mul(f, g, theta), v, tag)
    assert _rel(lhs, rhs) < 1e-12


def test_left_module_axiom():
    theta = 0.31
    tag = module_tag(1, 3, theta, side=LEFT)
    rng = random.Random(11)
    v = random_vector(rng, 3)
    f = monomial(1, -1, 0.6 + 0.2j)
    g = monomial(2, 1, -0.4 + 0.9j)
    # left action: acting by g after f realizes f then g applied as g(f(v))
    lhs = act_element(f, act_element(g, v, tag), tag)
    rhs = act_element(mul(f, g, theta), v, tag)
    assert _rel(lhs, rhs) < 1e-12


def test_left_action_matches_mirrored_right():
    # the left picture with angle theta is the right picture with -theta
    theta = 0.27
    left = module_tag(1, 2, theta, side=LEFT)
    right = module_tag(1, 2, -theta)
    rng = random.Random(12)
    v = random_vector(rng, 2)
    assert act_U1(v, left) == act_U1(v, right)
    assert act_U2(v, left) == act_U2(v, right)


def test_act_element_weyl_phase():
    # a Weyl monomial with both exponents picks up the symmetrizing phase
    theta = 0.4
    tag = module_tag(1, 2, theta)
    rng = random.Random(13)
    v = random_vector(rng, 2)
    got = act_element(monomial(1, 1), v, tag)
    want = scale(cmath.exp(-1j * math.pi * theta),
                 act_U2(act_U1(v, tag), tag))
    assert _rel(got, want) < 1e-13


# ------------------------------------------------------- bimodule profile

def test_profile_oracle():
    prof = bimodule_profile(1, 2, 1, 3, 0.2)
    assert prof.M == 5
    assert prof.N_prime == 1
    assert prof.N_double_prime == -1
    assert abs(prof.theta_prime - 1 / 7) < 1e-15
    assert abs(prof.theta_double_prime - 0.5) < 1e-15


def test_profile_pair_override():
    # the canonical pair for (1, 1) gives N' = -1; (1, 0) selects +1
    prof = bimodule_profile(1, 1, 1, 1, 0.3,
                            pair_nm=BezoutPair(a=1, b=0, n=1, m=1))
    assert prof.N_prime == 1


def test_profile_requires_positive_denominators():
    with pytest.raises(SignAssumptionViolated):
        bimodule_profile(-1, 2, 1, 3, 0.2)
    with pytest.raises(SignAssumptionViolated):
        bimodule_profile(1, 2, -1, 3, 0.1)


def test_profile_json_shape():
    doc = bimodule_profile(1, 2, 1, 3, 0.2).to_json()
    assert set(doc) == {"theta_prime", "theta_double_prime", "M",
                        "N_prime", "N_double_prime"}
    assert doc["M"] == 5


def test_profile_coprimality_invariant():
    rng = random.Random(14)
    for _ in range(30):
        theta = random_theta(rng)
        n, m = coprime_pair(rng)
        k, l = coprime_pair(rng)
        if n + m * theta <= 0.05 or k - l * theta <= 0.05:
            continue
        prof = bimodule_profile(n, m, k, l, theta)
        assert math.gcd(prof.N_prime, prof.M) == 1
