"""Basic projective modules over the two-dimensional noncommutative torus.

A right module with coprime label (n, m), m >= 1, acts on sections of
R x Z_m through

    (f U1)(x, mu) = f(x - D/m, mu - 1),          D = n + m*theta,
    (f U2)(x, mu) = exp(2*pi*i*(x - mu*n/m)) f(x, mu),

and carries commuting endomorphism generators

    (Z1 f)(x, mu) = f(x - 1/m, mu - a),
    (Z2 f)(x, mu) = exp(2*pi*i*(x/D - mu/m)) f(x, mu),

with (a, b) a Bezout pair for (n, m).  A left module with label (k, l) is
the same picture with theta replaced by -theta, so D = k - l*theta.
Operators compose in module order: acting by f and then by g realizes the
product f*g, hence for right modules U2 after U1 picks up exp(2*pi*i*theta)
relative to U1 after U2.

The endomorphism generators satisfy Z2 Z1 = exp(2*pi*i*theta') Z1 Z2 with
theta' = (b + a*theta)/(n + m*theta), and commute with both U actions, so
each basic module is a bimodule.  :func:`bimodule_profile` packages the
induced invariants of the product label (n, m) x (k, l).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import gaussians as g
from .algebra import (
    BezoutPair,
    TorusElement,
    TWO_PI_I,
    bezout,
    theta_double_prime,
    theta_prime,
)
from .errors import (
    DegenerateDenominator,
    DimensionMismatch,
    NotCoprime,
    SignAssumptionViolated,
    WrongSide,
)

RIGHT = "right"
LEFT = "left"


@dataclass(frozen=True)
class ModuleTag:
    """Label (n, m, theta, side) of a basic module, with its Bezout pair.

    Build through :func:`module_tag`, which validates coprimality, m >= 1,
    and a nonvanishing denominator n + m*theta (resp. n - m*theta).
    """

    n: int
    m: int
    theta: float
    side: str
    pair: BezoutPair

    @property
    def denominator(self) -> float:
        if self.side == RIGHT:
            return self.n + self.m * self.theta
        return self.n - self.m * self.theta


def module_tag(
    n: int,
    m: int,
    theta: float,
    side: str = RIGHT,
    pair: BezoutPair | None = None,
) -> ModuleTag:
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be {RIGHT!r} or {LEFT!r}, got {side!r}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if math.gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) != 1")
    if pair is None:
        pair = bezout(n, m)
    elif (pair.n, pair.m) != (n, m):
        raise ValueError(f"Bezout pair {pair} does not belong to label ({n}, {m})")
    tag = ModuleTag(n, m, theta, side, pair)
    if tag.denominator == 0:
        raise DegenerateDenominator(
            f"denominator vanishes for ({n}, {m}) at theta = {theta}"
        )
    return tag


def _check_dim(v: g.PolyGaussVector, tag: ModuleTag) -> None:
    if v.m != tag.m:
        raise DimensionMismatch(f"vector on Z_{v.m}, module on Z_{tag.m}")


def act_U1(v: g.PolyGaussVector, tag: ModuleTag, power: int = 1) -> g.PolyGaussVector:
    """Action of U1**power: translate by power*D/m and rotate components."""
    _check_dim(v, tag)
    return g.roll(g.shift(v, power * tag.denominator / tag.m), power)


def act_U2(v: g.PolyGaussVector, tag: ModuleTag, power: int = 1) -> g.PolyGaussVector:
    """Action of U2**power: the phase exp(2*pi*i*power*(x - mu*n/m))."""
    _check_dim(v, tag)
    factors = [
        cmath.exp(-TWO_PI_I * power * mu * tag.n / tag.m) for mu in range(tag.m)
    ]
    return g.component_scale(g.mul_exp(v, TWO_PI_I * power), factors)


def act_Z1(v: g.PolyGaussVector, tag: ModuleTag, power: int = 1) -> g.PolyGaussVector:
    """Endomorphism Z1**power: translate by power/m, rotate by power*a."""
    if tag.side != RIGHT:
        raise WrongSide("endomorphism generators act on right modules")
    _check_dim(v, tag)
    return g.roll(g.shift(v, power / tag.m), power * tag.pair.a)


def act_Z2(v: g.PolyGaussVector, tag: ModuleTag, power: int = 1) -> g.PolyGaussVector:
    """Endomorphism Z2**power: the phase exp(2*pi*i*power*(x/D - mu/m))."""
    if tag.side != RIGHT:
        raise WrongSide("endomorphism generators act on right modules")
    _check_dim(v, tag)
    factors = [cmath.exp(-TWO_PI_I * power * mu / tag.m) for mu in range(tag.m)]
    return g.component_scale(g.mul_exp(v, TWO_PI_I * power / tag.denominator), factors)


def act_element(
    f: TorusElement, v: g.PolyGaussVector, tag: ModuleTag
) -> g.PolyGaussVector:
    """Action of a full algebra element, Weyl monomial by Weyl monomial.

    The Weyl word U_(n1,n2) = exp(-pi*i*n1*n2*theta) U1**n1 U2**n2 acts,
    in module order, as U1**n1 first on the right side and U2**n2 first
    on the left side; that choice is what makes
    act_element(g, act_element(f, v)) == act_element(f*g, v) for right
    modules and the reversed composition law for left ones.
    """
    _check_dim(v, tag)
    acc = g.zero(tag.m)
    for (n1, n2), coef in f.coeffs.items():
        if tag.side == RIGHT:
            w = act_U2(act_U1(v, tag, n1), tag, n2)
        else:
            w = act_U1(act_U2(v, tag, n2), tag, n1)
        weyl = cmath.exp(-1j * math.pi * tag.theta * n1 * n2)
        acc = g.axpy(coef * weyl, w, acc)
    return acc


@dataclass(frozen=True)
class BimoduleProfile:
    """Invariants of the product of labels (n, m) and (k, l) at a given theta.

    M = n*l + m*k is the component count of the product module;
    N_prime = a*k + b*l and N_double_prime = -(c*n + d*m) are the induced
    endomorphism labels, and gcd(N_prime, M) = 1 always holds.
    """

    theta_prime: float
    theta_double_prime: float
    M: int
    N_prime: int
    N_double_prime: int

    def to_json(self) -> dict:
        return {
            "theta_prime": self.theta_prime,
            "theta_double_prime": self.theta_double_prime,
            "M": self.M,
            "N_prime": self.N_prime,
            "N_double_prime": self.N_double_prime,
        }


def bimodule_profile(
    n: int,
    m: int,
    k: int,
    l: int,
    theta: float,
    pair_nm: BezoutPair | None = None,
    pair_kl: BezoutPair | None = None,
) -> BimoduleProfile:
    """Profile of the (n, m) x (k, l) product; requires both denominators > 0."""
    pnm = pair_nm if pair_nm is not None else bezout(n, m)
    pkl = pair_kl if pair_kl is not None else bezout(k, l)
    if (pnm.n, pnm.m) != (n, m) or (pkl.n, pkl.m) != (k, l):
        raise ValueError("Bezout pairs do not belong to the supplied labels")
    if n + m * theta <= 0:
        raise SignAssumptionViolated(f"n + m*theta <= 0 for ({n}, {m}) at {theta}")
    if k - l * theta <= 0:
        raise SignAssumptionViolated(f"k - l*theta <= 0 for ({k}, {l}) at {theta}")
    big_m = n * l + m * k
    n_prime = pnm.a * k + pnm.b * l
    n_dbl = -(pkl.a * n + pkl.b * m)
    # gcd(N', M) = 1 because (a, b) extends to SL2 alongside (l, -k)-type columns.
    assert math.gcd(n_prime, big_m) == 1
    return BimoduleProfile(
        theta_prime=theta_prime(theta, pnm),
        theta_double_prime=theta_double_prime(theta, pkl),
        M=big_m,
        N_prime=n_prime,
        N_double_prime=n_dbl,
    )
