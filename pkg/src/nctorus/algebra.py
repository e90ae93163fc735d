"""Fourier-series arithmetic on the smooth two-dimensional noncommutative torus.

An element is a finitely supported map v -> C_v on Z^2, read as
f = sum_v C_v U_v.  The monomials multiply as

    U_v U_w = exp(pi*i*theta*(v1*w2 - v2*w1)) U_{v+w},

carry the involution U_v* = U_{-v}, the canonical trace Tr f = C_(0,0),
and the two basic derivations delta_a U_v = 2*pi*i*v_a U_v.  Under the
Weyl ordering U_(v1,v2) = exp(-pi*i*v1*v2*theta) U1^v1 U2^v2 this
encodes the generator relation U1 U2 = exp(2*pi*i*theta) U2 U1.

The module also owns the integer Bezout arithmetic attached to a label
(n, m) with gcd(n, m) = 1, and the induced rotation parameters

    theta'  = (b + a*theta) / (n + m*theta)      with a*n - b*m = 1,
    theta'' = -(d - c*theta) / (k - l*theta)     with c*k - d*l = 1,

which identify the endomorphism algebras of the standard modules.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DegenerateDenominator, NotCoprime

Index = tuple[int, int]

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class TorusElement:
    """Finitely supported coefficient map; exact zeros are never stored.

    Treat ``coeffs`` as immutable.  Build instances through :func:`element`
    (or the convenience constructors below), never directly, so that
    canonicalization is guaranteed.
    """

    coeffs: Mapping[Index, complex]

    def __add__(self, other: "TorusElement") -> "TorusElement":
        return add(self, other)

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return sub(self, other)


def element(coeffs: Mapping[Index, complex] | Iterable[tuple[Index, complex]]) -> TorusElement:
    """Canonical constructor: casts indices, drops coefficients equal to 0."""
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    clean: dict[Index, complex] = {}
    for idx, val in items:
        v = complex(val)
        if v != 0:
            key = (int(idx[0]), int(idx[1]))
            clean[key] = clean.get(key, 0j) + v
    return TorusElement({k: v for k, v in clean.items() if v != 0})


def monomial(n1: int, n2: int, coeff: complex = 1.0) -> TorusElement:
    return element({(n1, n2): coeff})


def unit() -> TorusElement:
    return monomial(0, 0)


def coeff(f: TorusElement, n1: int, n2: int) -> complex:
    return f.coeffs.get((n1, n2), 0j)


def add(f: TorusElement, g: TorusElement) -> TorusElement:
    acc = dict(f.coeffs)
    for idx, val in g.coeffs.items():
        acc[idx] = acc.get(idx, 0j) + val
    return element(acc)


def sub(f: TorusElement, g: TorusElement) -> TorusElement:
    return add(f, scale(-1.0, g))


def scale(alpha: complex, f: TorusElement) -> TorusElement:
    return element({idx: alpha * val for idx, val in f.coeffs.items()})


def mul(f: TorusElement, g: TorusElement, theta: float) -> TorusElement:
    """Product in the torus algebra with rotation parameter theta."""
    acc: dict[Index, complex] = {}
    for (v1, v2), cv in f.coeffs.items():
        for (w1, w2), cw in g.coeffs.items():
            phase = cmath.exp(1j * math.pi * theta * (v1 * w2 - v2 * w1))
            idx = (v1 + w1, v2 + w2)
            acc[idx] = acc.get(idx, 0j) + cv * cw * phase
    return element(acc)


def involution(f: TorusElement) -> TorusElement:
    """The *-operation: U_v* = U_{-v}, coefficients conjugated."""
    return element({(-v1, -v2): val.conjugate() for (v1, v2), val in f.coeffs.items()})


def trace(f: TorusElement) -> complex:
    """The canonical trace, i.e. the coefficient of the identity monomial."""
    return f.coeffs.get((0, 0), 0j)


def derivation(f: TorusElement, axis: int) -> TorusElement:
    """delta_axis f, with delta_a U_v = 2*pi*i*v_a U_v and axis in {1, 2}."""
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis!r}")
    pos = axis - 1
    return element({idx: TWO_PI_I * idx[pos] * val for idx, val in f.coeffs.items()})


def norm_max(f: TorusElement) -> float:
    """Largest coefficient magnitude; zero residuals compare against this."""
    return max((abs(v) for v in f.coeffs.values()), default=0.0)


@dataclass(frozen=True)
class BezoutPair:
    """Integers with a*n - b*m = 1, fixing an identification of End(E_{n,m}).

    The normal form produced by :func:`bezout` takes 0 <= a < |m| when
    m != 0 and (a, b) = (n, 0) when m = 0; any other valid pair may be
    supplied explicitly when a different identification is wanted.
    """

    a: int
    b: int
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.a * self.n - self.b * self.m != 1:
            raise ValueError(
                f"not a Bezout pair: {self.a}*{self.n} - {self.b}*{self.m} != 1"
            )


def bezout(n: int, m: int) -> BezoutPair:
    """Normal-form Bezout pair for a coprime label (n, m).

    Raises NotCoprime when gcd(n, m) != 1.
    """
    if math.gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) != 1")
    if m == 0:
        # n is +-1; a = n, b = 0 gives a*n = n^2 = 1.
        return BezoutPair(n, 0, n, m)
    a = pow(n, -1, abs(m))
    b = (a * n - 1) // m
    return BezoutPair(a, b, n, m)


def theta_prime(theta: float, pair: BezoutPair) -> float:
    """Rotation parameter (b + a*theta)/(n + m*theta) of the endomorphism torus."""
    den = pair.n + pair.m * theta
    if den == 0:
        raise DegenerateDenominator(f"n + m*theta = 0 for (n, m) = ({pair.n}, {pair.m})")
    return (pair.b + pair.a * theta) / den


def theta_double_prime(theta: float, pair: BezoutPair) -> float:
    """Rotation parameter -(d - c*theta)/(k - l*theta) attached to a left label.

    ``pair`` holds (c, d, k, l) in its (a, b, n, m) slots: c*k - d*l = 1.
    """
    den = pair.n - pair.m * theta
    if den == 0:
        raise DegenerateDenominator(f"k - l*theta = 0 for (k, l) = ({pair.n}, {pair.m})")
    return -(pair.b - pair.a * theta) / den
