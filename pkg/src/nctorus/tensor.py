"""Tensor products of basic modules and their theta-series closed forms.

A right module vector f on R x Z_m with label (n, m) and a left module
vector g on R x Z_l with label (k, l) pair to a section h of R x Z_M,
M = n*l + m*k, through the averaged bilinear map

    h(z, Delta) = sum_q f(A*z - (A/m)*q + (l*A/(m*M))*Delta, a*Delta - q)
                        * g(A*z + (B/l)*q - (B/M)*Delta, q),

with A = n + m*theta, B = k - l*theta, (a, b) the Bezout pair of (n, m),
and the component indices read mod m and mod l.  Splitting the q-line by
the congruences q = a*Delta - alpha (mod m), q = beta (mod l) projects h
onto the component pair (alpha, beta); the pair is compatible iff
a*Delta - alpha = beta (mod r), r = gcd(m, l), in which case the solutions
are q0 + u*L, u in Z, with L = m*l/r.

For Gaussian inputs the arithmetic sum over u is itself a theta series:
completing the square in q = q0 + u*L gives

    h_{alpha,beta}(z, Delta) = Theta(s, t) * xi,
    s  = -(sigma1*l**2*A**2 + sigma2*m**2*B**2) / (2*pi*i*r**2),
    t  = (sigma1*(l*A/r)*X0 - sigma2*(m*B/r)*Y0 + (c1*l*A - c2*m*B)/r)
         / (2*pi*i),
    xi = exp(-sigma1*X0**2/2 - c1*X0 - sigma2*Y0**2/2 - c2*Y0),

where X0 and Y0 are the f- and g-arguments at q = q0.  Always Im(s) > 0,
and replacing q0 by q0 + L shifts t by s, under which Theta(s, t)*xi is
invariant, so the closed form does not depend on the chosen congruence
representative.

Specializing f, g to the Gaussian vectors holomorphic for a common
complex structure tau makes t independent of z and factors out

    phi_gamma(z) = exp(-sigma'*z**2/2 - c'*z) on component gamma,
    sigma' = i*tau*M*A/B,    c' = (c_f + c_g)*A,

so each product of basis vectors is an exact finite combination
f_alpha (x) g_beta = sum_gamma c^gamma_{alpha,beta} phi_gamma with
coefficients Theta(s, t)*exp(K) evaluated at z = 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping

from . import gaussians as gs
from .algebra import TWO_PI_I, BezoutPair, bezout
from .connections import ComplexStructure
from .errors import (
    DegenerateDenominator,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidSigma,
    NoHolomorphicVectors,
    NonConvergent,
    SignAssumptionViolated,
)
from .modules import BimoduleProfile, bimodule_profile
from .theta import DEFAULT_EPS, theta_st

# Probe points in z used by the verification routines.
PROBE_ZS: tuple[float, ...] = (-1.0, -0.5, 0.0, 0.3, 0.7, 1.0)

BASE_RADIUS = 16
DEFAULT_QMAX = 16384
SHELL_TOL = 1e-13


@dataclass(frozen=True)
class ProductParams:
    """Labels, Bezout pairs, and derived constants of one tensor product.

    Build through :func:`product_params`.  ``profile`` carries the
    endomorphism invariants and is present only when both denominators
    are positive; the q-sum itself needs neither sign.
    """

    n: int
    m: int
    k: int
    l: int
    theta: float
    pair_nm: BezoutPair
    pair_kl: BezoutPair
    profile: BimoduleProfile | None

    @property
    def A(self) -> float:
        return self.n + self.m * self.theta

    @property
    def B(self) -> float:
        return self.k - self.l * self.theta

    @property
    def M(self) -> int:
        return self.n * self.l + self.m * self.k

    @property
    def r(self) -> int:
        return math.gcd(self.m, self.l)

    @property
    def L(self) -> int:
        return self.m * self.l // self.r

    @property
    def theta_prime(self) -> float:
        return (self.pair_nm.b + self.pair_nm.a * self.theta) / self.A

    @property
    def N_prime(self) -> int:
        return self.pair_nm.a * self.k + self.pair_nm.b * self.l

    def to_json(self) -> dict:
        doc = {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "l": self.l,
            "theta": self.theta,
            "a": self.pair_nm.a,
            "b": self.pair_nm.b,
            "c": self.pair_kl.a,
            "d": self.pair_kl.b,
            "M": self.M,
            "r": self.r,
            "N_prime": self.N_prime,
            "theta_prime": self.theta_prime,
        }
        if self.profile is not None:
            doc["profile"] = self.profile.to_json()
        return doc


def product_params(
    n: int,
    m: int,
    k: int,
    l: int,
    theta: float,
    pair_nm: BezoutPair | None = None,
    pair_kl: BezoutPair | None = None,
    strict: bool = True,
) -> ProductParams:
    """Validated parameters for the product of labels (n, m) and (k, l).

    With strict=True (the default) both n + m*theta > 0 and k - l*theta > 0
    are required, which is the regime where the product carries the full
    bimodule profile.  strict=False admits any k - l*theta; the bilinear
    map and its verification identities remain well defined there, and
    ``profile`` is set to None when the sign assumptions fail.
    """
    if m < 1 or l < 1:
        raise ValueError(f"m and l must be >= 1, got m = {m}, l = {l}")
    pnm = pair_nm if pair_nm is not None else bezout(n, m)
    pkl = pair_kl if pair_kl is not None else bezout(k, l)
    if (pnm.n, pnm.m) != (n, m) or (pkl.n, pkl.m) != (k, l):
        raise ValueError("Bezout pairs do not belong to the supplied labels")
    a_val = n + m * theta
    b_val = k - l * theta
    if a_val == 0:
        raise DegenerateDenominator(f"n + m*theta = 0 for ({n}, {m}) at theta = {theta}")
    if strict and (a_val <= 0 or b_val <= 0):
        raise SignAssumptionViolated(
            f"need n + m*theta > 0 and k - l*theta > 0, got {a_val:.6g} and {b_val:.6g}"
        )
    if n * l + m * k < 1:
        raise SignAssumptionViolated(f"n*l + m*k = {n * l + m * k} must be positive")
    profile = None
    if a_val > 0 and b_val > 0:
        profile = bimodule_profile(n, m, k, l, theta, pnm, pkl)
    return ProductParams(n, m, k, l, theta, pnm, pkl, profile)


def crt_q0(alpha: int, beta: int, delta: int, p: ProductParams) -> int | None:
    """Smallest q >= 0 with q = a*delta - alpha (mod m) and q = beta (mod l).

    Returns None when the pair of congruences is incompatible, i.e. when
    a*delta - alpha != beta (mod gcd(m, l)).
    """
    m, l, r = p.m, p.l, p.r
    rhs = (p.pair_nm.a * delta - alpha) % m
    beta_mod = beta % l
    if (rhs - beta_mod) % r != 0:
        return None
    mr = m // r
    y = ((rhs - beta_mod) // r * pow(l // r, -1, mr)) % mr
    return beta_mod + l * y


def _f_argument(p: ProductParams, z: float, delta: int, q: int) -> float:
    return p.A * z - (p.A / p.m) * q + (p.l * p.A / (p.m * p.M)) * delta


def _g_argument(p: ProductParams, z: float, delta: int, q: int) -> float:
    return p.A * z + (p.B / p.l) * q - (p.B / p.M) * delta


def _summand(
    f: gs.PolyGaussVector,
    g: gs.PolyGaussVector,
    p: ProductParams,
    z: float,
    delta: int,
    q: int,
) -> complex:
    mu = (p.pair_nm.a * delta - q) % p.m
    nu = q % p.l
    return gs.evaluate(f, _f_argument(p, z, delta, q), mu) * gs.evaluate(
        g, _g_argument(p, z, delta, q), nu
    )


def _q_sum(
    f: gs.PolyGaussVector,
    g: gs.PolyGaussVector,
    p: ProductParams,
    z: float,
    delta: int,
    qmax: int,
) -> complex:
    """Shell-doubled truncation of the q-series.

    Convergence is certified by the last doubled shell contributing no more
    than SHELL_TOL relative to the running total; NonConvergent means the
    cap qmax was reached before any shell certified.
    """
    radius = min(BASE_RADIUS, qmax)
    total = sum(_summand(f, g, p, z, delta, q) for q in range(-radius, radius + 1))
    while True:
        new_radius = min(2 * radius, qmax)
        if new_radius == radius:
            raise NonConvergent(
                f"q-series not certified within |q| <= {qmax} at z = {z}, delta = {delta}"
            )
        shell = 0j
        for q in range(radius + 1, new_radius + 1):
            shell += _summand(f, g, p, z, delta, q)
            shell += _summand(f, g, p, z, delta, -q)
        total += shell
        if abs(shell) <= SHELL_TOL * (1 + abs(total)):
            return total
        radius = new_radius


def tensor_direct(
    f: gs.PolyGaussVector,
    g: gs.PolyGaussVector,
    p: ProductParams,
    z: float,
    delta: int,
    qmax: int = DEFAULT_QMAX,
) -> complex:
    """The bilinear map evaluated pointwise by direct summation over q."""
    if f.m != p.m:
        raise DimensionMismatch(f"right factor on Z_{f.m}, label needs Z_{p.m}")
    if g.m != p.l:
        raise DimensionMismatch(f"left factor on Z_{g.m}, label needs Z_{p.l}")
    if not 0 <= delta < p.M:
        raise IndexOutOfRange(f"delta = {delta} outside range(0, {p.M})")
    return _q_sum(f, g, p, z, delta, qmax)


def _xi_table(
    sigma1: complex,
    c1: complex,
    sigma2: complex,
    c2: complex,
    x_aff: tuple[complex, complex, complex, complex],
    y_aff: tuple[complex, complex, complex, complex],
) -> dict[tuple[int, int, int], complex]:
    """Exponent of xi as monomials (z, delta, q0) -> coefficient.

    x_aff and y_aff are the affine maps (z, delta, q0, 1) -> X0, Y0; the
    exponent is -sigma1*X0**2/2 - c1*X0 - sigma2*Y0**2/2 - c2*Y0.
    """
    table: dict[tuple[int, int, int], complex] = {}

    def mono(*indices: int) -> tuple[int, int, int]:
        e = [0, 0, 0]
        for i in indices:
            if i < 3:
                e[i] += 1
        return tuple(e)

    def add(key: tuple[int, int, int], val: complex) -> None:
        table[key] = table.get(key, 0j) + val

    for aff, sig, lin in ((x_aff, sigma1, c1), (y_aff, sigma2, c2)):
        for i in range(4):
            if aff[i] == 0:
                continue
            add(mono(i), -lin * aff[i])
            for j in range(4):
                if aff[j] == 0:
                    continue
                add(mono(i, j), -0.5 * sig * aff[i] * aff[j])
    return {key: val for key, val in table.items() if val != 0}


@dataclass(frozen=True)
class ProductClosedForm:
    """Theta-series form of one component pair (alpha, beta) of a product.

    ``s`` is the theta modulus, ``t_*`` the affine coefficients of the
    theta argument over (z, delta, q0), ``xi`` the exponent monomials of
    the Gaussian prefactor, and ``q0_table[delta]`` the congruence
    representative (None where the component pair is incompatible, in
    which case that component of the product vanishes identically).
    """

    params: ProductParams
    alpha: int
    beta: int
    sigma1: complex
    c1: complex
    sigma2: complex
    c2: complex
    s: complex
    t_z: complex
    t_delta: complex
    t_q0: complex
    t_const: complex
    xi: Mapping[tuple[int, int, int], complex]
    q0_table: tuple[int | None, ...]

    def q0(self, delta: int) -> int | None:
        if not 0 <= delta < self.params.M:
            raise IndexOutOfRange(f"delta = {delta} outside range(0, {self.params.M})")
        return self.q0_table[delta]

    def t_value(self, z: complex, delta: int, q0: int) -> complex:
        return self.t_z * z + self.t_delta * delta + self.t_q0 * q0 + self.t_const

    def xi_exponent(self, z: complex, delta: int, q0: int) -> complex:
        acc = 0j
        for (ez, ed, eq), coef in self.xi.items():
            acc += coef * z**ez * delta**ed * q0**eq
        return acc

    def evaluate(self, z: complex, delta: int, eps: float = DEFAULT_EPS) -> complex:
        q0 = self.q0(delta)
        if q0 is None:
            return 0j
        t = self.t_value(z, delta, q0)
        return theta_st(self.s, t, eps) * cmath.exp(self.xi_exponent(z, delta, q0))


def tensor_gaussian_closed(
    alpha: int,
    beta: int,
    sigma1: complex,
    c1: complex,
    sigma2: complex,
    c2: complex,
    p: ProductParams,
) -> ProductClosedForm:
    """Closed form of gaussian(m, sigma1, c1, alpha) (x) gaussian(l, sigma2, c2, beta)."""
    if sigma1.real <= 0:
        raise InvalidSigma(f"Re(sigma1) must be positive, got {sigma1}")
    if sigma2.real <= 0:
        raise InvalidSigma(f"Re(sigma2) must be positive, got {sigma2}")
    if not 0 <= alpha < p.m:
        raise IndexOutOfRange(f"alpha = {alpha} outside range(0, {p.m})")
    if not 0 <= beta < p.l:
        raise IndexOutOfRange(f"beta = {beta} outside range(0, {p.l})")
    a_den, b_den, big_m = p.A, p.B, p.M
    m, l, r = p.m, p.l, p.r
    x_aff = (
        complex(a_den),
        complex(l * a_den / (m * big_m)),
        complex(-a_den / m),
        0j,
    )
    y_aff = (
        complex(a_den),
        complex(-b_den / big_m),
        complex(b_den / l),
        0j,
    )
    s = -(sigma1 * (l * a_den) ** 2 + sigma2 * (m * b_den) ** 2) / (TWO_PI_I * r * r)
    lin1 = sigma1 * (l * a_den / r)
    lin2 = sigma2 * (m * b_den / r)
    t_aff = [(lin1 * x_aff[i] - lin2 * y_aff[i]) / TWO_PI_I for i in range(4)]
    t_aff[3] += (c1 * l * a_den - c2 * m * b_den) / (r * TWO_PI_I)
    xi = _xi_table(sigma1, c1, sigma2, c2, x_aff, y_aff)
    table = tuple(crt_q0(alpha, beta, delta, p) for delta in range(big_m))
    assert s.imag > 0
    return ProductClosedForm(
        params=p,
        alpha=alpha,
        beta=beta,
        sigma1=sigma1,
        c1=c1,
        sigma2=sigma2,
        c2=c2,
        s=s,
        t_z=t_aff[0],
        t_delta=t_aff[1],
        t_q0=t_aff[2],
        t_const=t_aff[3],
        xi=xi,
        q0_table=table,
    )


def _common_holomorphic_data(
    p: ProductParams, cs: ComplexStructure
) -> tuple[complex, complex, complex]:
    """(sigma1, sigma2, c) of the factor Gaussians holomorphic for cs."""
    if p.B == 0:
        raise DegenerateDenominator(
            f"k - l*theta = 0 for ({p.k}, {p.l}) at theta = {p.theta}"
        )
    sigma1 = 1j * cs.tau * p.m / p.A
    sigma2 = 1j * cs.tau * p.l / p.B
    if sigma1.real <= 0 or sigma2.real <= 0:
        raise NoHolomorphicVectors(
            f"factor widths i*tau*m/A = {sigma1:.6g}, i*tau*l/B = {sigma2:.6g} "
            "must both have positive real part"
        )
    c = (cs.lambda1 * cs.c1 + cs.lambda2 * cs.c2) / (2 * math.pi * cs.lambda2)
    return sigma1, sigma2, c


def product_sigma(p: ProductParams, cs: ComplexStructure) -> complex:
    """Gaussian width i*tau*M*A/B of the product basis vectors."""
    sigma1, sigma2, _ = _common_holomorphic_data(p, cs)
    # i*tau*(m/A + l/B)*A**2 = i*tau*M*A/B via l*A + m*B = M.
    return (sigma1 + sigma2) * p.A * p.A


def product_basis(p: ProductParams, cs: ComplexStructure) -> list[gs.PolyGaussVector]:
    """The M Gaussian vectors phi_gamma spanning products of holomorphic pairs."""
    sigma1, sigma2, c = _common_holomorphic_data(p, cs)
    sigma_p = (sigma1 + sigma2) * p.A * p.A
    c_p = 2 * c * p.A
    return [gs.gaussian(p.M, sigma_p, c_p, gamma) for gamma in range(p.M)]


@dataclass(frozen=True)
class StructureConstants:
    """Coefficients c^gamma_{alpha,beta} with their theta-series provenance.

    values[alpha][beta][gamma] is the coefficient; provenance maps each
    compatible (alpha, beta, gamma) to the (s, t, K, q0) it was built
    from, so every number is reproducible as Theta(s, t)*exp(K).
    """

    shape: tuple[int, int, int]
    values: tuple[tuple[tuple[complex, ...], ...], ...]
    provenance: Mapping[tuple[int, int, int], dict]
    params_doc: Mapping

    def value(self, alpha: int, beta: int, gamma: int) -> complex:
        m, l, big_m = self.shape
        if not (0 <= alpha < m and 0 <= beta < l and 0 <= gamma < big_m):
            raise IndexOutOfRange(
                f"({alpha}, {beta}, {gamma}) outside shape {self.shape}"
            )
        return self.values[alpha][beta][gamma]

    def to_json(self) -> dict:
        entries = []
        m, l, big_m = self.shape
        for alpha in range(m):
            for beta in range(l):
                for gamma in range(big_m):
                    val = self.values[alpha][beta][gamma]
                    prov = self.provenance.get((alpha, beta, gamma))
                    entries.append(
                        {
                            "alpha": alpha,
                            "beta": beta,
                            "gamma": gamma,
                            "re": val.real,
                            "im": val.imag,
                            "q0": None if prov is None else prov["q0"],
                        }
                    )
        return {
            "shape": list(self.shape),
            "entries": entries,
            "params": dict(self.params_doc),
        }


def structure_constants(
    p: ProductParams, cs: ComplexStructure, eps: float = DEFAULT_EPS
) -> StructureConstants:
    """Expand products of holomorphic basis vectors over the product basis.

    The (alpha, beta) product equals sum_gamma c^gamma_{alpha,beta} *
    phi_gamma with phi_gamma from :func:`product_basis`; the coefficient
    is the closed form at z = 0, where phi_gamma(0) = 1.
    """
    sigma1, sigma2, c = _common_holomorphic_data(p, cs)
    values = []
    provenance: dict[tuple[int, int, int], dict] = {}
    for alpha in range(p.m):
        row = []
        for beta in range(p.l):
            form = tensor_gaussian_closed(alpha, beta, sigma1, c, sigma2, c, p)
            col = []
            for gamma in range(p.M):
                q0 = form.q0_table[gamma]
                if q0 is None:
                    col.append(0j)
                    continue
                t = form.t_value(0.0, gamma, q0)
                k_exp = form.xi_exponent(0.0, gamma, q0)
                col.append(theta_st(form.s, t, eps) * cmath.exp(k_exp))
                provenance[(alpha, beta, gamma)] = {
                    "s": form.s,
                    "t": t,
                    "K": k_exp,
                    "q0": q0,
                }
            row.append(tuple(col))
        values.append(tuple(row))
    params_doc = p.to_json()
    params_doc["tau"] = [cs.tau.real, cs.tau.imag]
    params_doc["c1"] = [cs.c1.real, cs.c1.imag]
    params_doc["c2"] = [cs.c2.real, cs.c2.imag]
    sigma_p = (sigma1 + sigma2) * p.A * p.A
    params_doc["sigma_prime"] = [sigma_p.real, sigma_p.imag]
    c_p = 2 * c * p.A
    params_doc["c_prime"] = [c_p.real, c_p.imag]
    return StructureConstants(
        shape=(p.m, p.l, p.M),
        values=tuple(values),
        provenance=provenance,
        params_doc=params_doc,
    )


def _u1_right(f: gs.PolyGaussVector, p: ProductParams) -> gs.PolyGaussVector:
    return gs.roll(gs.shift(f, p.A / p.m), 1)


def _u2_right(f: gs.PolyGaussVector, p: ProductParams) -> gs.PolyGaussVector:
    factors = [cmath.exp(-TWO_PI_I * mu * p.n / p.m) for mu in range(p.m)]
    return gs.component_scale(gs.mul_exp(f, TWO_PI_I), factors)


def _u1_left(g: gs.PolyGaussVector, p: ProductParams) -> gs.PolyGaussVector:
    return gs.roll(gs.shift(g, p.B / p.l), 1)


def _u2_left(g: gs.PolyGaussVector, p: ProductParams) -> gs.PolyGaussVector:
    factors = [cmath.exp(-TWO_PI_I * nu * p.k / p.l) for nu in range(p.l)]
    return gs.component_scale(gs.mul_exp(g, TWO_PI_I), factors)


def _z1_right(f: gs.PolyGaussVector, p: ProductParams) -> gs.PolyGaussVector:
    return gs.roll(gs.shift(f, 1 / p.m), p.pair_nm.a)


def _z2_right(f: gs.PolyGaussVector, p: ProductParams) -> gs.PolyGaussVector:
    factors = [cmath.exp(-TWO_PI_I * mu / p.m) for mu in range(p.m)]
    return gs.component_scale(gs.mul_exp(f, TWO_PI_I / p.A), factors)


def _check_factors(f: gs.PolyGaussVector, g: gs.PolyGaussVector, p: ProductParams) -> None:
    if f.m != p.m or g.m != p.l:
        raise DimensionMismatch(
            f"factors on Z_{f.m} x Z_{g.m}, label needs Z_{p.m} x Z_{p.l}"
        )


def verify_identification(
    f: gs.PolyGaussVector,
    g: gs.PolyGaussVector,
    p: ProductParams,
    generator: str,
    qmax: int = DEFAULT_QMAX,
) -> float:
    """Residual of (f.U) (x) g = f (x) (U.g) over the probe grid.

    generator is "U1" or "U2".  Returns max |difference| normalized by
    1 + max |reference| over z in PROBE_ZS and delta in range(M).
    """
    _check_factors(f, g, p)
    if generator == "U1":
        fu, gu = _u1_right(f, p), _u1_left(g, p)
    elif generator == "U2":
        fu, gu = _u2_right(f, p), _u2_left(g, p)
    else:
        raise ValueError(f"generator must be 'U1' or 'U2', got {generator!r}")
    worst = 0.0
    ref = 0.0
    for z in PROBE_ZS:
        for delta in range(p.M):
            lhs = _q_sum(fu, g, p, z, delta, qmax)
            rhs = _q_sum(f, gu, p, z, delta, qmax)
            worst = max(worst, abs(lhs - rhs))
            ref = max(ref, abs(lhs))
    return worst / (1 + ref)


def verify_delta_period(
    f: gs.PolyGaussVector,
    g: gs.PolyGaussVector,
    p: ProductParams,
    qmax: int = DEFAULT_QMAX,
) -> float:
    """Residual of h(z, delta + M) = h(z, delta) over the probe grid."""
    _check_factors(f, g, p)
    worst = 0.0
    ref = 0.0
    for z in PROBE_ZS:
        for delta in range(p.M):
            base = _q_sum(f, g, p, z, delta, qmax)
            shifted = _q_sum(f, g, p, z, delta + p.M, qmax)
            worst = max(worst, abs(shifted - base))
            ref = max(ref, abs(base))
    return worst / (1 + ref)


def verify_z_covariance(
    f: gs.PolyGaussVector,
    g: gs.PolyGaussVector,
    p: ProductParams,
    qmax: int = DEFAULT_QMAX,
) -> tuple[float, float]:
    """Residuals of the two endomorphism covariance identities.

    Z1:  (Z1 f) (x) g at (z, delta) equals f (x) g at
         (z - N'/M + theta', delta - 1);
    Z2:  (Z2 f) (x) g at (z, delta) equals
         exp(2*pi*i*(z - N'*delta/M)) * (f (x) g)(z, delta).

    Both are normalized like :func:`verify_identification`.
    """
    _check_factors(f, g, p)
    z1f = _z1_right(f, p)
    z2f = _z2_right(f, p)
    shift_z = -p.N_prime / p.M + p.theta_prime
    worst1 = ref1 = 0.0
    worst2 = ref2 = 0.0
    for z in PROBE_ZS:
        for delta in range(p.M):
            base = _q_sum(f, g, p, z, delta, qmax)
            lhs1 = _q_sum(z1f, g, p, z, delta, qmax)
            rhs1 = _q_sum(f, g, p, z + shift_z, delta - 1, qmax)
            worst1 = max(worst1, abs(lhs1 - rhs1))
            ref1 = max(ref1, abs(lhs1))
            lhs2 = _q_sum(z2f, g, p, z, delta, qmax)
            rhs2 = cmath.exp(TWO_PI_I * (z - p.N_prime * delta / p.M)) * base
            worst2 = max(worst2, abs(lhs2 - rhs2))
            ref2 = max(ref2, abs(lhs2))
    return worst1 / (1 + ref1), worst2 / (1 + ref2)
