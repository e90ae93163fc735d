"""Shared random-instance builders for the test suite.

Everything is seeded explicitly at the call site so individual tests stay
reproducible in isolation.
"""

import random

from nctorus import element, gaussian, vector
from nctorus.gaussians import PolyGaussTerm


def random_element(rng, span=2, nterms=3, scale=1.0):
    """Torus element with integer support in [-span, span]^2."""
    coeffs = {}
    for _ in range(nterms):
        v = (rng.randint(-span, span), rng.randint(-span, span))
        coeffs[v] = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
    return element(coeffs)


def random_gaussian(rng, m, with_poly=False):
    """Single-term vector with a well-conditioned width."""
    sigma = complex(rng.uniform(0.6, 1.6), rng.uniform(-0.4, 0.4))
    c = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
    mu = rng.randrange(m)
    poly = (1.0 + 0j,)
    if with_poly:
        poly = (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))
    return gaussian(m, sigma, c=c, mu=mu, poly=poly)


def random_vector(rng, m, nterms=2, max_deg=2):
    """Multi-term vector mixing widths, centers and components."""
    terms = []
    for _ in range(nterms):
        sigma = complex(rng.uniform(0.6, 1.5), rng.uniform(-0.3, 0.3))
        c = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        mu = rng.randrange(m)
        deg = rng.randint(0, max_deg)
        poly = tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                     for _ in range(deg + 1))
        terms.append(PolyGaussTerm(poly=poly, sigma=sigma, c=c, mu=mu))
    return vector(m, terms)


def random_theta(rng):
    """Generic irrational-looking angle away from small rational trouble."""
    return rng.uniform(0.05, 0.95)


def coprime_pair(rng, bound=3):
    import math
    while True:
        n = rng.randint(-bound, bound)
        m = rng.randint(1, bound)
        if math.gcd(n, m) == 1 and n != 0:
            return n, m
