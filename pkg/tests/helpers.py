"""Deterministic random generators shared across the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from qhcube import (
    EquivariantClass,
    PolyRing,
    Y_RING,
    all_points,
    basis_a,
    quantum_ring,
)
from qhcube.blowup import BASIS, BlowupClass


def random_polynomial(rng: random.Random, ring: PolyRing, max_terms=4, max_exp=2, coeff_bound=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in ring.names)
        coeff = Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, 3))
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return ring.poly(terms)


def random_quantum_class(rng: random.Random, n: int, max_terms=3, max_q=2, coeff_bound=5):
    """A random (not necessarily homogeneous) quantum class in normal form."""
    ring = quantum_ring(n)
    out = ring.zero()
    for _ in range(rng.randint(0, max_terms)):
        members = frozenset(i for i in range(1, n + 1) if rng.random() < 0.5)
        d = tuple(rng.randint(0, max_q) for _ in range(n))
        coeff = Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, 3))
        out = out + coeff * (ring.x_set(members) * ring.q_monomial(d))
    return out


def random_homogeneous_quantum_class(
    rng: random.Random, n: int, q_free=False, max_terms=3, coeff_bound=5
):
    """A random homogeneous class; with ``q_free`` the degree is twice |I|."""
    ring = quantum_ring(n)
    if q_free:
        m = rng.randint(0, n)
    else:
        m = rng.randint(0, n + 2)
    out = ring.zero()
    for _ in range(rng.randint(1, max_terms)):
        sizes = [k for k in range(0, min(n, m) + 1) if (m - k) % 2 == 0]
        if q_free:
            sizes = [m] if m <= n else []
        if not sizes:
            continue
        k = rng.choice(sizes)
        members = frozenset(rng.sample(range(1, n + 1), k))
        s = (m - k) // 2
        d = [0] * n
        for _ in range(s):
            d[rng.randrange(n)] += 1
        coeff = Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, 3))
        out = out + coeff * (ring.x_set(members) * ring.q_monomial(d))
    return out


def random_gkm_class(rng: random.Random, n: int, max_y_deg=2, coeff_bound=3):
    """A random integral combination of the triangular basis classes."""
    out = EquivariantClass.zero(n)
    for point in all_points(n):
        if rng.random() < 0.4:
            continue
        terms = {}
        for e in range(max_y_deg + 1):
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[(e,)] = Fraction(c)
        if terms:
            out = out + basis_a(n, point.members) * Y_RING.poly(terms)
    return out


def random_blowup_class(rng: random.Random, max_terms=4, max_nov=2, coeff_bound=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randrange(len(BASIS)), rng.randint(0, max_nov), rng.randint(0, max_nov))
        coeff = Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, 3))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return BlowupClass(terms)
