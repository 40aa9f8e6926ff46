"""Shared test utilities: independent oracles and random samplers.

The root-counting oracle is deliberately a different algorithm from the
library's Sturm chains: bisection with Descartes' rule of signs deciding
when an interval isolates a single root.
"""

from __future__ import annotations

import random
from fractions import Fraction

from realspec import Poly, Ring, RingElem, gcd
from realspec.polynomials import squarefree_part


def descartes_bound_01(q: Poly) -> int:
    """Upper bound (exact parity) for roots of q in the open interval (0, 1)."""
    n = int(q.degree)
    # r(x) = (1+x)^n * q(1/(1+x)); sign variations bound roots of q in (0,1)
    one_plus_x = Poly([1, 1])
    acc = Poly.zero()
    for i, c in enumerate(q.coeffs):
        acc = acc + (one_plus_x ** (n - i)).scale(c)
    signs = [(c > 0) - (c < 0) for c in acc.coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_open_01(q: Poly) -> int:
    bound = descartes_bound_01(q)
    if bound == 0:
        return 0
    if bound == 1:
        return 1
    half = Fraction(1, 2)
    left = q.compose_affine(half, 0)  # q(x/2): roots in (0,1) <-> roots of q in (0,1/2)
    right = q.compose_affine(half, half)  # q((x+1)/2)
    at_half = 1 if q.evaluate(half) == 0 else 0
    return _count_open_01(left) + at_half + _count_open_01(right)


def count_real_roots_oracle(p: Poly) -> int:
    """Distinct real roots of p, independent of Sturm sequences."""
    q = squarefree_part(p)
    if q.is_constant():
        return 0
    # Cauchy bound: all real roots lie strictly inside (-M, M)
    lead = abs(q.leading)
    m_bound = 1 + max(abs(c) for c in q.coeffs) / lead
    # map (0,1) onto (-M, M)
    scaled = q.compose_affine(2 * m_bound, -m_bound)
    return _count_open_01(scaled)


# ---------------------------------------------------------------------------
# samplers


def random_poly(rng: random.Random, max_deg: int, coeff: int = 6, monic: bool = False) -> Poly:
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-coeff, coeff)) for _ in range(deg)]
    lead = Fraction(1) if monic else Fraction(rng.choice([c for c in range(-coeff, coeff + 1) if c]))
    return Poly(coeffs + [lead])


def random_nonzero_poly(rng: random.Random, max_deg: int, coeff: int = 6) -> Poly:
    while True:
        p = random_poly(rng, max_deg, coeff)
        if not p.is_zero():
            return p


_FACTOR_POOL = [
    Poly([0, 1]),        # x
    Poly([-1, 1]),       # x - 1
    Poly([1, 1]),        # x + 1
    Poly([-2, 1]),       # x - 2
    Poly([2, 1]),        # x + 2
    Poly([3, 1]),        # x + 3
    Poly([-2, 0, 1]),    # x^2 - 2
    Poly([-3, 0, 1]),    # x^2 - 3
    Poly([1, 0, 1]),     # x^2 + 1
    Poly([2, 0, 1]),     # x^2 + 2
    Poly([1, 1, 1]),     # x^2 + x + 1
    Poly([-1, -1, 1]),   # x^2 - x - 1
    Poly([-2, 1, 1]),    # x^2 + x - 2 = (x+2)(x-1)
]


def random_structured_poly(rng: random.Random, max_factors: int = 4, max_deg: int = 12) -> Poly:
    """Product of pool factors and a unit; rich factor structure, bounded degree."""
    while True:
        k = rng.randint(1, max_factors)
        p = Poly.const(Fraction(rng.choice([1, 1, 2, -1, 3])))
        for _ in range(k):
            p = p * rng.choice(_FACTOR_POOL)
        if p.degree <= max_deg:
            return p


_REAL_IRREDUCIBLES = [
    Poly([0, 1]),
    Poly([-1, 1]),
    Poly([1, 1]),
    Poly([-2, 1]),
    Poly([2, 1]),
    Poly([-3, 1]),
    Poly([3, 1]),
    Poly([-2, 0, 1]),
    Poly([-3, 0, 1]),
]


def random_real_quotient(rng: random.Random, max_primes: int = 3) -> Ring:
    """Quotient by a squarefree product of real-rooted irreducibles: a real ring."""
    k = rng.randint(1, max_primes)
    picks = rng.sample(_REAL_IRREDUCIBLES, k)
    modulus = Poly.one()
    for p in picks:
        modulus = modulus * p
    return Ring.quotient(modulus)


def random_elem(rng: random.Random, ring: Ring, max_deg: int = 3, coeff: int = 4) -> RingElem:
    return ring.elem(Poly([Fraction(rng.randint(-coeff, coeff)) for _ in range(max_deg + 1)]))


def random_nonzero_elem(rng: random.Random, ring: Ring, max_deg: int = 3) -> RingElem:
    while True:
        e = random_elem(rng, ring, max_deg)
        if not e.is_zero():
            return e
