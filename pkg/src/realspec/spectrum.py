"""Topology of the real Zariski spectrum of Q[x] and its quotients.

Real primes, canonical closed sets V(I) and their boolean algebra, basic
opens D(f), exact cover decisions, and finite subcovers with verifiable
combination certificates sum(a_j * f_j) = f^(2m) + sum of squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import DomainError, NotACoverError, RingMismatchError
from .polynomials import Poly, bezout_many, factor, has_real_root, is_irreducible, real_part
from .rings import (
    CertificateStatus,
    Ideal,
    Ring,
    RingElem,
    SearchBounds,
    DEFAULT_BOUNDS,
    SumOfSquares,
    find_certificate,
    ideal_sum,
    real_radical,
    real_radical_member,
)


class PrimeKind(Enum):
    ZERO = "zero"
    PRINCIPAL = "principal"


@dataclass(frozen=True)
class RealPrime:
    """A real prime ideal: (0) in Q[x], or (p) for real-rooted irreducible p."""

    ring: Ring
    kind: PrimeKind
    gen: Optional[Poly] = None

    def __post_init__(self):
        if self.kind is PrimeKind.ZERO:
            if self.ring.is_quotient:
                raise DomainError("the zero ideal is prime only in Q[x]")
            if self.gen is not None:
                raise DomainError("zero prime carries no generator")
            return
        g = self.gen
        if g is None or not is_irreducible(g) or g.leading != 1:
            raise DomainError("principal real prime needs a monic irreducible generator")
        if not has_real_root(g):
            raise DomainError("generator has no real root, so the prime is not real")
        if self.ring.is_quotient and not g.divides(self.ring.modulus):
            raise DomainError("prime generator must divide the modulus")

    @staticmethod
    def zero(ring: Ring) -> "RealPrime":
        return RealPrime(ring, PrimeKind.ZERO)

    @staticmethod
    def principal(ring: Ring, gen: Poly) -> "RealPrime":
        return RealPrime(ring, PrimeKind.PRINCIPAL, gen)

    def contains(self, a: RingElem) -> bool:
        if a.ring != self.ring:
            raise RingMismatchError("element belongs to a different ring")
        if self.kind is PrimeKind.ZERO:
            return a.is_zero()
        return self.gen.divides(a.rep)

    def contains_ideal(self, ideal: Ideal) -> bool:
        if ideal.ring != self.ring:
            raise RingMismatchError("ideal belongs to a different ring")
        if self.kind is PrimeKind.ZERO:
            return ideal.gen.is_zero()
        return ideal.gen.is_zero() or self.gen.divides(ideal.gen)

    def __str__(self) -> str:
        return "(0)" if self.kind is PrimeKind.ZERO else f"({self.gen})"


@dataclass(frozen=True)
class ClosedSet:
    """Canonical V(I): gen 0 is the whole space, 1 the empty set, otherwise a
    monic squarefree product of real-rooted irreducibles (dividing the real
    part of the modulus in a quotient)."""

    ring: Ring
    gen: Poly

    def is_whole(self) -> bool:
        return self.gen.is_zero()

    def is_empty(self) -> bool:
        return self.gen.is_one()

    def defining_ideal(self) -> Ideal:
        if self.gen.is_zero():
            return self.ring.zero_ideal()
        return self.ring.ideal(self.gen)

    def __str__(self) -> str:
        if self.is_whole():
            return "V(0)"
        if self.is_empty():
            return "{}"
        return f"V({self.gen})"


@dataclass(frozen=True)
class BasicOpen:
    """D(f), the open complement of V((f))."""

    ring: Ring
    f: RingElem

    def complement(self) -> ClosedSet:
        return v_of(self.ring.ideal(self.f))


def v_of(ideal: Ideal) -> ClosedSet:
    """Closed set of an ideal, canonicalized through the real radical."""
    ring = ideal.ring
    gen = real_radical(ideal).gen
    if ring.is_quotient and not gen.is_one():
        if gen == real_part(ring.modulus):
            gen = Poly.zero()  # every real prime contains the ideal
    return ClosedSet(ring, gen)


def _check_same_ring(sets: Sequence[ClosedSet]) -> Ring:
    ring = sets[0].ring
    for s in sets[1:]:
        if s.ring != ring:
            raise RingMismatchError("closed sets of different rings")
    return ring


def closed_union(v1: ClosedSet, v2: ClosedSet) -> ClosedSet:
    _check_same_ring([v1, v2])
    return v_of(v1.defining_ideal().product(v2.defining_ideal()))


def closed_intersect(vs: Sequence[ClosedSet]) -> ClosedSet:
    if not vs:
        raise DomainError("intersection of an empty family is undefined")
    ring = _check_same_ring(list(vs))
    acc = vs[0].defining_ideal()
    for v in vs[1:]:
        acc = acc.sum(v.defining_ideal())
    return v_of(acc)


def closed_subset(v1: ClosedSet, v2: ClosedSet) -> bool:
    """v1 within v2, i.e. the first radical contains the second: gen1 | gen2.

    The sentinels obey the same rule: 0 (whole space) divides only 0, and
    1 (empty set) divides everything.
    """
    _check_same_ring([v1, v2])
    return v1.gen.divides(v2.gen)


def prime_in(p: RealPrime, v: ClosedSet) -> bool:
    if p.ring != v.ring:
        raise RingMismatchError("prime and closed set of different rings")
    if p.kind is PrimeKind.ZERO:
        return v.is_whole()
    if v.is_whole():
        return True
    if v.is_empty():
        return False
    return p.gen.divides(v.gen)


def enumerate_primes(ring: Ring) -> list[RealPrime]:
    """All real primes of a quotient ring, in canonical factor order."""
    if not ring.is_quotient:
        raise DomainError("Q[x] has infinitely many real primes")
    return [
        RealPrime.principal(ring, p)
        for p, _ in ring.modulus_factors.factors
        if has_real_root(p)
    ]


# ---------------------------------------------------------------------------
# covers of basic opens


def _sum_ideal(ring: Ring, fs: Sequence[RingElem]) -> Ideal:
    return ideal_sum((ring.ideal(f) for f in fs), ring)


def cover_check(f: RingElem, fs: Sequence[RingElem]) -> bool:
    """Exact decision of D(f) within the union of the D(f_i)."""
    if f.is_zero():
        raise DomainError("cover check needs a nonzero element")
    return real_radical_member(_sum_ideal(f.ring, fs), f)


@dataclass(frozen=True)
class SubcoverCertificate:
    """Witness sum(coeffs[j] * covers[indices[j]]) = f^(2m) + sos, in the ring."""

    f: RingElem
    covers: tuple[RingElem, ...]
    indices: tuple[int, ...]
    coeffs: tuple[RingElem, ...]
    m: int
    sos: SumOfSquares


def verify_subcover_certificate(cert: SubcoverCertificate) -> bool:
    ring = cert.f.ring
    lhs = ring.zero()
    for j, idx in enumerate(cert.indices):
        lhs = lhs + cert.coeffs[j] * cert.covers[idx]
    rhs = cert.f ** (2 * cert.m) + cert.sos.value_in(ring)
    return (lhs - rhs).is_zero()


class SubcoverStatus(Enum):
    FOUND = "found"
    NO_CERTIFICATE = "no-certificate"


@dataclass(frozen=True)
class SubcoverOutcome:
    indices: tuple[int, ...]
    status: SubcoverStatus
    certificate: Optional[SubcoverCertificate] = None


def finite_subcover(
    f: RingElem, fs: Sequence[RingElem], bounds: SearchBounds = DEFAULT_BOUNDS
) -> SubcoverOutcome:
    """Finite subcover of D(f) with the same gcd real part as the whole family.

    Greedy: grow left to right until the subset's gcd real part matches the
    full family's, then prune indices whose removal keeps it unchanged. The
    combination certificate comes from Bezout coefficients scaled by a real
    radical certificate for f; its search may exhaust the bounds, in which
    case the subcover itself is still exact.
    """
    ring = f.ring
    if not cover_check(f, fs):
        raise NotACoverError("the family does not cover D(f)")
    fs = [ring.elem(g) for g in fs]
    full = _sum_ideal(ring, fs)
    target = _radical_gen(full)

    kept: list[int] = []
    acc = ring.zero_ideal()
    for i, g in enumerate(fs):
        if _radical_gen(acc) == target:
            break
        cand = acc.sum(ring.ideal(g))
        if _radical_gen(cand) != _radical_gen(acc):
            kept.append(i)
            acc = cand
    for i in list(kept):
        rest = [j for j in kept if j != i]
        if _radical_gen(_sum_ideal(ring, [fs[j] for j in rest])) == target:
            kept = rest

    subset = [fs[j] for j in kept]
    sub_ideal = _sum_ideal(ring, subset)
    outcome = find_certificate(sub_ideal, f, bounds)
    if outcome.status is not CertificateStatus.FOUND:
        return SubcoverOutcome(tuple(kept), SubcoverStatus.NO_CERTIFICATE)

    cert = outcome.certificate
    lifts = [g.rep for g in subset]
    if ring.is_quotient:
        lifts = lifts + [ring.modulus]
    gen, cs = bezout_many(lifts) if lifts else (Poly.zero(), [])
    if lifts and gen != sub_ideal.gen:
        raise AssertionError("Bezout gcd disagrees with the canonical generator")
    coeffs = tuple(cert.cofactor * ring.elem(c) for c in cs[: len(subset)])
    sub_cert = SubcoverCertificate(
        f, tuple(fs), tuple(kept), coeffs, cert.m, cert.sos
    )
    if not verify_subcover_certificate(sub_cert):
        raise AssertionError("internal error: subcover certificate failed to verify")
    return SubcoverOutcome(tuple(kept), SubcoverStatus.FOUND, sub_cert)


def _radical_gen(ideal: Ideal) -> Optional[Poly]:
    """Real radical generator used for subset comparisons; None for the
    base ring's zero ideal (which no nonzero f belongs to)."""
    if ideal.gen.is_zero():
        return None
    return real_part(ideal.gen)
