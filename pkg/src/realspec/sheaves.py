"""Sections of the structure sheaf over basic opens and the localization
at the multiplicative set of f^(2m) + sums of squares.

A section over D(f) is stored as a finite cover by D(g_i) with local
fractions a_i/g_i. The module gives exact equality decisions for both
sides of the canonical map psi (localization to sections), the equalizing
rewrite that makes g_i*a_j = g_j*a_i hold on the nose, and the gluing
construction producing a single fraction plus a verifiable certificate
sum(b_i*g_i) = f^(2k) + sum of squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    DomainError,
    EqualizeBlockedError,
    NotASectionError,
    NotLocallyFractionalError,
    OutOfDomainError,
    RingMismatchError,
)
from .polynomials import Poly, bezout_many, real_part
from .rings import (
    CertificateStatus,
    Ideal,
    Ring,
    RingElem,
    SearchBounds,
    DEFAULT_BOUNDS,
    SigmaDenominator,
    SumOfSquares,
    annihilator,
    express_gen_as_multiple,
    find_certificate,
    real_radical,
    real_radical_member,
)
from .spectrum import (
    ClosedSet,
    PrimeKind,
    RealPrime,
    cover_check,
    prime_in,
    v_of,
)


@dataclass(frozen=True)
class LocalFraction:
    """The fraction numerator/denominator on D(denominator).

    ``witness`` records a known presentation of the denominator as
    f^(2m) + sum of squares (set by psi); it is provenance only and takes
    no part in equality or validation.
    """

    numerator: RingElem
    denominator: RingElem
    witness: Optional[SigmaDenominator] = None

    def __str__(self) -> str:
        return f"{self.numerator} / {self.denominator}"


@dataclass(frozen=True)
class Section:
    """Local fractions over a finite cover of D(f)."""

    ring: Ring
    f: RingElem
    patches: tuple[LocalFraction, ...]

    def __post_init__(self):
        if not self.patches:
            raise DomainError("a section needs at least one patch")
        for p in self.patches:
            if p.numerator.ring != self.ring or p.denominator.ring != self.ring:
                raise RingMismatchError("patch crosses rings")
        if self.f.ring != self.ring:
            raise RingMismatchError("domain element belongs to a different ring")

    def denominators(self) -> list[RingElem]:
        return [p.denominator for p in self.patches]


@dataclass(frozen=True)
class SigmaFraction:
    """Element numerator/denominator of the localization at the set of f."""

    numerator: RingElem
    denominator: SigmaDenominator

    @property
    def f(self) -> RingElem:
        return self.denominator.f

    def __str__(self) -> str:
        return f"{self.numerator} / {self.denominator.value()}"


@dataclass(frozen=True)
class GlueCertificate:
    """Witness sum(coeffs[i] * g_i) = f^(2k) + sos over the section's patches."""

    coeffs: tuple[RingElem, ...]
    k: int
    sos: SumOfSquares


@dataclass(frozen=True)
class StalkElement:
    """Germ numerator/denominator at a prime, denominator outside the prime."""

    prime: RealPrime
    numerator: RingElem
    denominator: RingElem

    def __post_init__(self):
        if self.prime.contains(self.denominator):
            raise DomainError("stalk denominator lies in the prime")

    def __str__(self) -> str:
        return f"{self.numerator} / {self.denominator} at {self.prime}"


@dataclass(frozen=True)
class ValidationReport:
    cover_ok: bool
    bad_pairs: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.cover_ok and not self.bad_pairs


# ---------------------------------------------------------------------------
# equality in the localization


def _same_ambient(u: SigmaFraction, v: SigmaFraction) -> Ring:
    ring = u.numerator.ring
    if v.numerator.ring != ring:
        raise RingMismatchError("fractions of different rings")
    if u.f != v.f:
        raise DomainError("fractions over different localizations")
    return ring


def sigma_eq(u: SigmaFraction, v: SigmaFraction) -> bool:
    """Equality in the localization: f lies in the real radical of the
    annihilator of the cross difference."""
    _same_ambient(u, v)
    cross = u.numerator * v.denominator.value() - v.numerator * u.denominator.value()
    return real_radical_member(annihilator(cross), u.f)


# ---------------------------------------------------------------------------
# the canonical map psi


def psi(u: SigmaFraction) -> Section:
    """Single-patch section of u over D(f); the denominator is invertible
    there because a real prime containing f^(2m) + sum of squares contains f."""
    ring = u.numerator.ring
    den = u.denominator.value()
    # containment D(f) within D(den): primes avoiding f avoid den
    if not cover_check(u.f, [den]):
        raise AssertionError("denominator fails to cover its basic open")
    patch = LocalFraction(u.numerator, den, witness=u.denominator)
    return Section(ring, u.f, (patch,))


# ---------------------------------------------------------------------------
# validation


def _overlap_compatible(p: LocalFraction, q: LocalFraction) -> bool:
    cross = p.numerator * q.denominator - q.numerator * p.denominator
    return real_radical_member(annihilator(cross), p.denominator * q.denominator)


def section_validate(s: Section) -> ValidationReport:
    """Cover decision plus pairwise overlap agreement, both exact."""
    if s.f.is_zero():
        return ValidationReport(False, ())
    cover_ok = cover_check(s.f, s.denominators())
    bad: list[tuple[int, int]] = []
    for i in range(len(s.patches)):
        for j in range(i + 1, len(s.patches)):
            if not _overlap_compatible(s.patches[i], s.patches[j]):
                bad.append((i, j))
    return ValidationReport(cover_ok, tuple(bad))


# ---------------------------------------------------------------------------
# normalization of raw local data into denominator-on-patch form


class NormalizeStatus(Enum):
    FOUND = "found"
    CERTIFICATE_EXHAUSTED = "certificate-exhausted"


@dataclass(frozen=True)
class NormalizeOutcome:
    status: NormalizeStatus
    section: Optional[Section] = None
    failed_index: Optional[int] = None


def normalize_basic(
    f: RingElem,
    raw: Sequence[tuple[RingElem, RingElem, RingElem]],
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> NormalizeOutcome:
    """Rewrite local data (h_i, b_i, f_i) with b_i/f_i on D(h_i) into patches
    whose denominator cuts out the patch itself.

    Requires D(h_i) within D(f_i) for each i and the h_i to cover D(f).
    Each rewrite needs a witness h_i^(2n) + sos = u_i * f_i; the search for
    it can exhaust the bounds.
    """
    ring = f.ring
    for h, _b, fi in raw:
        di = ring.ideal(fi)
        if not real_radical_member(di, h):
            raise NotLocallyFractionalError("D(h) is not inside D(f_i)")
    if not cover_check(f, [h for h, _b, _fi in raw]):
        raise NotLocallyFractionalError("the h_i do not cover D(f)")

    patches: list[LocalFraction] = []
    for idx, (h, b, fi) in enumerate(raw):
        di = ring.ideal(fi)
        outcome = find_certificate(di, h, bounds)
        if outcome.status is not CertificateStatus.FOUND:
            return NormalizeOutcome(NormalizeStatus.CERTIFICATE_EXHAUSTED, None, idx)
        cert = outcome.certificate
        # h^(2n) + sos = cofactor * gen and gen = s * f_i, so u = cofactor * s
        u = cert.cofactor * express_gen_as_multiple(di, fi)
        h2 = h * h
        sigma = h ** (2 * cert.m) + cert.sos.value_in(ring)
        g = h2 * sigma
        a = u * b * h2
        if v_of(ring.ideal(g)) != v_of(ring.ideal(h)):
            raise AssertionError("rewritten patch changed its basic open")
        patches.append(LocalFraction(a, g))
    return NormalizeOutcome(NormalizeStatus.FOUND, Section(ring, f, tuple(patches)))


# ---------------------------------------------------------------------------
# equalize


def _equalize_exponent(s: Section, limit: int) -> Optional[int]:
    """Least m with (g_i g_j)^m * (a_i g_j - a_j g_i) = 0 for all pairs."""
    worst = 0
    for i in range(len(s.patches)):
        for j in range(i + 1, len(s.patches)):
            pi, pj = s.patches[i], s.patches[j]
            cross = pi.numerator * pj.denominator - pj.numerator * pi.denominator
            prod = pi.denominator * pj.denominator
            m = 0
            acc = cross
            while not acc.is_zero():
                m += 1
                if m > limit:
                    return None
                acc = acc * prod
            worst = max(worst, m)
    return worst


def _equalize_limit(ring: Ring) -> int:
    # complete in quotients: solvable pairs need exponent at most deg(modulus);
    # the base ring is a domain, so valid sections have zero cross terms
    return int(ring.modulus.degree) if ring.is_quotient else 1


def equalize(s: Section) -> Section:
    """Same section, rewritten so g_i * a_j = g_j * a_i holds exactly."""
    report = section_validate(s)
    if not report.ok:
        raise NotASectionError("cannot equalize invalid local data")
    m = _equalize_exponent(s, _equalize_limit(s.ring))
    if m is None:
        raise EqualizeBlockedError("no equalizing exponent exists within the complete bound")
    if m == 0:
        return s
    patches = tuple(
        LocalFraction(
            p.denominator**m * p.numerator,
            p.denominator ** (m + 1),
        )
        for p in s.patches
    )
    return Section(s.ring, s.f, patches)


# ---------------------------------------------------------------------------
# glue


class GlueStatus(Enum):
    GLUED = "glued"
    CERTIFICATE_EXHAUSTED = "certificate-exhausted"
    BLOCKED = "blocked"


@dataclass(frozen=True)
class GlueOutcome:
    status: GlueStatus
    fraction: Optional[SigmaFraction] = None
    certificate: Optional[GlueCertificate] = None
    equalized: Optional[Section] = None

    @property
    def glued(self) -> bool:
        return self.status is GlueStatus.GLUED


def glue(s: Section, bounds: SearchBounds = DEFAULT_BOUNDS) -> GlueOutcome:
    """Assemble a section into a single fraction of the localization.

    Always succeeds over real rings; over semi-real rings it runs in an
    experimental capacity and reports distinctly when the equalizing step is
    provably blocked or when the certificate search exhausts its bounds.
    """
    ring = s.ring
    report = section_validate(s)
    if not report.ok:
        raise NotASectionError("the local data is not a section")

    # psi image round trip: give back the witnessed preimage unchanged
    if len(s.patches) == 1:
        p = s.patches[0]
        w = p.witness
        if w is not None and w.f == s.f and w.value() == p.denominator:
            cert = GlueCertificate((ring.one(),), w.m, w.tail)
            return GlueOutcome(GlueStatus.GLUED, SigmaFraction(p.numerator, w), cert, s)

    try:
        eq = equalize(s)
    except EqualizeBlockedError:
        return GlueOutcome(GlueStatus.BLOCKED)

    gs = eq.denominators()
    sum_ideal = _patch_sum_ideal(ring, gs)
    outcome = find_certificate(sum_ideal, s.f, bounds)
    if outcome.status is not CertificateStatus.FOUND:
        return GlueOutcome(GlueStatus.CERTIFICATE_EXHAUSTED, equalized=eq)
    cert = outcome.certificate

    lifts = [g.rep for g in gs]
    if ring.is_quotient:
        lifts.append(ring.modulus)
    gen, cs = bezout_many(lifts)
    if gen != sum_ideal.gen:
        raise AssertionError("Bezout gcd disagrees with the canonical generator")
    bs = tuple(cert.cofactor * ring.elem(c) for c in cs[: len(gs)])

    den = SigmaDenominator(s.f, cert.m, cert.sos)
    num = ring.zero()
    for b, p in zip(bs, eq.patches):
        num = num + b * p.numerator
    result = SigmaFraction(num, den)

    glue_cert = GlueCertificate(bs, cert.m, cert.sos)
    if not verify_glue(eq, result, glue_cert):
        raise AssertionError("internal error: glue result failed verification")
    return GlueOutcome(GlueStatus.GLUED, result, glue_cert, eq)


def _patch_sum_ideal(ring: Ring, gs: Sequence[RingElem]) -> Ideal:
    acc = ring.zero_ideal()
    for g in gs:
        acc = acc.sum(ring.ideal(g))
    return acc


def verify_glue(eq: Section, result: SigmaFraction, cert: GlueCertificate) -> bool:
    """Certificate identity plus the closing identity g_j*a = den*a_j per patch."""
    ring = eq.ring
    lhs = ring.zero()
    for b, p in zip(cert.coeffs, eq.patches):
        lhs = lhs + b * p.denominator
    den = result.denominator.value()
    if not (lhs - (eq.f ** (2 * cert.k) + cert.sos.value_in(ring))).is_zero():
        return False
    for p in eq.patches:
        if not (p.denominator * result.numerator - den * p.numerator).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# stalks


def stalk_at(s: Section, p: RealPrime) -> StalkElement:
    """Germ of the section at a prime of its domain."""
    if p.ring != s.ring:
        raise RingMismatchError("prime belongs to a different ring")
    if prime_in(p, v_of(s.ring.ideal(s.f))):
        raise OutOfDomainError("prime lies outside D(f)")
    for patch in s.patches:
        if not p.contains(patch.denominator):
            return StalkElement(p, patch.numerator, patch.denominator)
    raise AssertionError("a validated section covers every prime of its domain")


def stalk_eq(e1: StalkElement, e2: StalkElement) -> bool:
    """Equality of germs: the cross difference is killed outside the prime."""
    if e1.prime != e2.prime:
        raise DomainError("germs at different primes are incomparable")
    cross = e1.numerator * e2.denominator - e2.numerator * e1.denominator
    rad = real_radical(annihilator(cross))
    return not _ideal_inside_prime(rad, e1.prime)


def _ideal_inside_prime(ideal: Ideal, p: RealPrime) -> bool:
    if p.kind is PrimeKind.ZERO:
        return ideal.gen.is_zero()
    return ideal.gen.is_zero() or p.gen.divides(ideal.gen)


# ---------------------------------------------------------------------------
# pointwise equality of sections


def section_eq(s1: Section, s2: Section) -> bool:
    """Agreement on every overlap of patches, hence on all of D(f)."""
    if s1.ring != s2.ring:
        raise RingMismatchError("sections of different rings")
    d1 = v_of(s1.ring.ideal(s1.f))
    d2 = v_of(s2.ring.ideal(s2.f))
    if d1 != d2:
        raise DomainError("sections over different basic opens")
    for p in s1.patches:
        for q in s2.patches:
            if not _overlap_compatible(p, q):
                return False
    return True
