"""Empirical probe of gluing over semi-real rings that are not real.

Whether every section over D(f) comes from the localization is settled
here only for real rings; for merely semi-real rings the harness samples
quotient rings and random valid sections, attempts the gluing
construction, and tallies outcomes. Sections are handed to glue as raw
local data (no localization witnesses), so the general construction is
what gets exercised. A failed search is reported as an unresolved
instance with full reproduction data; bounded search cannot refute
existence, so no outcome is ever labelled a counterexample.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .polynomials import Poly
from .rings import (
    Ring,
    RingElem,
    SearchBounds,
    DEFAULT_BOUNDS,
    SigmaDenominator,
    SumOfSquares,
)
from .sheaves import (
    GlueStatus,
    LocalFraction,
    Section,
    SigmaFraction,
    glue,
    psi,
    section_eq,
    section_validate,
)
from .spectrum import enumerate_primes


@dataclass(frozen=True)
class ExploreConfig:
    rings: int = 50
    trials: int = 4
    deg_min: int = 2
    deg_max: int = 8
    seed: int = 0
    bounds: SearchBounds = DEFAULT_BOUNDS


@dataclass
class TrialRecord:
    f: str
    patches: list[tuple[str, str]]
    status: str
    result: Optional[str] = None


@dataclass
class RingReport:
    ring: str
    is_semireal: bool
    is_real: bool
    tallies: dict[str, int] = field(default_factory=dict)
    unresolved: list[TrialRecord] = field(default_factory=list)


@dataclass
class ExplorationReport:
    config: ExploreConfig
    rings: list[RingReport]

    def totals(self) -> dict[str, int]:
        acc = {"glued": 0, "certificate-exhausted": 0, "blocked": 0}
        for r in self.rings:
            for key, n in r.tallies.items():
                acc[key] = acc.get(key, 0) + n
        return acc

    def to_dict(self) -> dict:
        return {
            "config": {
                "rings": self.config.rings,
                "trials": self.config.trials,
                "deg_min": self.config.deg_min,
                "deg_max": self.config.deg_max,
                "seed": self.config.seed,
                "m_max": self.config.bounds.m_max,
                "coeff_bound": self.config.bounds.coeff_bound,
            },
            "rings": [
                {
                    "ring": r.ring,
                    "semireal": r.is_semireal,
                    "real": r.is_real,
                    "tallies": dict(sorted(r.tallies.items())),
                    "unresolved": [
                        {
                            "f": t.f,
                            "patches": [list(p) for p in t.patches],
                            "status": t.status,
                        }
                        for t in r.unresolved
                    ],
                }
                for r in self.rings
            ],
            "totals": self.totals(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"exploration over semi-real (non-real) quotient rings",
            f"rings={self.config.rings} trials={self.config.trials} "
            f"seed={self.config.seed} degrees={self.config.deg_min}..{self.config.deg_max}",
        ]
        for r in self.rings:
            tally = " ".join(f"{k}={v}" for k, v in sorted(r.tallies.items()))
            lines.append(f"ring {r.ring}: {tally}")
            for t in r.unresolved:
                patches = ", ".join(f"{g}:{a}" for g, a in t.patches)
                lines.append(
                    f"  unresolved instance ({t.status}): f={t.f} patches=[{patches}]"
                )
        totals = self.totals()
        lines.append(
            "totals: glued=%d certificate-exhausted=%d blocked=%d"
            % (
                totals.get("glued", 0),
                totals.get("certificate-exhausted", 0),
                totals.get("blocked", 0),
            )
        )
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# deterministic sampling


_REAL_FACTORS = [Poly([a, 1]) for a in range(-4, 5)]  # x - (-a)
_NONREAL_FACTORS = [
    Poly([1, 0, 1]),  # x^2 + 1
    Poly([2, 0, 1]),  # x^2 + 2
    Poly([1, 1, 1]),  # x^2 + x + 1
]


def sample_semireal_nonreal_ring(rng: random.Random, deg_min: int, deg_max: int) -> Ring:
    """Quotient ring that is semi-real but not real, degree within bounds."""
    for _ in range(200):
        real_parts = rng.sample(_REAL_FACTORS, rng.randint(1, 3))
        modulus = Poly.one()
        for p in real_parts:
            modulus = modulus * p
        if rng.random() < 0.5:
            # repeated real-rooted factor breaks squarefreeness
            modulus = modulus * real_parts[0]
        else:
            modulus = modulus * rng.choice(_NONREAL_FACTORS)
        if rng.random() < 0.3:
            modulus = modulus * rng.choice(_NONREAL_FACTORS)
        ring = Ring.quotient(modulus)
        if deg_min <= modulus.degree <= deg_max and ring.is_semireal and not ring.is_real:
            return ring
    raise AssertionError("sampler failed to produce a ring within the degree window")


def _random_elem(rng: random.Random, ring: Ring, max_deg: int = 2) -> RingElem:
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(deg + 1)]
    return ring.elem(Poly(coeffs))


def _random_nonzero(rng: random.Random, ring: Ring, max_deg: int = 2) -> RingElem:
    for _ in range(50):
        e = _random_elem(rng, ring, max_deg)
        if not e.is_zero():
            return e
    return ring.one()


def _strip_witnesses(s: Section) -> Section:
    patches = tuple(LocalFraction(p.numerator, p.denominator) for p in s.patches)
    return Section(s.ring, s.f, patches)


def sample_section(rng: random.Random, ring: Ring) -> Section:
    """Random valid section: either the image of a random fraction of the
    localization (witness stripped), or piecewise data over a partition of
    the spectrum into disjoint basic opens."""
    primes = enumerate_primes(ring)
    if primes and rng.random() < 0.6:
        f = ring.one()
        groups: dict[int, list[Poly]] = {}
        k = rng.randint(1, min(3, len(primes)))
        for p in primes:
            groups.setdefault(rng.randrange(k), []).append(p.gen)
        patches = []
        for gi in sorted(groups):
            others = Poly.one()
            for gj in sorted(groups):
                if gj == gi:
                    continue
                for q in groups[gj]:
                    others = others * q
            g = ring.elem(others)
            patches.append(LocalFraction(_random_elem(rng, ring), g))
        return Section(ring, f, tuple(patches))
    f = _random_nonzero(rng, ring)
    m = rng.randint(0, 1)
    tail_terms = []
    if rng.random() < 0.5:
        tail_terms.append(_random_elem(rng, ring, 1))
    den = SigmaDenominator(f, m, SumOfSquares(tuple(tail_terms)))
    u = SigmaFraction(_random_elem(rng, ring), den)
    return _strip_witnesses(psi(u))


def explore_question(config: ExploreConfig) -> ExplorationReport:
    """Run the sampling campaign; deterministic for a fixed seed."""
    rng = random.Random(config.seed)
    reports: list[RingReport] = []
    if config.trials <= 0 or config.rings <= 0:
        return ExplorationReport(config, reports)
    for _ in range(config.rings):
        ring = sample_semireal_nonreal_ring(rng, config.deg_min, config.deg_max)
        report = RingReport(
            ring=str(ring), is_semireal=ring.is_semireal, is_real=ring.is_real,
            tallies={"glued": 0, "certificate-exhausted": 0, "blocked": 0},
        )
        for _ in range(config.trials):
            section = sample_section(rng, ring)
            if not section_validate(section).ok:
                raise AssertionError("sampler produced an invalid section")
            outcome = glue(section, config.bounds)
            record = TrialRecord(
                f=str(section.f),
                patches=[(str(p.denominator), str(p.numerator)) for p in section.patches],
                status=outcome.status.value,
            )
            if outcome.glued:
                report.tallies["glued"] += 1
                # glued outcomes must re-verify against the input section
                if not section_eq(psi(outcome.fraction), section):
                    raise AssertionError("glued fraction disagrees with its section")
                record.result = str(outcome.fraction)
            elif outcome.status is GlueStatus.CERTIFICATE_EXHAUSTED:
                report.tallies["certificate-exhausted"] += 1
                report.unresolved.append(record)
            else:
                report.tallies["blocked"] += 1
                report.unresolved.append(record)
        reports.append(report)
    return ExplorationReport(config, reports)
