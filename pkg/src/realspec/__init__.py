"""Exact real Zariski spectrum machinery for Q[x] and its quotients."""

from .errors import (
    DomainError,
    EqualizeBlockedError,
    NotACoverError,
    NotASectionError,
    NotLocallyFractionalError,
    OutOfDomainError,
    ParseError,
    RingMismatchError,
)
from .polynomials import (
    NEG_INF,
    Factorization,
    Poly,
    bezout_many,
    count_real_roots,
    ext_gcd,
    factor,
    gcd,
    has_real_root,
    is_irreducible,
    lcm,
    real_part,
    squarefree_part,
)
from .rings import (
    CertificateOutcome,
    CertificateStatus,
    Ideal,
    RealRadicalCertificate,
    Ring,
    RingElem,
    RingKind,
    SearchBounds,
    DEFAULT_BOUNDS,
    SigmaDenominator,
    SumOfSquares,
    annihilator,
    classify,
    find_certificate,
    make_ring,
    real_radical,
    real_radical_member,
    verify_certificate,
)
from .spectrum import (
    BasicOpen,
    ClosedSet,
    PrimeKind,
    RealPrime,
    SubcoverCertificate,
    SubcoverOutcome,
    SubcoverStatus,
    closed_intersect,
    closed_subset,
    closed_union,
    cover_check,
    enumerate_primes,
    finite_subcover,
    prime_in,
    v_of,
    verify_subcover_certificate,
)
from .sheaves import (
    GlueCertificate,
    GlueOutcome,
    GlueStatus,
    LocalFraction,
    NormalizeOutcome,
    NormalizeStatus,
    Section,
    SigmaFraction,
    StalkElement,
    ValidationReport,
    equalize,
    glue,
    normalize_basic,
    psi,
    section_eq,
    section_validate,
    sigma_eq,
    stalk_at,
    stalk_eq,
    verify_glue,
)
from .parsing import parse_poly, parse_ring, poly_to_str

__version__ = "0.1.0"
