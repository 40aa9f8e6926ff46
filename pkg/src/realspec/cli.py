"""Command line interface.

Every operation of the library is reachable as a subcommand; structured
output is available through --json. Certificate-producing commands emit
JSON documents that `cert verify` re-checks from the document alone.

Exit codes: 0 success, 2 parse or usage error, 3 precondition violation,
4 certificate search exhausted (the exact decision is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import (
    DomainError,
    NotACoverError,
    NotASectionError,
    NotLocallyFractionalError,
    OutOfDomainError,
    ParseError,
)
from .explore import ExploreConfig, explore_question
from .parsing import parse_poly, parse_ring
from .polynomials import Poly, count_real_roots, factor, real_part
from .rings import (
    CertificateStatus,
    RealRadicalCertificate,
    Ring,
    SearchBounds,
    SigmaDenominator,
    SumOfSquares,
    classify,
    find_certificate,
    verify_certificate,
)
from .sheaves import (
    GlueCertificate,
    GlueStatus,
    LocalFraction,
    Section,
    SigmaFraction,
    glue,
    section_eq,
    section_validate,
    sigma_eq,
    stalk_at,
    verify_glue,
)
from .spectrum import (
    PrimeKind,
    RealPrime,
    SubcoverCertificate,
    SubcoverStatus,
    closed_intersect,
    closed_subset,
    closed_union,
    cover_check,
    enumerate_primes,
    finite_subcover,
    v_of,
    verify_subcover_certificate,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_EXHAUSTED = 4


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ring", default="Q[x]", help='ring, "Q[x]" or "Q[x]/(<poly>)"')
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--seed", type=int, default=0, help="seed for sampling commands")
    p.add_argument("--m-max", type=_positive_int, default=6, dest="m_max")
    p.add_argument("--sos-degree", type=int, default=None, dest="sos_degree")
    p.add_argument("--coeff-bound", type=_positive_int, default=8, dest="coeff_bound")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _bounds(args) -> SearchBounds:
    return SearchBounds(
        m_max=args.m_max, sos_degree=args.sos_degree, coeff_bound=args.coeff_bound
    )


def _ring(args) -> Ring:
    return parse_ring(args.ring)


def _parse_patch(ring: Ring, text: str) -> LocalFraction:
    if ":" not in text:
        raise ParseError("patch must look like <g>:<a>", 1)
    g_text, a_text = text.split(":", 1)
    return LocalFraction(ring.elem(parse_poly(a_text)), ring.elem(parse_poly(g_text)))


def _parse_sos(ring: Ring, text: Optional[str]) -> SumOfSquares:
    if not text:
        return SumOfSquares()
    return SumOfSquares(tuple(ring.elem(parse_poly(t)) for t in text.split(",")))


# ---------------------------------------------------------------------------
# JSON certificate documents


def _real_radical_cert_doc(ring: Ring, cert: RealRadicalCertificate) -> dict:
    return {
        "kind": "real-radical",
        "ring": str(ring),
        "ideal": str(cert.ideal.gen),
        "element": str(cert.a),
        "m": cert.m,
        "sos": [str(t) for t in cert.sos.terms],
        "cofactor": str(cert.cofactor),
    }


def _subcover_cert_doc(ring: Ring, cert: SubcoverCertificate) -> dict:
    return {
        "kind": "subcover",
        "ring": str(ring),
        "f": str(cert.f),
        "covers": [str(g) for g in cert.covers],
        "indices": list(cert.indices),
        "coeffs": [str(c) for c in cert.coeffs],
        "m": cert.m,
        "sos": [str(t) for t in cert.sos.terms],
    }


def _glue_cert_doc(ring: Ring, eq: Section, frac: SigmaFraction, cert: GlueCertificate) -> dict:
    return {
        "kind": "glue",
        "ring": str(ring),
        "f": str(eq.f),
        "patches": [{"g": str(p.denominator), "a": str(p.numerator)} for p in eq.patches],
        "coeffs": [str(c) for c in cert.coeffs],
        "k": cert.k,
        "sos": [str(t) for t in cert.sos.terms],
        "numerator": str(frac.numerator),
    }


def _verify_cert_doc(doc: dict) -> bool:
    kind = doc["kind"]
    ring = parse_ring(doc["ring"])
    sos = SumOfSquares(tuple(ring.elem(parse_poly(t)) for t in doc["sos"]))
    if kind == "real-radical":
        cert = RealRadicalCertificate(
            a=ring.elem(parse_poly(doc["element"])),
            m=int(doc["m"]),
            sos=sos,
            cofactor=ring.elem(parse_poly(doc["cofactor"])),
            ideal=ring.ideal(parse_poly(doc["ideal"])),
        )
        return verify_certificate(cert)
    if kind == "subcover":
        cert = SubcoverCertificate(
            f=ring.elem(parse_poly(doc["f"])),
            covers=tuple(ring.elem(parse_poly(g)) for g in doc["covers"]),
            indices=tuple(int(i) for i in doc["indices"]),
            coeffs=tuple(ring.elem(parse_poly(c)) for c in doc["coeffs"]),
            m=int(doc["m"]),
            sos=sos,
        )
        return verify_subcover_certificate(cert)
    if kind == "glue":
        f = ring.elem(parse_poly(doc["f"]))
        patches = tuple(
            LocalFraction(ring.elem(parse_poly(p["a"])), ring.elem(parse_poly(p["g"])))
            for p in doc["patches"]
        )
        eq = Section(ring, f, patches)
        cert = GlueCertificate(
            tuple(ring.elem(parse_poly(c)) for c in doc["coeffs"]), int(doc["k"]), sos
        )
        frac = SigmaFraction(
            ring.elem(parse_poly(doc["numerator"])), SigmaDenominator(f, cert.k, sos)
        )
        return verify_glue(eq, frac, cert)
    raise DomainError(f"unknown certificate kind {kind!r}")


# ---------------------------------------------------------------------------
# handlers: (exit_code, json_payload, text_lines)


def _cmd_factor(args):
    fac = factor(parse_poly(args.poly))
    lines = [f"unit {fac.unit}"]
    lines += [f"({p}) ^ {mult}" for p, mult in fac.factors]
    payload = {
        "unit": str(fac.unit),
        "factors": [{"poly": str(p), "mult": mult} for p, mult in fac.factors],
    }
    return EXIT_OK, payload, lines


def _cmd_real_part(args):
    rp = real_part(parse_poly(args.poly))
    return EXIT_OK, {"real_part": str(rp)}, [str(rp)]


def _cmd_real_radical(args):
    ring = _ring(args)
    from .rings import real_radical

    rad = real_radical(ring.ideal(parse_poly(args.poly)))
    return EXIT_OK, {"generator": str(rad.gen)}, [str(rad.gen)]


def _cmd_sturm(args):
    n = count_real_roots(parse_poly(args.poly))
    return EXIT_OK, {"real_roots": n}, [str(n)]


def _cmd_classify(args):
    ring = _ring(args)
    is_real, is_semireal = classify(ring)
    text = f"real={str(is_real).lower()} semireal={str(is_semireal).lower()}"
    return EXIT_OK, {"real": is_real, "semireal": is_semireal}, [text]


def _cmd_primes(args):
    ring = _ring(args)
    primes = enumerate_primes(ring)
    return (
        EXIT_OK,
        {"primes": [str(p.gen) for p in primes]},
        [str(p) for p in primes] or ["(none)"],
    )


def _cmd_vset(args):
    ring = _ring(args)
    sets = [v_of(ring.ideal(parse_poly(g))) for g in args.gens]
    if args.op == "union":
        if len(sets) < 2:
            raise DomainError("union takes at least two generators")
        acc = sets[0]
        for v in sets[1:]:
            acc = closed_union(acc, v)
        return EXIT_OK, {"gen": str(acc.gen)}, [str(acc.gen)]
    if args.op == "intersect":
        acc = closed_intersect(sets)
        return EXIT_OK, {"gen": str(acc.gen)}, [str(acc.gen)]
    if len(sets) != 2:
        raise DomainError("subset takes exactly two generators")
    result = closed_subset(sets[0], sets[1])
    return EXIT_OK, {"subset": result}, [str(result).lower()]


def _cmd_cover(args):
    ring = _ring(args)
    f = ring.elem(parse_poly(args.f))
    fs = [ring.elem(parse_poly(g)) for g in args.gens]
    result = cover_check(f, fs)
    return EXIT_OK, {"covered": result}, [str(result).lower()]


def _cmd_subcover(args):
    ring = _ring(args)
    f = ring.elem(parse_poly(args.f))
    fs = [ring.elem(parse_poly(g)) for g in args.gens]
    outcome = finite_subcover(f, fs, _bounds(args))
    indices = list(outcome.indices)
    if outcome.status is SubcoverStatus.FOUND:
        payload = _subcover_cert_doc(ring, outcome.certificate)
        lines = [f"indices {indices}"]
        lines.append(
            "certificate: coeffs=[%s] m=%d sos=[%s]"
            % (
                ", ".join(str(c) for c in outcome.certificate.coeffs),
                outcome.certificate.m,
                ", ".join(str(t) for t in outcome.certificate.sos.terms),
            )
        )
        return EXIT_OK, payload, lines
    payload = {"kind": "subcover", "indices": indices, "status": "no-certificate"}
    return EXIT_EXHAUSTED, payload, [f"indices {indices}", "certificate search exhausted"]


def _cmd_cert_find(args):
    ring = _ring(args)
    ideal = ring.ideal(parse_poly(args.ideal))
    a = ring.elem(parse_poly(args.element))
    outcome = find_certificate(ideal, a, _bounds(args))
    if outcome.status is CertificateStatus.FOUND:
        cert = outcome.certificate
        payload = _real_radical_cert_doc(ring, cert)
        lines = [
            "member: true",
            "certificate: m=%d sos=[%s] cofactor=%s"
            % (cert.m, ", ".join(str(t) for t in cert.sos.terms), cert.cofactor),
        ]
        return EXIT_OK, payload, lines
    if outcome.status is CertificateStatus.MEMBER_NO_CERTIFICATE:
        payload = {"kind": "real-radical", "member": True, "status": "no-certificate"}
        return EXIT_EXHAUSTED, payload, ["member: true", "certificate search exhausted"]
    return EXIT_OK, {"kind": "real-radical", "member": False}, ["member: false"]


def _cmd_cert_verify(args):
    if args.file and args.file != "-":
        with open(args.file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.load(sys.stdin)
    ok = _verify_cert_doc(doc)
    return EXIT_OK, {"verified": ok}, [f"verified: {str(ok).lower()}"]


def _section_from_args(args, ring: Ring) -> Section:
    f = ring.elem(parse_poly(args.f))
    patches = tuple(_parse_patch(ring, p) for p in args.patch)
    return Section(ring, f, patches)


def _cmd_section_validate(args):
    ring = _ring(args)
    report = section_validate(_section_from_args(args, ring))
    payload = {
        "valid": report.ok,
        "cover": report.cover_ok,
        "bad_pairs": [list(p) for p in report.bad_pairs],
    }
    lines = [f"valid: {str(report.ok).lower()}"]
    if not report.cover_ok:
        lines.append("cover: false")
    for i, j in report.bad_pairs:
        lines.append(f"incompatible pair ({i}, {j})")
    return EXIT_OK, payload, lines


def _cmd_section_glue(args):
    ring = _ring(args)
    section = _section_from_args(args, ring)
    outcome = glue(section, _bounds(args))
    if outcome.status is GlueStatus.GLUED:
        frac = outcome.fraction
        payload = _glue_cert_doc(ring, outcome.equalized, frac, outcome.certificate)
        lines = [
            str(frac),
            "certificate: coeffs=[%s] k=%d sos=[%s]"
            % (
                ", ".join(str(c) for c in outcome.certificate.coeffs),
                outcome.certificate.k,
                ", ".join(str(t) for t in outcome.certificate.sos.terms),
            ),
        ]
        return EXIT_OK, payload, lines
    payload = {"kind": "glue", "status": outcome.status.value}
    return EXIT_EXHAUSTED, payload, [f"glue failed: {outcome.status.value}"]


def _cmd_section_eq(args):
    ring = _ring(args)
    f = ring.elem(parse_poly(args.f))
    s1 = Section(ring, f, tuple(_parse_patch(ring, p) for p in args.patch))
    s2 = Section(ring, f, tuple(_parse_patch(ring, p) for p in args.other))
    result = section_eq(s1, s2)
    return EXIT_OK, {"equal": result}, [str(result).lower()]


def _cmd_section_stalk(args):
    ring = _ring(args)
    section = _section_from_args(args, ring)
    gen = parse_poly(args.prime)
    if gen.is_zero():
        prime = RealPrime.zero(ring)
    else:
        prime = RealPrime.principal(ring, gen.monic())
    germ = stalk_at(section, prime)
    payload = {
        "numerator": str(germ.numerator),
        "denominator": str(germ.denominator),
        "prime": str(prime),
    }
    return EXIT_OK, payload, [str(germ)]


def _cmd_sigma_eq(args):
    ring = _ring(args)
    f = ring.elem(parse_poly(args.f))
    u = SigmaFraction(
        ring.elem(parse_poly(args.num1)),
        SigmaDenominator(f, args.m1, _parse_sos(ring, args.sos1)),
    )
    v = SigmaFraction(
        ring.elem(parse_poly(args.num2)),
        SigmaDenominator(f, args.m2, _parse_sos(ring, args.sos2)),
    )
    result = sigma_eq(u, v)
    return EXIT_OK, {"equal": result}, [str(result).lower()]


def _cmd_explore(args):
    config = ExploreConfig(
        rings=args.rings,
        trials=args.trials,
        deg_min=args.deg_min,
        deg_max=args.deg_max,
        seed=args.seed,
        bounds=_bounds(args),
    )
    report = explore_question(config)
    if args.json:
        return EXIT_OK, report.to_dict(), []
    return EXIT_OK, None, report.to_text().splitlines()


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realspec",
        description="exact real Zariski spectrum computations over Q[x] and its quotients",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _common_flags(p)
        p.set_defaults(handler=handler)
        return p

    p = add("factor", _cmd_factor, help="factor a polynomial over Q")
    p.add_argument("poly")

    p = add("real-part", _cmd_real_part, help="real part of a polynomial")
    p.add_argument("poly")

    p = add("real-radical", _cmd_real_radical, help="real radical of a principal ideal")
    p.add_argument("poly")

    p = add("sturm", _cmd_sturm, help="count distinct real roots")
    p.add_argument("poly")

    add("classify", _cmd_classify, help="reality and semi-reality of the ring")

    add("primes", _cmd_primes, help="real primes of a quotient ring")

    p = add("vset", _cmd_vset, help="closed set algebra")
    p.add_argument("op", choices=["union", "intersect", "subset"])
    p.add_argument("gens", nargs="+")

    p = add("cover", _cmd_cover, help="does the family cover D(f)?")
    p.add_argument("--f", required=True)
    p.add_argument("gens", nargs="+")

    p = add("subcover", _cmd_subcover, help="finite subcover with certificate")
    p.add_argument("--f", required=True)
    p.add_argument("gens", nargs="+")

    p = sub.add_parser("cert", help="real radical certificates")
    cert_sub = p.add_subparsers(dest="cert_command", required=True)
    pf = cert_sub.add_parser("find")
    _common_flags(pf)
    pf.add_argument("ideal")
    pf.add_argument("element")
    pf.set_defaults(handler=_cmd_cert_find)
    pv = cert_sub.add_parser("verify")
    _common_flags(pv)
    pv.add_argument("file", nargs="?", default="-")
    pv.set_defaults(handler=_cmd_cert_verify)

    p = sub.add_parser("section", help="operations on sections")
    sec_sub = p.add_subparsers(dest="section_command", required=True)
    for name, handler in [
        ("validate", _cmd_section_validate),
        ("glue", _cmd_section_glue),
        ("eq", _cmd_section_eq),
        ("stalk", _cmd_section_stalk),
    ]:
        ps = sec_sub.add_parser(name)
        _common_flags(ps)
        ps.add_argument("--f", required=True)
        ps.add_argument("--patch", action="append", required=True)
        if name == "eq":
            ps.add_argument("--other", action="append", required=True)
        if name == "stalk":
            ps.add_argument("--prime", required=True)
        ps.set_defaults(handler=handler)

    p = add("sigma-eq", _cmd_sigma_eq, help="equality in the localization")
    p.add_argument("--f", required=True)
    p.add_argument("--num1", required=True)
    p.add_argument("--m1", type=int, default=0)
    p.add_argument("--sos1", default="")
    p.add_argument("--num2", required=True)
    p.add_argument("--m2", type=int, default=0)
    p.add_argument("--sos2", default="")

    p = add("explore-question", _cmd_explore, help="sampling harness over semi-real rings")
    p.add_argument("--rings", type=int, default=50)
    p.add_argument("--trials", type=int, default=4)
    p.add_argument("--deg-min", type=int, default=2, dest="deg_min")
    p.add_argument("--deg-max", type=int, default=8, dest="deg_max")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, lines = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        NotACoverError,
        NotASectionError,
        NotLocallyFractionalError,
        OutOfDomainError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
