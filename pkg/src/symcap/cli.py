"""Command-line front end.

Verbs: cap, pack, spectrum, check, plot, verify.  All rationals are read
and written as "p/q" strings; output is deterministic byte-for-byte.
Exit codes: 0 success, 2 parse error, 3 computation precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize
from .capacities import c2b_closed_form, gromov_width_simplex_preimage, spectral_diameter
from .exactgeom import ELLIPSOID, POLYDISK, ToricDomain
from .packing import SearchConfig, canonical_certificate, search_two_balls, verify_certificate
from .profiles import CN, CPN, RadialProfile, Space, TwoBallSystem, build_profile
from .rationals import fmt, rat
from .spectra import action_spectrum, spectral_norm_candidates
from .svg import render_deformation, render_packing, render_profile
from .verify import format_suite, run_suite

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


class ParseFailure(ValueError):
    """Malformed command-line value (exit code 2)."""


def parse_domain(text: str) -> ToricDomain:
    kind, _, rest = text.partition(":")
    if kind not in (ELLIPSOID, POLYDISK) or not rest:
        raise ParseFailure(
            f"domain must look like 'ellipsoid:1,2,7' or 'polydisk:1,1', got {text!r}"
        )
    try:
        params = [rat(p) for p in rest.split(",")]
    except ValueError as exc:
        raise ParseFailure(str(exc)) from exc
    return ToricDomain(kind, tuple(sorted(params)))


def parse_profile_spec(text: str) -> tuple[str, dict]:
    name, _, rest = text.partition(":")
    if not name:
        raise ParseFailure(f"profile must look like 'bump:a=1,eta=9/10,delta=1/100', got {text!r}")
    params: dict = {}
    if rest:
        for chunk in rest.split(","):
            key, eq, value = chunk.partition("=")
            if not eq or not key:
                raise ParseFailure(f"bad profile parameter {chunk!r}")
            try:
                params[key] = rat(value)
            except ValueError as exc:
                raise ParseFailure(str(exc)) from exc
    return name, params


def parse_space(text: str) -> Space:
    kind, _, dim = text.partition(":")
    if kind not in (CN, CPN) or not dim:
        raise ParseFailure(f"space must look like 'cn:2' or 'cpn:1', got {text!r}")
    try:
        return Space(kind, int(dim))
    except ValueError as exc:
        raise ParseFailure(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcap",
        description="Exact symplectic capacities of toric domains.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    cap = sub.add_parser("cap", help="closed-form capacity values")
    cap.add_argument("--domain", help="ellipsoid:a1,..,an or polydisk:a1,..,an")
    cap.add_argument(
        "--capacity",
        default="spectral-diameter",
        choices=["spectral-diameter", "c2b", "gromov-width"],
    )
    cap.add_argument("--simplex", help="simplex capacity a for gromov-width")
    cap.add_argument("--json", action="store_true")
    cap.add_argument("--out")

    pack = sub.add_parser("pack", help="two-ball packing certificates")
    pack.add_argument("--domain", required=True)
    pack.add_argument("--epsilon", default="1/100", help="canonical-certificate slack")
    pack.add_argument("--search", action="store_true", help="run the bounded search")
    pack.add_argument("--matrix-bound", type=int, default=2)
    pack.add_argument("--grid", type=int, default=20)
    pack.add_argument("--tolerance", default="1/100")
    pack.add_argument("--unequal", action="store_true", help="also probe unequal splits")
    pack.add_argument("--json", action="store_true")
    pack.add_argument("--out")

    spectrum = sub.add_parser("spectrum", help="action spectra of radial profiles")
    spectrum.add_argument("--profile", required=True, help="name:key=value,...")
    spectrum.add_argument("--space", default="cn:1", help="cn:N or cpn:N")
    spectrum.add_argument("--recap", type=int, default=0, help="recapping window")
    spectrum.add_argument("--norm", action="store_true", help="spectral-norm candidates")
    spectrum.add_argument("--json", action="store_true")
    spectrum.add_argument("--csv", action="store_true")
    spectrum.add_argument("--out")

    check = sub.add_parser("check", help="re-verify a certificate file")
    check.add_argument("certificate", help="path to a certificate JSON file")
    check.add_argument("--json", action="store_true")
    check.add_argument("--out")

    plot = sub.add_parser("plot", help="SVG renderings")
    plot.add_argument("--domain", help="render a packing of this domain")
    plot.add_argument("--epsilon", default="1/100")
    plot.add_argument("--profile", help="render this profile with tangent lines")
    plot.add_argument("--space", default="cn:1")
    plot.add_argument("--deformation", help="a=..,eps=..,s=v1;v2;... panel")
    plot.add_argument("--out")

    verify = sub.add_parser("verify", help="run the full acceptance suite")
    verify.add_argument("--out")

    return parser


def _build_system(args) -> RadialProfile | TwoBallSystem:
    name, params = parse_profile_spec(args.profile)
    space = parse_space(args.space)
    if name not in ("zero",):
        params.setdefault("dim", space.dim)
        if name == "zero":
            params.pop("dim", None)
    try:
        system = build_profile(name, **params)
    except TypeError as exc:
        raise ParseFailure(f"bad parameters for {name!r}: {exc}") from exc
    if system.space.kind != space.kind:
        raise ValueError(
            f"construction {name!r} lives on {system.space.kind}, not {space.kind}"
        )
    return system


def _run_cap(args) -> str:
    if args.capacity == "gromov-width":
        if not args.simplex:
            raise ParseFailure("gromov-width needs --simplex a")
        value = gromov_width_simplex_preimage(rat(args.simplex))
    else:
        if not args.domain:
            raise ParseFailure("--domain is required for this capacity")
        domain = parse_domain(args.domain)
        value = (
            c2b_closed_form(domain)
            if args.capacity == "c2b"
            else spectral_diameter(domain)
        )
    if args.json:
        return serialize.dumps(serialize.capacity_to_json(value))
    return fmt(value.value) + "\n"


def _run_pack(args) -> str:
    domain = parse_domain(args.domain)
    if args.search:
        config = SearchConfig(
            matrix_entry_bound=args.matrix_bound,
            translation_grid=args.grid,
            bisection_tolerance=rat(args.tolerance),
            equal_balls=not args.unequal,
        )
        certificate = search_two_balls(domain, config)
        if certificate is None:
            raise ValueError("search found no verified placement")
    else:
        certificate = canonical_certificate(domain, rat(args.epsilon))
    if args.json or (args.out and args.out.endswith(".json")):
        return serialize.dumps(serialize.certificate_to_json(certificate))
    return (
        f"total {fmt(certificate.total)} "
        f"(capacities {fmt(certificate.simplices[0].capacity)} + "
        f"{fmt(certificate.simplices[1].capacity)}), "
        f"verified={str(certificate.verified).lower()}\n"
    )


def _run_spectrum(args) -> str:
    if args.recap < 0:
        raise ParseFailure("--recap must be >= 0")
    system = _build_system(args)
    report = action_spectrum(system, recapping_window=args.recap)
    payload = serialize.spectrum_report_to_json(report)
    if args.norm:
        inverse = action_spectrum(system.negate(), recapping_window=args.recap)
        analysis = spectral_norm_candidates(report, inverse)
        payload["norm_candidates"] = [fmt(c) for c in analysis["candidates"]]
        payload["norm_selected"] = fmt(analysis["selected"])
    if args.json:
        return serialize.dumps(payload)
    if args.csv:
        lines = ["locus,winding,recapping,radius,action"]
        for orbit in report.orbits:
            radius = "" if orbit.radius is None else fmt(orbit.radius)
            lines.append(
                f"{orbit.locus},{orbit.winding},{orbit.recapping},{radius},{fmt(orbit.action)}"
            )
        return "\n".join(lines) + "\n"
    text = "{" + ", ".join(fmt(x) for x in report.spectrum) + "}\n"
    if args.norm:
        text += f"norm {payload['norm_selected']}\n"
    return text


def _run_check(args) -> str:
    try:
        with open(args.certificate, encoding="utf-8") as handle:
            data = json.load(handle)
        certificate = serialize.certificate_from_json(data)
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseFailure(f"cannot read certificate: {exc}") from exc
    ok = verify_certificate(certificate)
    if args.json:
        return serialize.dumps({"verified": ok, "total": fmt(certificate.total)})
    return ("verified" if ok else "FAILED") + f" total {fmt(certificate.total)}\n"


def _run_plot(args) -> str:
    chosen = [bool(args.domain), bool(args.profile), bool(args.deformation)]
    if sum(chosen) != 1:
        raise ParseFailure("plot needs exactly one of --domain, --profile, --deformation")
    if args.domain:
        certificate = canonical_certificate(parse_domain(args.domain), rat(args.epsilon))
        return render_packing(certificate)
    if args.profile:
        return render_profile(_build_system(args))
    pairs = dict(chunk.partition("=")[::2] for chunk in args.deformation.split(","))
    missing = {"a", "eps", "s"} - set(pairs)
    if missing:
        raise ParseFailure(f"deformation spec missing {sorted(missing)}")
    return render_deformation(
        rat(pairs["a"]), rat(pairs["eps"]), [rat(v) for v in pairs["s"].split(";")]
    )


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK

    handlers = {
        "cap": _run_cap,
        "pack": _run_pack,
        "spectrum": _run_spectrum,
        "check": _run_check,
        "plot": _run_plot,
    }
    try:
        if args.verb == "verify":
            result = run_suite()
            _emit(format_suite(result), args.out)
            return EXIT_OK if result.ok else 1
        _emit(handlers[args.verb](args), args.out)
        return EXIT_OK
    except ParseFailure as exc:
        print(f"symcap: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ArithmeticError) as exc:
        print(f"symcap: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
