"""The acceptance suite: every headline identity checked exactly.

Each case compares an expected value (or predicate) against a freshly
computed one; rational comparisons have zero tolerance.  Randomized
cases draw from a generator seeded by SYMCAP_SEED (default 0) so runs
are reproducible.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .capacities import (
    c2b_closed_form,
    compose_ball_bound,
    cylinder_bound_report,
    cylinder_upper_bound,
    displacement_bounds,
    displacement_energy_ball_bracket,
    special_ball_values,
    spectral_diameter,
    spectral_diameter_ellipsoid,
)
from .exactgeom import ellipsoid, polydisk, scale_domain
from .packing import SearchConfig, canonical_certificate, search_two_balls, verify_certificate
from .profiles import (
    RadialProfile,
    TwoBallSystem,
    bump,
    k_a,
    reeb,
    reeb_composite,
    s_a,
    t_s,
    two_ball,
)
from .rationals import INF, fmt
from .spectra import (
    action_spectrum,
    deformation_family_check,
    find_orbits,
    area_splitting_residual,
    max_action_check,
    reeb_slope_law,
    spectral_norm_candidates,
)


@dataclass(frozen=True)
class CaseResult:
    name: str
    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True)
class SuiteResult:
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> int:
        return sum(case.passed for case in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _rng() -> random.Random:
    return random.Random(int(os.environ.get("SYMCAP_SEED", "0")))


def _random_rational(rng: random.Random, lo: int = 1, hi: int = 40) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 12))


def _case(name: str, expected, actual) -> CaseResult:
    return CaseResult(name, str(expected), str(actual), expected == actual)


def _predicate_case(name: str, ok: bool, detail: str = "") -> CaseResult:
    return CaseResult(name, "pass", detail if detail and not ok else ("pass" if ok else "fail"), ok)


# ---------------------------------------------------------------------------
# The fourteen criteria
# ---------------------------------------------------------------------------


def case_ellipsoid_table() -> CaseResult:
    table = [
        ((1, 1, 1), Fraction(1)),
        ((2, 3), Fraction(3)),
        ((1, 2, 7), Fraction(2)),
        ((1, INF), Fraction(2)),
    ]
    actual = tuple(spectral_diameter(ellipsoid(*a)).value for a, _ in table)
    expected = tuple(v for _, v in table)
    return _case("ellipsoid spectral diameter table", expected, actual)


def case_polydisk_table() -> CaseResult:
    table = [
        ((2,), Fraction(2)),
        ((1, 1), Fraction(2)),
        ((Fraction(1, 2), 3, 9), Fraction(1)),
    ]
    actual = tuple(spectral_diameter(polydisk(*a)).value for a, _ in table)
    expected = tuple(v for _, v in table)
    return _case("polydisk spectral diameter table", expected, actual)


def case_scaling_law() -> CaseResult:
    rng = _rng()
    for _ in range(100):
        lam = _random_rational(rng)
        n = rng.randint(1, 4)
        params = sorted(_random_rational(rng) for _ in range(n))
        domain = ellipsoid(*params) if rng.random() < 0.5 else polydisk(*params)
        base = spectral_diameter(domain).value
        scaled = spectral_diameter(scale_domain(domain, lam)).value
        if scaled != lam * base:
            return _predicate_case(
                "scaling law", False, f"{domain.describe()} scaled by {fmt(lam)}"
            )
    return _predicate_case("scaling law on 100 random domains", True)


def case_min_formula() -> CaseResult:
    rng = _rng()
    for _ in range(1000):
        n = rng.randint(1, 5)
        params = sorted(_random_rational(rng) for _ in range(n))
        value = spectral_diameter_ellipsoid(params).value
        if value != min(params[-1], 2 * params[0]):
            return _predicate_case("min formula", False, f"params {params}")
    boundary = [Fraction(1), Fraction(3, 2), Fraction(2)]
    if spectral_diameter_ellipsoid(boundary).value != 2:
        return _predicate_case("min formula", False, "branch boundary a_n = 2 a_1")
    return _predicate_case("min(a_n, 2a_1) on 1000 random tuples", True)


def case_packing() -> CaseResult:
    eps = Fraction(1, 100)
    for domain in (ellipsoid(1, 2), polydisk(1, 1)):
        cert = canonical_certificate(domain, eps)
        if cert.total != Fraction(199, 100) or not verify_certificate(cert):
            return _predicate_case("packing", False, f"canonical {domain.describe()}")
    config = SearchConfig(
        matrix_entry_bound=2,
        translation_grid=20,
        bisection_tolerance=Fraction(1, 100),
        equal_balls=False,
    )
    for domain, floor in (
        (ellipsoid(1, 2), Fraction(199, 100)),
        (polydisk(1, 1), Fraction(199, 100)),
        (ellipsoid(1, 1), Fraction(99, 100)),
    ):
        cert = search_two_balls(domain, config)
        ceiling = c2b_closed_form(domain).value
        if cert is None or cert.total < floor or cert.total > ceiling:
            return _predicate_case("packing", False, f"search {domain.describe()}")
        if not verify_certificate(cert):
            return _predicate_case("packing", False, f"unverified {domain.describe()}")
    return _predicate_case("canonical certificates and search totals", True)


def case_two_ball_spectrum() -> CaseResult:
    system = two_ball(1, 1, Fraction(9, 10), Fraction(4, 5), Fraction(1, 100))
    report = action_spectrum(system)
    spectrum = set(report.spectrum)
    expected_spectrum = {Fraction(0), Fraction(179, 200), Fraction(-159, 200)}
    analysis = spectral_norm_candidates(report, action_spectrum(system.negate()))
    expected_candidates = {Fraction(179, 200), Fraction(159, 200), Fraction(169, 100)}
    ok = (
        spectrum == expected_spectrum
        and set(analysis["candidates"]) == expected_candidates
        and analysis["selected"] == Fraction(169, 100)
    )
    if ok:
        # Limit behavior: selected -> a + b = 2 as the shape parameters tighten.
        for k in (10, 100, 1000):
            tight = two_ball(1, 1, 1 - Fraction(1, k), 1 - Fraction(1, k), Fraction(1, 10 * k))
            rep = action_spectrum(tight)
            sel = spectral_norm_candidates(rep, action_spectrum(tight.negate()))["selected"]
            if abs(sel - 2) > Fraction(3, k):
                ok = False
                break
    return _predicate_case("two-ball spectrum, candidates, selection, limit", ok)


def case_cylinder_displacement() -> CaseResult:
    ok = (
        cylinder_upper_bound(0) == 2
        and cylinder_upper_bound(Fraction(1, 10)) == Fraction(11, 5)
        and cylinder_bound_report(Fraction(1, 10)).steps[-1].value == 2
        and displacement_bounds(1).upper == 2
    )
    bracket = displacement_energy_ball_bracket(Fraction(1, 100), Fraction(1, 100))
    ok = ok and bracket.lower == Fraction(99, 100) and bracket.upper == Fraction(101, 100)
    return _predicate_case("cylinder and displacement arithmetic", ok)


def case_ball_chain() -> CaseResult:
    for i in range(1, 11):
        s = Fraction(1, 2) + Fraction(i, 22)
        delta = Fraction(i, 40)
        report = compose_ball_bound(s, delta)
        if report.upper != 1 + delta / 2:
            return _predicate_case("ball chain", False, f"s={fmt(s)} delta={fmt(delta)}")
    return _predicate_case("five-step chain equals 1 + delta/2 on 10-point grid", True)


def case_item_v_bound() -> CaseResult:
    check = max_action_check(Fraction(3, 4), Fraction(1, 10))
    if check["max_action"] != Fraction(-13, 24) or check["bound"] != Fraction(-21, 40):
        return _predicate_case("composite rotation bound", False, "pinned values")
    for i in range(1, 21):
        for j in range(1, 21):
            s = Fraction(1, 2) + Fraction(i, 42)
            delta = Fraction(j, 80)
            if not max_action_check(s, delta)["ok"]:
                return _predicate_case(
                    "composite rotation bound", False, f"s={fmt(s)} delta={fmt(delta)}"
                )
    return _predicate_case("composite rotation bound on 20x20 grid", True)


def case_reeb_slope() -> CaseResult:
    sigmas = [Fraction(1, 4), Fraction(1, 2), Fraction(1, 10), Fraction(9, 10)]
    result = reeb_slope_law(sigmas, Fraction(1, 10))
    return _predicate_case("pure slowdown spectra obey the affine slope law", result["ok"])


def _sample_systems() -> list[RadialProfile | TwoBallSystem]:
    return [
        bump(1, Fraction(9, 10), Fraction(1, 100)),
        bump(Fraction(3, 2), Fraction(1, 2), Fraction(1, 10)),
        reeb(Fraction(1, 2), Fraction(1, 10)),
        reeb_composite(Fraction(3, 4), Fraction(1, 10)),
        reeb_composite(Fraction(2, 3), Fraction(1, 100)),
        two_ball(1, 1, Fraction(9, 10), Fraction(4, 5), Fraction(1, 100)),
        s_a(Fraction(1, 4)),
        k_a(Fraction(1, 2)),
        t_s(Fraction(1, 2), Fraction(1, 10), Fraction(1, 3)),
    ]


def case_negation() -> CaseResult:
    for system in _sample_systems():
        forward = action_spectrum(system).spectrum
        backward = action_spectrum(system.negate()).spectrum
        if backward != tuple(sorted(-x for x in forward)):
            name = getattr(system, "construction", "?")
            return _predicate_case("negation", False, name)
    return _predicate_case("spectrum(-h) = -spectrum(h) on all constructions", True)


def case_orbit_oracle() -> CaseResult:
    for system in _sample_systems():
        profiles = (
            [system.positive, system.negative]
            if isinstance(system, TwoBallSystem)
            else [system]
        )
        for profile in profiles:
            ok, detail = oracle_orbit_match(profile)
            if not ok:
                return _predicate_case("orbit oracle", False, f"{profile.construction}: {detail}")
    return _predicate_case("exact orbit radii match the grid-scan oracle", True)


def case_cpn_values() -> CaseResult:
    report = action_spectrum(s_a(Fraction(1, 4)), recapping_window=1)
    if report.spectrum != (Fraction(-5, 4), Fraction(-1, 4), Fraction(3, 4), Fraction(7, 4)):
        return _predicate_case("projective-space values", False, "recapped spectrum")
    base = action_spectrum(s_a(Fraction(1, 4)))
    if set(base.spectrum) != {Fraction(-1, 4), Fraction(3, 4)}:
        return _predicate_case("projective-space values", False, "critical values")
    for a in (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)):
        values = special_ball_values(a)
        if values["capacity"] != 1 - a or area_splitting_residual(a) != 0:
            return _predicate_case("projective-space values", False, f"a={fmt(a)}")
    return _predicate_case("circle-action criticals, special ball, residual", True)


def case_deformation_family() -> CaseResult:
    samples = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
    for a, eps in ((Fraction(1, 2), Fraction(1, 10)), (Fraction(1, 4), Fraction(1, 50))):
        result = deformation_family_check(a, eps, samples)
        if not result["ok"]:
            return _predicate_case(
                "deformation family", False, f"a={fmt(a)} eps={fmt(eps)}"
            )
    return _predicate_case("deformation family pointwise checks", True)


# ---------------------------------------------------------------------------
# Floating-point orbit oracle
# ---------------------------------------------------------------------------


def oracle_orbit_match(
    profile: RadialProfile, step: float = 1e-4, tol: float = 1e-9
) -> tuple[bool, str]:
    """Compare exact orbit radii against a float grid scan of h'(r) = k.

    Scans [0, R] in steps, bisects each bracketed root of h'(r) - k to
    `tol`, and requires a matching exact radius (or covering plateau)
    within `tol` — and vice versa for the isolated exact radii.
    """
    last = profile.pieces[-1]
    r_max = float(last.hi) if last.hi is not None else float(last.lo) + 2.0
    r_max = max(r_max, 1.0)

    def deriv(r: float) -> float:
        piece = profile.piece_at(_clamp_rational(r, last))
        _, c1, c2 = piece.coeffs
        return float(c1) + 2.0 * float(c2) * r

    slopes = [deriv(i * step) for i in range(int(r_max / step) + 1)]
    k_lo = math.floor(min(slopes))
    k_hi = math.ceil(max(slopes))

    exact = find_orbits(profile)
    exact_radii = [float(o.radius) for o in exact if o.radius is not None]
    plateaus = [o.interval for o in exact if o.locus == "plateau"]

    found: list[float] = []
    for k in range(k_lo, k_hi + 1):
        for i in range(len(slopes) - 1):
            f0, f1 = slopes[i] - k, slopes[i + 1] - k
            if f0 == 0.0:
                found.append(i * step)
                continue
            if f0 * f1 < 0:
                lo, hi = i * step, (i + 1) * step
                for _ in range(80):
                    mid = (lo + hi) / 2
                    if (deriv(lo) - k) * (deriv(mid) - k) <= 0:
                        hi = mid
                    else:
                        lo = mid
                    if hi - lo < tol:
                        break
                found.append((lo + hi) / 2)

    for root in found:
        near_exact = any(abs(root - r) <= 10 * tol for r in exact_radii)
        in_plateau = any(
            float(lo) - 10 * tol <= root
            and (hi is None or root <= float(hi) + 10 * tol)
            for lo, hi in plateaus
        )
        if not (near_exact or in_plateau):
            return False, f"oracle root {root} has no exact counterpart"
    for r in exact_radii:
        if r > r_max:
            continue
        if not any(abs(root - r) <= 10 * tol for root in found):
            return False, f"exact radius {r} missed by the oracle"
    return True, ""


def _clamp_rational(r: float, last) -> Fraction:
    value = Fraction(r).limit_denominator(10**12)
    if value < 0:
        return Fraction(0)
    if last.hi is not None and value > last.hi:
        return last.hi
    return value


# ---------------------------------------------------------------------------
# Suite driver
# ---------------------------------------------------------------------------

_CASES = (
    case_ellipsoid_table,
    case_polydisk_table,
    case_scaling_law,
    case_min_formula,
    case_packing,
    case_two_ball_spectrum,
    case_cylinder_displacement,
    case_ball_chain,
    case_item_v_bound,
    case_reeb_slope,
    case_negation,
    case_orbit_oracle,
    case_cpn_values,
    case_deformation_family,
)


def run_suite() -> SuiteResult:
    return SuiteResult(tuple(case() for case in _CASES))


def format_suite(result: SuiteResult) -> str:
    lines = []
    width = max(len(case.name) for case in result.cases)
    for i, case in enumerate(result.cases, 1):
        verdict = "PASS" if case.passed else "FAIL"
        lines.append(f"{i:2d}. {case.name:<{width}}  {verdict}")
        if not case.passed:
            lines.append(f"    expected: {case.expected}")
            lines.append(f"    actual:   {case.actual}")
    lines.append(f"{result.passed} passed, {result.failed} failed")
    return "\n".join(lines) + "\n"
