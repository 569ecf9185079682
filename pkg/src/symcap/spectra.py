"""Periodic orbits, action spectra, and the derived verification checks.

An orbit of a radial profile h sits wherever the derivative h'(r) is an
integer k (the winding); its action is the tangent-line intercept
h(r) - r h'(r).  The origin is always a fixed point with action h(0),
and on CP^n the two boundary loci x = 0, 1 are fixed with actions h(0),
h(1).  On CP^n actions recur modulo the recapping lattice, whose
generator is 1 with the line normalized to area 1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .profiles import (
    CPN,
    RadialProfile,
    TwoBallSystem,
    k_a,
    poly_derivative,
    poly_eval,
    reeb,
    reeb_composite,
    s_a,
    t_s,
)
from .rationals import rat

RECAPPING_GENERATOR = Fraction(1)  # area of a line in CP^n

_Z = Fraction(0)


@dataclass(frozen=True)
class OrbitRecord:
    locus: str  # center | interior | plateau | boundary-min | boundary-max
    winding: int
    action: Fraction
    radius: Fraction | None = None
    interval: tuple[Fraction, Fraction | None] | None = None
    recapping: int = 0


@dataclass(frozen=True)
class SpectrumReport:
    orbits: tuple[OrbitRecord, ...]
    spectrum: tuple[Fraction, ...]
    normalization_shift: Fraction | None = None
    construction: str = "custom"
    params: tuple[tuple[str, Fraction], ...] = ()

    def param(self, name: str) -> Fraction:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)


def _plateau_overlaps(interval, radius) -> bool:
    lo, hi = interval
    return radius >= lo and (hi is None or radius <= hi)


def find_orbits(profile: RadialProfile) -> list[OrbitRecord]:
    """All 1-periodic loci: integer-slope plateaus, isolated integer-slope
    radii, the origin, and (on CP^n) the two boundary fixed loci."""
    plateaus: list[OrbitRecord] = []
    isolated: list[OrbitRecord] = []
    for piece in profile.pieces:
        c0, c1, c2 = piece.coeffs
        if c2 == 0:
            if c1.denominator == 1:
                # Affine piece with integer slope: the action is the
                # intercept c0, constant along the plateau.
                plateaus.append(
                    OrbitRecord(
                        "plateau",
                        int(c1),
                        c0,
                        interval=(piece.lo, piece.hi),
                    )
                )
            continue
        d_lo = poly_derivative(piece.coeffs, piece.lo)
        if piece.hi is None:
            raise ValueError("quadratic tail piece is not allowed")
        d_hi = poly_derivative(piece.coeffs, piece.hi)
        k_min, k_max = min(d_lo, d_hi), max(d_lo, d_hi)
        k = -(-k_min // 1)  # ceil
        while k <= k_max:
            radius = (Fraction(k) - c1) / (2 * c2)
            if piece.lo <= radius <= piece.hi:
                action = poly_eval(piece.coeffs, radius) - radius * k
                isolated.append(
                    OrbitRecord("interior", int(k), action, radius=radius)
                )
            k += 1

    plateaus = _merge_plateaus(plateaus)
    isolated = [
        orbit
        for orbit in isolated
        if not any(
            p.winding == orbit.winding and _plateau_overlaps(p.interval, orbit.radius)
            for p in plateaus
        )
    ]
    seen = set()
    deduped = []
    for orbit in isolated:
        key = (orbit.winding, orbit.radius)
        if key not in seen:
            seen.add(key)
            deduped.append(orbit)

    orbits = plateaus + deduped
    if not any(
        p.locus == "plateau" and _plateau_overlaps(p.interval, _Z) for p in plateaus
    ):
        orbits.append(OrbitRecord("center", 0, profile.value(0)))
    if profile.space.kind == CPN:
        orbits.append(OrbitRecord("boundary-min", 0, profile.value(0)))
        orbits.append(OrbitRecord("boundary-max", 0, profile.value(1)))
    orbits.sort(key=_orbit_sort_key)
    return orbits


def _orbit_sort_key(orbit: OrbitRecord):
    position = (
        orbit.radius
        if orbit.radius is not None
        else (orbit.interval[0] if orbit.interval else _Z)
    )
    return (orbit.locus, position, orbit.winding)


def _merge_plateaus(plateaus: list[OrbitRecord]) -> list[OrbitRecord]:
    merged: list[OrbitRecord] = []
    for orbit in sorted(plateaus, key=lambda p: p.interval[0]):
        if merged:
            last = merged[-1]
            if (
                last.winding == orbit.winding
                and last.action == orbit.action
                and last.interval[1] == orbit.interval[0]
            ):
                merged[-1] = replace(last, interval=(last.interval[0], orbit.interval[1]))
                continue
        merged.append(orbit)
    return merged


def _normalization_shift(profile: RadialProfile) -> Fraction:
    """Mean of the profile against the pushforward density n (1-x)^(n-1)."""
    n = profile.space.dim
    density = _binomial_poly(n)
    total = _Z
    for piece in profile.pieces:
        product = _poly_multiply(list(piece.coeffs), density)
        total += _poly_integrate(product, piece.lo, piece.hi)
    return total


def _binomial_poly(n: int) -> list[Fraction]:
    # n (1 - x)^(n-1) expanded in powers of x.
    from math import comb

    return [
        Fraction(n * comb(n - 1, j) * (-1) ** j) for j in range(n)
    ]


def _poly_multiply(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_Z] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_integrate(coeffs: list[Fraction], lo: Fraction, hi: Fraction) -> Fraction:
    def antiderivative(x: Fraction) -> Fraction:
        total = _Z
        power = x
        for j, c in enumerate(coeffs):
            total += c * power / (j + 1)
            power *= x
        return total

    return antiderivative(hi) - antiderivative(lo)


def action_spectrum(
    system: RadialProfile | TwoBallSystem, recapping_window: int = 0
) -> SpectrumReport:
    """Exact action spectrum; on CP^n includes recappings within the window."""
    if recapping_window < 0:
        raise ValueError("recapping window must be >= 0")
    if isinstance(system, TwoBallSystem):
        orbits = find_orbits(system.positive) + find_orbits(system.negative)
        space = system.space
        shift = None
    else:
        orbits = find_orbits(system)
        space = system.space
        shift = _normalization_shift(system) if space.kind == CPN else None
    if space.kind == CPN and recapping_window:
        recapped = []
        for orbit in orbits:
            for k in range(-recapping_window, recapping_window + 1):
                recapped.append(
                    replace(orbit, recapping=k, action=orbit.action + k * RECAPPING_GENERATOR)
                )
        orbits = recapped
    spectrum = tuple(sorted({orbit.action for orbit in orbits}))
    return SpectrumReport(
        tuple(orbits),
        spectrum,
        normalization_shift=shift,
        construction=system.construction,
        params=system.params,
    )


def negate_spectrum(
    system: RadialProfile | TwoBallSystem, recapping_window: int = 0
) -> SpectrumReport:
    """Spectrum of the inverse system (profile -h); equals -spectrum(h)."""
    report = action_spectrum(system.negate(), recapping_window)
    forward = action_spectrum(system, recapping_window)
    expected = tuple(sorted(-x for x in forward.spectrum))
    if report.spectrum != expected:
        raise AssertionError("inverse spectrum is not the negation of the spectrum")
    return report


# ---------------------------------------------------------------------------
# Spectral-norm candidate analysis
# ---------------------------------------------------------------------------


def spectral_norm_candidates(
    report: SpectrumReport, inverse_report: SpectrumReport
) -> dict:
    """Candidate norms x + y >= 0 and the construction-specific selection.

    The selection mirrors the case analysis for the named constructions:
    candidates that collapse to a degenerate (zero-norm, non-identity)
    system under the parameter limits eta -> 0 or mu -> 0 are discarded,
    and the largest survivor is kept.
    """
    negated = tuple(sorted(-x for x in report.spectrum))
    if tuple(sorted(inverse_report.spectrum)) != negated:
        raise ValueError("reports are not negation-consistent")
    sums = {
        x + y
        for x in report.spectrum
        for y in inverse_report.spectrum
        if x + y > 0
    }
    if not sums:
        # Identity system: the only candidate is zero.
        return {"candidates": (Fraction(0),), "selected": Fraction(0)}
    candidates = tuple(sorted(sums))
    construction = report.construction
    if construction == "two_ball":
        eta, mu, delta = report.param("eta"), report.param("mu"), report.param("delta")
        a, b = report.param("a"), report.param("b")
        degenerate = {eta * a - delta / 2, mu * b - delta / 2}
        survivors = [c for c in candidates if c not in degenerate]
        if not survivors:
            raise ValueError("all candidates degenerate; spectrum inconsistent")
        selected = max(survivors)
        expected = eta * a + mu * b - delta
        if selected != expected:
            raise AssertionError("two-ball selection does not match the closed form")
    elif construction == "bump":
        selected = report.param("eta") * report.param("a") - report.param("delta") / 2
        if selected not in candidates:
            raise AssertionError("bump selection missing from candidates")
    else:
        selected = max(candidates)
    return {"candidates": candidates, "selected": selected}


# ---------------------------------------------------------------------------
# Derived checks
# ---------------------------------------------------------------------------


def max_action_check(s, delta) -> dict:
    """Max action of the composite rotation versus (1 - 2s)(1 + delta/2)."""
    s, delta = rat(s), rat(delta)
    profile = reeb_composite(s, delta)
    spectrum = action_spectrum(profile).spectrum
    bound = (1 - 2 * s) * (1 + delta / 2)
    max_action = max(spectrum)
    return {"max_action": max_action, "bound": bound, "ok": max_action <= bound}


def reeb_slope_law(sigmas, delta) -> dict:
    """Pure slowdowns have singleton spectra {-sigma (1 + delta/2)} obeying
    an exact affine law in the speed."""
    delta = rat(delta)
    speeds = [rat(sigma) for sigma in sigmas]
    unit = 1 + delta / 2
    spectra = {}
    for sigma in speeds:
        spectrum = action_spectrum(reeb(sigma, delta)).spectrum
        if len(spectrum) != 1:
            raise AssertionError(f"pure slowdown spectrum not a singleton: {spectrum}")
        spectra[sigma] = spectrum[0]
    ok = all(value == -sigma * unit for sigma, value in spectra.items())
    pair_ok = all(
        spectra[s2] - spectra[s1] == -(s2 - s1) * unit
        for s1 in speeds
        for s2 in speeds
    )
    return {"spectra": spectra, "slope": -unit, "ok": ok and pair_ok}


def deformation_family_check(a, eps, s_samples, grid: int = 60) -> dict:
    """Pointwise checks of the family max(K_a, s K_a - eps) on a rational grid."""
    a, eps = rat(a), rat(eps)
    samples = sorted(rat(s) for s in s_samples)
    if any(not 0 <= s <= 1 for s in samples):
        raise ValueError("s samples must lie in [0, 1]")
    base = k_a(a)
    family = {s: t_s(a, eps, s) for s in samples}
    points = [Fraction(j, grid) for j in range(grid + 1)]
    failures = []
    for x in points:
        k_val = base.value(x)
        values = {s: family[s].value(x) for s in samples}
        if k_val >= -eps:
            for s, val in values.items():
                if val != k_val:
                    failures.append(("pinned where K >= -eps", x, s))
        ordered = [values[s] for s in samples]
        if any(v2 > v1 for v1, v2 in zip(ordered, ordered[1:])):
            failures.append(("not nonincreasing in s", x, None))
        if Fraction(0) in family:
            v0 = values[Fraction(0)]
            if not -eps <= v0 <= 0:
                failures.append(("T_0 outside [-eps, 0]", x, Fraction(0)))
        if Fraction(1) in family and values[Fraction(1)] != k_val:
            failures.append(("T_1 differs from K_a", x, Fraction(1)))
    return {"ok": not failures, "failures": failures, "grid": grid}


def area_splitting_residual(a, recapping_window: int = 1) -> Fraction:
    """Residual of the two naturality constants against the total area.

    The loop generated by S_a contributes a at the divisor and 1 - a at
    the top fixed point; their sum minus the line area must vanish.
    """
    a = rat(a)
    report = action_spectrum(s_a(a), recapping_window)
    base = [o for o in report.orbits if o.recapping == 0 and o.locus.startswith("boundary")]
    min_critical = min(o.action for o in base)
    max_critical = max(o.action for o in base)
    divisor_constant = -min_critical
    top_constant = max_critical
    return divisor_constant + top_constant - RECAPPING_GENERATOR
