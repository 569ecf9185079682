"""Piecewise-quadratic radial Hamiltonian profiles.

A profile is a function of the moment coordinate r = pi |z|^2 (on C^n)
or x = pi |z_0|^2 (on CP^n, domain [0, 1]).  Pieces have degree <= 2 so
derivatives are piecewise affine and every orbit radius is an exact
rational.  The named constructions:

* ``mu_delta``: the convex cut-off equal to delta/2 below 0 and to the
  identity above delta, realized as a C^1 quadratic spline.
* ``bump(a, eta, delta)``: mu_delta(eta (a - r)) - delta/2.
* ``reeb(sigma, delta)``: -sigma (mu_delta(r - 1) + 1).
* ``reeb_composite(s, delta)``: r - 2 s (mu_delta(r - 1) + 1).
* ``s_a(a)``: x - a on CP^n.
* ``k_a(a)``: min(S_a, 0); kinked at x = a, so only C^0.
* ``t_s(a, eps, s)``: max(K_a, s K_a - eps); also only C^0.
* ``two_ball(a, b, eta, mu, delta)``: the two disjoint implants.
* ``zero``: the identity system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import rat

CN = "cn"
CPN = "cpn"

Coeffs = tuple[Fraction, Fraction, Fraction]

_Z = Fraction(0)


def _coeffs(c0=0, c1=0, c2=0) -> Coeffs:
    return (rat(c0), rat(c1), rat(c2))


def poly_eval(coeffs: Coeffs, r: Fraction) -> Fraction:
    c0, c1, c2 = coeffs
    return c0 + c1 * r + c2 * r * r


def poly_derivative(coeffs: Coeffs, r: Fraction) -> Fraction:
    _, c1, c2 = coeffs
    return c1 + 2 * c2 * r


def poly_compose_affine(coeffs: Coeffs, alpha: Fraction, beta: Fraction) -> Coeffs:
    """Coefficients of p(alpha r + beta)."""
    c0, c1, c2 = coeffs
    return (
        c0 + c1 * beta + c2 * beta * beta,
        c1 * alpha + 2 * c2 * alpha * beta,
        c2 * alpha * alpha,
    )


@dataclass(frozen=True)
class Space:
    kind: str
    dim: int

    def __post_init__(self):
        if self.kind not in (CN, CPN):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")


@dataclass(frozen=True)
class Piece:
    lo: Fraction
    hi: Fraction | None  # None marks the unbounded tail (C^n only)
    coeffs: Coeffs

    def contains(self, r: Fraction) -> bool:
        if r < self.lo:
            return False
        return self.hi is None or r <= self.hi


@dataclass(frozen=True)
class RadialProfile:
    pieces: tuple[Piece, ...]
    space: Space
    construction: str = "custom"
    params: tuple[tuple[str, Fraction], ...] = ()
    smooth: bool = True

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("profile needs at least one piece")
        if self.pieces[0].lo != 0:
            raise ValueError("profile must start at 0")
        for left, right in zip(self.pieces, self.pieces[1:]):
            if left.hi is None or left.hi != right.lo:
                raise ValueError("pieces must be contiguous")
        last = self.pieces[-1]
        if self.space.kind == CN:
            if last.hi is not None:
                raise ValueError("C^n profiles need an unbounded tail piece")
            if last.coeffs[2] != 0:
                raise ValueError("tail must be affine")
        else:
            if last.hi != 1:
                raise ValueError("CP^n profiles live on [0, 1]")
        self._check_continuity()

    def _check_continuity(self):
        for left, right in zip(self.pieces, self.pieces[1:]):
            r = right.lo
            if poly_eval(left.coeffs, r) != poly_eval(right.coeffs, r):
                raise ValueError(f"profile discontinuous at r = {r}")
            if self.smooth and poly_derivative(left.coeffs, r) != poly_derivative(
                right.coeffs, r
            ):
                raise ValueError(f"profile not C^1 at r = {r}")

    def param(self, name: str) -> Fraction:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def piece_at(self, r: Fraction) -> Piece:
        r = rat(r)
        if r < 0:
            raise ValueError("moment coordinate must be nonnegative")
        for piece in self.pieces:
            if piece.contains(r):
                return piece
        raise ValueError(f"coordinate {r} outside the profile domain")

    def value(self, r) -> Fraction:
        r = rat(r)
        return poly_eval(self.piece_at(r).coeffs, r)

    def derivative(self, r) -> Fraction:
        r = rat(r)
        return poly_derivative(self.piece_at(r).coeffs, r)

    def breakpoints(self) -> list[Fraction]:
        return [piece.lo for piece in self.pieces[1:]]

    def negate(self) -> "RadialProfile":
        pieces = tuple(
            Piece(p.lo, p.hi, tuple(-c for c in p.coeffs)) for p in self.pieces
        )
        return RadialProfile(
            pieces,
            self.space,
            construction=f"neg({self.construction})",
            params=self.params,
            smooth=self.smooth,
        )

    def scale_conformal(self, factor) -> "RadialProfile":
        """lam * h(r / lam): the profile of the conformally rescaled system."""
        lam = rat(factor)
        if lam <= 0:
            raise ValueError("scale factor must be positive")
        pieces = []
        for p in self.pieces:
            c0, c1, c2 = p.coeffs
            pieces.append(
                Piece(
                    p.lo * lam,
                    None if p.hi is None else p.hi * lam,
                    (c0 * lam, c1, c2 / lam),
                )
            )
        space = self.space
        if space.kind == CPN:
            raise ValueError("conformal scaling only makes sense on C^n")
        return RadialProfile(
            tuple(pieces),
            space,
            construction=f"scaled({self.construction})",
            params=self.params,
            smooth=self.smooth,
        )


@dataclass(frozen=True)
class TwoBallSystem:
    """Two radial implants with disjoint supports inside a larger domain."""

    positive: RadialProfile
    negative: RadialProfile
    construction: str = "two_ball"
    params: tuple[tuple[str, Fraction], ...] = ()

    @property
    def space(self) -> Space:
        return self.positive.space

    def param(self, name: str) -> Fraction:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def negate(self) -> "TwoBallSystem":
        return TwoBallSystem(
            self.negative.negate(),
            self.positive.negate(),
            construction=f"neg({self.construction})",
            params=self.params,
        )


# ---------------------------------------------------------------------------
# The cut-off spline and affine compositions of it
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutoffSpline:
    """mu_delta on the whole line: delta/2 below 0, identity above delta."""

    delta: Fraction

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("delta must be positive")

    def value(self, x) -> Fraction:
        x = rat(x)
        d = self.delta
        if x <= 0:
            return d / 2
        if x >= d:
            return x
        return d / 2 + x * x / (2 * d)

    def derivative(self, x) -> Fraction:
        x = rat(x)
        d = self.delta
        if x <= 0:
            return _Z
        if x >= d:
            return Fraction(1)
        return x / d

    def segments(self) -> list[tuple[Fraction | None, Fraction | None, Coeffs]]:
        """(lo, hi, coeffs) in x, with None for the two unbounded ends."""
        d = self.delta
        return [
            (None, _Z, _coeffs(d / 2)),
            (_Z, d, (d / 2, _Z, 1 / (2 * d))),
            (d, None, _coeffs(0, 1)),
        ]


def mu_delta(delta) -> CutoffSpline:
    return CutoffSpline(rat(delta))


def _compose_cutoff(
    spline: CutoffSpline,
    alpha: Fraction,
    beta: Fraction,
    scale: Fraction,
    shift_coeffs: Coeffs,
) -> list[Piece]:
    """Pieces on r >= 0 of scale * mu_delta(alpha r + beta) + shift(r)."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    raw = []
    for x_lo, x_hi, coeffs in spline.segments():
        ends = []
        for x in (x_lo, x_hi):
            ends.append(None if x is None else (x - beta) / alpha)
        lo, hi = (ends[0], ends[1]) if alpha > 0 else (ends[1], ends[0])
        composed = poly_compose_affine(coeffs, alpha, beta)
        total = tuple(scale * c + s for c, s in zip(composed, shift_coeffs))
        raw.append((lo, hi, total))
    raw.sort(key=lambda seg: (seg[0] is not None, seg[0]))
    pieces = []
    for lo, hi, coeffs in raw:
        lo = _Z if lo is None else max(lo, _Z)
        if hi is not None and hi <= 0:
            continue
        pieces.append(Piece(lo, hi, coeffs))
    return pieces


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------


def _params(**kwargs) -> tuple[tuple[str, Fraction], ...]:
    return tuple(sorted((k, rat(v)) for k, v in kwargs.items()))


def zero_profile(space: Space | None = None) -> RadialProfile:
    space = space or Space(CN, 1)
    if space.kind == CN:
        pieces = (Piece(_Z, None, _coeffs(0)),)
    else:
        pieces = (Piece(_Z, Fraction(1), _coeffs(0)),)
    return RadialProfile(pieces, space, construction="zero")


def bump(a, eta, delta, dim: int = 1) -> RadialProfile:
    """mu_delta(eta (a - r)) - delta/2: the basic positive implant."""
    a, eta, delta = rat(a), rat(eta), rat(delta)
    if a <= 0:
        raise ValueError("a must be positive")
    if not 0 < eta < 1:
        raise ValueError("eta must lie in (0, 1)")
    if not 0 < delta < eta * a:
        raise ValueError("delta must lie in (0, eta a)")
    spline = mu_delta(delta)
    pieces = _compose_cutoff(spline, -eta, eta * a, Fraction(1), _coeffs(-delta / 2))
    return RadialProfile(
        tuple(pieces),
        Space(CN, dim),
        construction="bump",
        params=_params(a=a, eta=eta, delta=delta),
    )


def reeb(sigma, delta, dim: int = 1) -> RadialProfile:
    """-sigma (mu_delta(r - 1) + 1): the slowed-down negative rotation."""
    sigma, delta = rat(sigma), rat(delta)
    if not 0 <= sigma < 1:
        raise ValueError("sigma must lie in [0, 1)")
    if delta <= 0:
        raise ValueError("delta must be positive")
    if sigma == 0:
        profile = zero_profile(Space(CN, dim))
        return RadialProfile(
            profile.pieces,
            profile.space,
            construction="reeb",
            params=_params(sigma=sigma, delta=delta),
        )
    spline = mu_delta(delta)
    pieces = _compose_cutoff(spline, Fraction(1), Fraction(-1), -sigma, _coeffs(-sigma))
    return RadialProfile(
        tuple(pieces),
        Space(CN, dim),
        construction="reeb",
        params=_params(sigma=sigma, delta=delta),
    )


def reeb_composite(s, delta, dim: int = 1) -> RadialProfile:
    """r - 2s (mu_delta(r - 1) + 1): full rotation against a doubled Reeb slowdown."""
    s, delta = rat(s), rat(delta)
    if not Fraction(1, 2) < s < 1:
        raise ValueError("s must lie in (1/2, 1)")
    if delta <= 0:
        raise ValueError("delta must be positive")
    spline = mu_delta(delta)
    pieces = _compose_cutoff(
        spline, Fraction(1), Fraction(-1), -2 * s, _coeffs(-2 * s, 1)
    )
    return RadialProfile(
        tuple(pieces),
        Space(CN, dim),
        construction="reeb_composite",
        params=_params(s=s, delta=delta),
    )


def s_a(a, dim: int = 1) -> RadialProfile:
    """x - a on CP^n: the generator of the standard circle action."""
    a = rat(a)
    if not 0 < a < 1:
        raise ValueError("a must lie in (0, 1)")
    pieces = (Piece(_Z, Fraction(1), _coeffs(-a, 1)),)
    return RadialProfile(
        pieces, Space(CPN, dim), construction="s_a", params=_params(a=a)
    )


def k_a(a, dim: int = 1) -> RadialProfile:
    """min(S_a, 0); kinked at x = a."""
    a = rat(a)
    if not 0 < a < 1:
        raise ValueError("a must lie in (0, 1)")
    pieces = (
        Piece(_Z, a, _coeffs(-a, 1)),
        Piece(a, Fraction(1), _coeffs(0)),
    )
    return RadialProfile(
        pieces, Space(CPN, dim), construction="k_a", params=_params(a=a), smooth=False
    )


def t_s(a, eps, s, dim: int = 1) -> RadialProfile:
    """max(K_a, s K_a - eps): the deformation family between K_a and -eps."""
    a, eps, s = rat(a), rat(eps), rat(s)
    if not 0 < a < 1:
        raise ValueError("a must lie in (0, 1)")
    if not 0 < eps < a:
        raise ValueError("eps must lie in (0, a)")
    if not 0 <= s <= 1:
        raise ValueError("s must lie in [0, 1]")
    if s == 1:
        base = k_a(a, dim)
        return RadialProfile(
            base.pieces,
            base.space,
            construction="t_s",
            params=_params(a=a, eps=eps, s=s),
            smooth=False,
        )
    crossing = a - eps / (1 - s)  # where K_a meets s K_a - eps
    pieces = []
    if crossing > 0:
        pieces.append(Piece(_Z, crossing, _coeffs(-s * a - eps, s)))
        pieces.append(Piece(crossing, a, _coeffs(-a, 1)))
    else:
        pieces.append(Piece(_Z, a, _coeffs(-a, 1)))
    pieces.append(Piece(a, Fraction(1), _coeffs(0)))
    return RadialProfile(
        tuple(pieces),
        Space(CPN, dim),
        construction="t_s",
        params=_params(a=a, eps=eps, s=s),
        smooth=False,
    )


def two_ball(a, b, eta, mu, delta, dim: int = 1) -> TwoBallSystem:
    """Implant bump(a, eta, delta) and -bump(b, mu, delta) on disjoint balls."""
    positive = bump(a, eta, delta, dim)
    negative = bump(b, mu, delta, dim).negate()
    return TwoBallSystem(
        positive,
        negative,
        params=_params(a=rat(a), b=rat(b), eta=rat(eta), mu=rat(mu), delta=rat(delta)),
    )


_BUILDERS = {
    "bump": bump,
    "reeb": reeb,
    "reeb_composite": reeb_composite,
    "s_a": s_a,
    "k_a": k_a,
    "t_s": t_s,
    "two_ball": two_ball,
    "zero": lambda **kw: zero_profile(),
}

def build_profile(name: str, **params) -> RadialProfile | TwoBallSystem:
    """Build a named construction; see the module docstring for the catalog."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown construction {name!r}") from None
    return builder(**params)
