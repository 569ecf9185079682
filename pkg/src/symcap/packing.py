"""Two-ball packings of moment polytopes.

A packing certificate exhibits two simplex images with disjoint
interiors inside a moment polytope; the sum of their capacities is an
exact lower bound for the two-ball capacity of the domain.  Canonical
certificates reproduce the standard decompositions of long ellipsoids
and polydisks; the search is a certified lower-bound engine over a
bounded slice of the special affine group, never an exact optimizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .capacities import c2b_closed_form
from .exactgeom import (
    ELLIPSOID,
    POLYDISK,
    Polytope,
    SimplexImage,
    SpecialAffineTransform,
    ToricDomain,
    contains,
    interiors_disjoint,
    moment_polytope,
)
from .rationals import is_infinite, rat

SEARCH_DIMENSION_CAP = 4


@dataclass(frozen=True)
class PackingCertificate:
    simplices: tuple[SimplexImage, SimplexImage]
    domain: ToricDomain
    total: Fraction
    verified: bool

    def __post_init__(self):
        if self.total != self.simplices[0].capacity + self.simplices[1].capacity:
            raise ValueError("total must equal the sum of the two capacities")


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for the packing search.

    Matrix entries range over [-B, B]; translations run on a grid of
    step 1/q over the polytope's bounding box.  When ``equal_balls`` is
    false the search also probes the coarse unequal splits (t/3, 2t/3)
    and (t/4, 3t/4) of each candidate total.  Enumeration cost grows as
    (2B+1)^(n^2), which is why the search is capped at dimension 4.
    """

    matrix_entry_bound: int = 2
    translation_grid: int = 20
    bisection_tolerance: Fraction = Fraction(1, 100)
    equal_balls: bool = True

    def __post_init__(self):
        if self.matrix_entry_bound < 1:
            raise ValueError("matrix entry bound must be >= 1")
        if self.translation_grid < 1:
            raise ValueError("translation grid must be >= 1")
        if rat(self.bisection_tolerance) <= 0:
            raise ValueError("bisection tolerance must be positive")


def verify_certificate(certificate: PackingCertificate) -> bool:
    """Recompute both containments and the interior disjointness exactly."""
    polytope = moment_polytope(certificate.domain)
    s1, s2 = certificate.simplices
    if certificate.total != s1.capacity + s2.capacity:
        return False
    return (
        contains(polytope, s1)
        and contains(polytope, s2)
        and interiors_disjoint(s1, s2)
    )


def canonical_certificate(domain: ToricDomain, slack) -> PackingCertificate:
    """The standard two-simplex decomposition, with capacities a_1 - slack/2.

    For a long ellipsoid (a_n >= 2 a_1) the second simplex is the shear
    of the first along the long axis; for a polydisk (n >= 2) it is the
    reflection of the first into the opposite corner.
    """
    eps = rat(slack)
    if eps <= 0:
        raise ValueError("slack must be positive")
    n = domain.dimension
    a1 = None if domain.kind == "polytope" else domain.params[0]
    if domain.kind == ELLIPSOID:
        a_top = domain.params[-1]
        if not is_infinite(a_top) and a_top < 2 * a1:
            raise ValueError(
                "no canonical two-ball certificate: largest axis below twice the smallest"
            )
        second = _ellipsoid_shear(n, a1)
    elif domain.kind == POLYDISK:
        if n < 2:
            raise ValueError("polydisk certificate needs at least two factors")
        second = _corner_reflection(n, domain.params)
    else:
        raise ValueError("canonical certificates exist only for ellipsoids and polydisks")
    if eps >= 2 * a1:
        raise ValueError("slack must be below twice the smallest parameter")
    capacity = a1 - eps / 2
    simplices = (
        SimplexImage(capacity, SpecialAffineTransform.identity(n)),
        SimplexImage(capacity, second),
    )
    certificate = PackingCertificate(simplices, domain, 2 * capacity, verified=False)
    if not verify_certificate(certificate):
        raise AssertionError("canonical certificate failed its own verification")
    return PackingCertificate(simplices, domain, 2 * capacity, verified=True)


def _ellipsoid_shear(n: int, a1: Fraction) -> SpecialAffineTransform:
    # Last row (-1, ..., -1, 1): shifts every short axis off the long one,
    # then translate one simplex width along the long axis.
    matrix = tuple(
        tuple(
            (1 if i == j else 0) if i < n - 1 else (1 if j == n - 1 else -1)
            for j in range(n)
        )
        for i in range(n)
    )
    translation = tuple(Fraction(0) if i < n - 1 else a1 for i in range(n))
    return SpecialAffineTransform(matrix, translation)


def _corner_reflection(n: int, corner) -> SpecialAffineTransform:
    # Point reflection into the far corner; for odd n the determinant is
    # fixed up by swapping the first two axes, which maps the standard
    # simplex to the same reflected vertex set.
    if n % 2 == 0:
        matrix = tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))
    else:
        perm = [1, 0] + list(range(2, n))
        matrix = tuple(
            tuple(-1 if perm[i] == j else 0 for j in range(n)) for i in range(n)
        )
    return SpecialAffineTransform(matrix, tuple(corner))


# ---------------------------------------------------------------------------
# Bounded search
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _unimodular_matrices(n: int, bound: int) -> tuple:
    """All SL_n(Z) matrices with entries in [-bound, bound], lexicographic."""
    entries = range(-bound, bound + 1)
    matrices = []
    for flat in product(entries, repeat=n * n):
        matrix = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        if _int_det(matrix) == 1:
            matrices.append(matrix)
    return tuple(matrices)


def _int_det(matrix) -> int:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = 0
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in matrix[1:])
        sign = -1 if j % 2 else 1
        total += sign * matrix[0][j] * _int_det(minor)
    return total


def _contained_placements(
    polytope: Polytope,
    box,
    capacity: Fraction,
    matrices,
    q: int,
) -> tuple[list, int]:
    """All grid placements of a capacity-`capacity` simplex inside the
    polytope, as raw (matrix, scaled-translation) pairs in lexicographic
    order, together with the integer scale of the translations.

    Works in integer arithmetic over a common denominator: containment of
    g = (M, tau) reduces to nu . tau <= beta - max_j nu . (c M e_j) per
    halfspace, which is linear in tau.
    """
    n = polytope.dimension
    denominators = [q, capacity.denominator]
    denominators += [beta.denominator for _, beta in polytope.constraints]
    for lo, hi in box:
        denominators += [lo.denominator, hi.denominator]
    scale = math.lcm(*denominators)
    step = scale // q
    c_scaled = int(capacity * scale)
    widths = [hi - lo for lo, hi in box]

    axis_ranges = []
    for (lo, _), width in zip(box, widths):
        start = int(lo * scale)
        count = int(width * q)  # floor: number of whole grid steps in the width
        axis_ranges.append(range(start, start + count * step + 1, step))

    placements = []
    for matrix in matrices:
        # Quick prune: the simplex's own extent must fit in the box.
        fits = True
        for i in range(n):
            row = matrix[i]
            spread = max(max(row), 0) - min(min(row), 0)
            if capacity * spread > widths[i]:
                fits = False
                break
        if not fits:
            continue
        slacks = []
        for nu, beta in polytope.constraints:
            worst = 0
            for j in range(n):
                val = c_scaled * sum(nu[i] * matrix[i][j] for i in range(n))
                if val > worst:
                    worst = val
            slacks.append(int(beta * scale) - worst)
        normals = [nu for nu, _ in polytope.constraints]
        # Iterate the leading axes and solve the last one analytically:
        # each constraint is affine in tau, so the feasible last
        # coordinate is an integer interval.
        last = axis_ranges[-1]
        last_lo, last_hi = last.start, last[-1]
        for prefix in product(*axis_ranges[:-1]):
            lo_t, hi_t = last_lo, last_hi
            feasible = True
            for nu, slack in zip(normals, slacks):
                rem = slack - sum(nu[i] * prefix[i] for i in range(n - 1))
                c = nu[-1]
                if c == 0:
                    if rem < 0:
                        feasible = False
                        break
                elif c > 0:
                    hi_t = min(hi_t, rem // c)
                else:
                    lo_t = max(lo_t, -((-rem) // c))
            if not feasible or lo_t > hi_t:
                continue
            k0 = -((last_lo - lo_t) // step)
            k1 = (hi_t - last_lo) // step
            for k in range(k0, k1 + 1):
                placements.append((matrix, (*prefix, last_lo + k * step)))
    return placements, scale


# Deterministic work caps so that infeasible probe totals fail fast.  A
# probe that gives up early is conservative (the search reports a lower
# bound either way); any certificate it does return is verified exactly.
_PLACEMENT_CAP = 80
_LP_BUDGET = 200


def _trim(placements: list) -> list:
    if len(placements) <= 2 * _PLACEMENT_CAP:
        return placements
    return placements[:_PLACEMENT_CAP] + placements[-_PLACEMENT_CAP:]


def _annotate(placements, scale: int, common: int, capacity: Fraction):
    """Precompute integer scan data per placement at the shared scale
    `common`: vertices, bounding box, inward facet halfspaces, and the
    centroid times (n + 1).  The expensive exact objects are built
    lazily via the trailing (capacity, matrix, tau, scale) tuple.
    """
    factor = common // scale
    entries = []
    for matrix, tau in placements:
        n = len(tau)
        c_int = int(capacity * common)
        base = tuple(t * factor for t in tau)
        iverts = [base]
        for j in range(n):
            iverts.append(
                tuple(base[i] + c_int * matrix[i][j] for i in range(n))
            )
        bbox = tuple(
            (min(v[i] for v in iverts), max(v[i] for v in iverts)) for i in range(n)
        )
        facets = _int_facets(iverts)
        centroid = tuple(sum(v[i] for v in iverts) for i in range(n))
        entries.append((iverts, bbox, facets, centroid, (capacity, matrix, tau, scale)))
    return entries


def _int_facets(vertices) -> list:
    """Inward halfspaces (nu . x > beta) of an integer simplex."""
    n = len(vertices[0])
    facets = []
    for i, excluded in enumerate(vertices):
        others = vertices[:i] + vertices[i + 1 :]
        base = others[0]
        edges = [[p[axis] - base[axis] for axis in range(n)] for p in others[1:]]
        normal = []
        for axis in range(n):
            minor = tuple(
                tuple(row[c] for c in range(n) if c != axis) for row in edges
            )
            sign = -1 if axis % 2 else 1
            normal.append(sign * (_int_det(minor) if minor else 1))
        if all(c == 0 for c in normal):
            continue
        offset = sum(a * x for a, x in zip(normal, base))
        side = sum(a * x for a, x in zip(normal, excluded)) - offset
        if side == 0:
            continue
        if side < 0:
            normal = [-c for c in normal]
            offset = -offset
        facets.append((tuple(normal), offset))
    return facets


def _strictly_inside(point, facets, weight: int = 1) -> bool:
    # `weight` handles points stored as a sum of `weight` vertices.
    return all(
        sum(a * x for a, x in zip(nu, point)) > beta * weight
        for nu, beta in facets
    )


def _build_simplex(entry) -> SimplexImage:
    capacity, matrix, tau, scale = entry[-1]
    g = SpecialAffineTransform(matrix, tuple(Fraction(t, scale) for t in tau))
    return SimplexImage(capacity, g)


def _find_disjoint_pair(first, second, same_list: bool):
    """First pair (lex order) with provably disjoint interiors, or None."""
    budget = _LP_BUDGET
    k = len(first[0][0]) if first else 0  # n + 1 vertices per simplex
    for i, (v1, b1, f1, c1, _) in enumerate(first):
        start = i + 1 if same_list else 0
        for entry2 in second[start:]:
            v2, b2, f2, c2, _ = entry2
            if any(
                hi1 <= lo2 or hi2 <= lo1
                for (lo1, hi1), (lo2, hi2) in zip(b1, b2)
            ):
                return _build_simplex(first[i]), _build_simplex(entry2)
            complete = len(f1) == len(v1) and len(f2) == len(v2)
            if complete and (
                any(_strictly_inside(p, f1) for p in v2)
                or any(_strictly_inside(p, f2) for p in v1)
                or _strictly_inside(c2, f1, k)
                or _strictly_inside(c1, f2, k)
            ):
                continue  # witnessed overlap
            if budget <= 0:
                continue
            budget -= 1
            s1 = _build_simplex(first[i])
            s2 = _build_simplex(entry2)
            if interiors_disjoint(s1, s2):
                return s1, s2
    return None


def search_two_balls(
    domain: ToricDomain, config: SearchConfig
) -> PackingCertificate | None:
    """Bisection on the packed total; returns the best verified certificate,
    or None when no placement verifies at any probed total."""
    polytope = moment_polytope(domain)
    n = polytope.dimension
    if n > SEARCH_DIMENSION_CAP:
        raise ValueError(f"search supports dimension <= {SEARCH_DIMENSION_CAP}")
    box = polytope.bounding_box()  # raises for unbounded input
    matrices = _unimodular_matrices(n, config.matrix_entry_bound)
    eps = rat(config.bisection_tolerance)

    try:
        ceiling = c2b_closed_form(domain).value
        provable_ceiling = True
    except ValueError:
        ceiling = 2 * min(hi - lo for lo, hi in box)
        provable_ceiling = False

    def probe(total: Fraction) -> PackingCertificate | None:
        splits = [(total / 2, total / 2)]
        if not config.equal_balls:
            splits += [(total / 3, 2 * total / 3), (total / 4, 3 * total / 4)]
        for cap_a, cap_b in splits:
            if cap_a <= 0:
                continue
            raw_a, scale_a = _contained_placements(
                polytope, box, cap_a, matrices, config.translation_grid
            )
            if not raw_a:
                continue
            same = cap_a == cap_b
            if same:
                common = math.lcm(scale_a, cap_a.denominator)
                entries_a = _annotate(_trim(raw_a), scale_a, common, cap_a)
                entries_b = entries_a
            else:
                raw_b, scale_b = _contained_placements(
                    polytope, box, cap_b, matrices, config.translation_grid
                )
                common = math.lcm(
                    scale_a, scale_b, cap_a.denominator, cap_b.denominator
                )
                entries_a = _annotate(_trim(raw_a), scale_a, common, cap_a)
                entries_b = _annotate(_trim(raw_b), scale_b, common, cap_b)
            pair = _find_disjoint_pair(entries_a, entries_b, same)
            if pair is not None:
                s1, s2 = pair
                return PackingCertificate(
                    (s1, s2), domain, cap_a + cap_b, verified=True
                )
        return None

    best = probe(ceiling)
    if best is not None and provable_ceiling:
        return best
    if best is not None:
        # Heuristic ceiling turned out reachable: climb until a probe
        # fails, then bisect the remaining gap.
        high = 2 * best.total
        for _ in range(10):
            trial = probe(high)
            if trial is None:
                break
            best = trial
            high = 2 * high
        else:
            return best
        low = best.total
    else:
        low = Fraction(0)
        high = ceiling
    while high - low > eps:
        mid = (low + high) / 2
        cert = probe(mid)
        if cert is not None:
            best = cert
            low = mid
        else:
            high = mid
    return best
