"""Exact rational polytope geometry for moment images.

Everything here is a pure value: vectors are tuples of Fractions,
polytopes are canonical H-representations with coprime integer normals,
and the transform group is SL_n(Z) acting together with rational
translations.  No floating point enters any predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linprog import INFEASIBLE, OPTIMAL, UNBOUNDED, maximize_over_polytope, solve_lp
from .rationals import fmt, is_infinite, rat

Vector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


class DegenerateSimplexError(ValueError):
    """A simplex has affinely dependent vertices."""


def vec(*coords) -> Vector:
    return tuple(rat(c) for c in coords)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor != 0:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


# ---------------------------------------------------------------------------
# Special affine transforms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpecialAffineTransform:
    """An element (M, tau) of SL_n(Z) x R^n acting by x -> Mx + tau."""

    matrix: tuple[tuple[int, ...], ...]
    translation: Vector

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix) or len(self.translation) != n:
            raise DimensionMismatch("matrix and translation sizes disagree")
        if any(not isinstance(e, int) for row in self.matrix for e in row):
            raise ValueError("matrix entries must be integers")
        if _det([[Fraction(e) for e in row] for row in self.matrix]) != 1:
            raise ValueError("matrix determinant must be +1")

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @staticmethod
    def identity(n: int) -> "SpecialAffineTransform":
        matrix = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return SpecialAffineTransform(matrix, tuple(Fraction(0) for _ in range(n)))

    def apply(self, point: Vector) -> Vector:
        if len(point) != self.dimension:
            raise DimensionMismatch("point dimension mismatch")
        return tuple(
            sum((Fraction(m) * x for m, x in zip(row, point)), t)
            for row, t in zip(self.matrix, self.translation)
        )

    def compose(self, other: "SpecialAffineTransform") -> "SpecialAffineTransform":
        """Return self o other, i.e. x -> self(other(x))."""
        if self.dimension != other.dimension:
            raise DimensionMismatch("cannot compose transforms of different dimension")
        n = self.dimension
        matrix = tuple(
            tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        translation = self.apply(other.translation)
        return SpecialAffineTransform(matrix, translation)

    def inverse(self) -> "SpecialAffineTransform":
        # The adjugate of an SL_n(Z) matrix is its integer inverse.
        n = self.dimension
        rows = [[Fraction(e) for e in row] for row in self.matrix]
        inv = []
        for i in range(n):
            inv_row = []
            for j in range(n):
                minor = [
                    [rows[r][c] for c in range(n) if c != i] for r in range(n) if r != j
                ]
                sign = -1 if (i + j) % 2 else 1
                entry = sign * (_det(minor) if minor else Fraction(1))
                inv_row.append(int(entry))
            inv.append(tuple(inv_row))
        matrix = tuple(inv)
        translation = tuple(
            -sum((Fraction(m) * t for m, t in zip(row, self.translation)), Fraction(0))
            for row in matrix
        )
        return SpecialAffineTransform(matrix, translation)


# ---------------------------------------------------------------------------
# H-representation polytopes
# ---------------------------------------------------------------------------


def _normalize_constraint(normal, offset) -> tuple[tuple[int, ...], Fraction]:
    """Scale a halfspace nu . x <= beta so nu has coprime integer entries."""
    normal = [rat(c) for c in normal]
    offset = rat(offset)
    if all(c == 0 for c in normal):
        raise ValueError("zero normal in halfspace")
    denom = math.lcm(*(c.denominator for c in normal))
    ints = [int(c * denom) for c in normal]
    g = math.gcd(*(abs(i) for i in ints))
    scale = Fraction(denom, g)
    return tuple(i // g for i in ints), offset * scale


@dataclass(frozen=True)
class Polytope:
    """Intersection of closed halfspaces nu . x <= beta, in canonical form."""

    constraints: tuple[tuple[tuple[int, ...], Fraction], ...]

    @staticmethod
    def from_halfspaces(halfspaces) -> "Polytope":
        normalized = sorted(set(_normalize_constraint(nu, beta) for nu, beta in halfspaces))
        dims = {len(nu) for nu, _ in normalized}
        if len(dims) != 1:
            raise DimensionMismatch("halfspaces of mixed dimension")
        return Polytope(tuple(normalized))

    @property
    def dimension(self) -> int:
        return len(self.constraints[0][0])

    def contains_point(self, point: Vector) -> bool:
        if len(point) != self.dimension:
            raise DimensionMismatch("point dimension mismatch")
        return all(_dot(nu, point) <= beta for nu, beta in self.constraints)

    def transform(self, g: SpecialAffineTransform) -> "Polytope":
        """The image polytope g(P) = {Mx + tau : x in P}."""
        inv = g.inverse()
        halfspaces = []
        for nu, beta in self.constraints:
            # nu . g^{-1}(y) <= beta  becomes  (nu M^{-1}) . y <= beta + nu . M^{-1} tau.
            new_normal = tuple(
                sum(Fraction(nu[i]) * Fraction(inv.matrix[i][j]) for i in range(self.dimension))
                for j in range(self.dimension)
            )
            shift = -_dot(nu, inv.translation)
            halfspaces.append((new_normal, beta + shift))
        return Polytope.from_halfspaces(halfspaces)

    def scale(self, factor: Fraction) -> "Polytope":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Polytope.from_halfspaces(
            [(nu, beta * factor) for nu, beta in self.constraints]
        )

    def bounding_box(self) -> list[tuple[Fraction, Fraction]]:
        """Exact per-axis extents, via linear programming.

        Raises ValueError when the polytope is empty or unbounded.
        """
        n = self.dimension
        box = []
        for axis in range(n):
            extents = []
            for sign in (1, -1):
                objective = [Fraction(sign if j == axis else 0) for j in range(n)]
                status, value = self._maximize(objective)
                if status == UNBOUNDED:
                    raise ValueError("polytope is unbounded")
                if status == INFEASIBLE:
                    raise ValueError("polytope is empty")
                extents.append(sign * value)
            box.append((extents[1], extents[0]))
        return box

    def _maximize(self, objective) -> tuple[str, Fraction | None]:
        # Split free variables as x = u - v with u, v >= 0.
        n = self.dimension
        a_ub = []
        b_ub = []
        for nu, beta in self.constraints:
            row = [Fraction(c) for c in nu] + [-Fraction(c) for c in nu]
            a_ub.append(row)
            b_ub.append(beta)
        doubled = list(objective) + [-c for c in objective]
        return maximize_over_polytope(doubled, a_ub, b_ub)


def standard_simplex_polytope(capacity: Fraction, n: int) -> Polytope:
    """H-rep of the closed simplex with vertices 0, a e_1, ..., a e_n."""
    capacity = rat(capacity)
    halfspaces = [(tuple(-1 if j == i else 0 for j in range(n)), Fraction(0)) for i in range(n)]
    halfspaces.append((tuple(1 for _ in range(n)), capacity))
    return Polytope.from_halfspaces(halfspaces)


# ---------------------------------------------------------------------------
# Toric domains
# ---------------------------------------------------------------------------

ELLIPSOID = "ellipsoid"
POLYDISK = "polydisk"
POLYTOPE = "polytope"


@dataclass(frozen=True)
class ToricDomain:
    """An ellipsoid E(a), polydisk P(a), or general moment polytope.

    Ellipsoid and polydisk parameters are stored sorted nondecreasing;
    ellipsoid entries may be the +inf sentinel (cylinder factors).
    """

    kind: str
    params: tuple = ()
    polytope: Polytope | None = None

    def __post_init__(self):
        if self.kind not in (ELLIPSOID, POLYDISK, POLYTOPE):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == POLYTOPE:
            if self.polytope is None:
                raise ValueError("polytope kind requires an H-rep")
            return
        if not self.params:
            raise ValueError("at least one parameter required")
        if any(not is_infinite(a) and a <= 0 for a in self.params):
            raise ValueError("parameters must be positive")
        if list(self.params) != sorted(self.params):
            raise ValueError("parameters must be sorted nondecreasing")
        if is_infinite(self.params[0]):
            raise ValueError("smallest parameter must be finite")
        if self.kind == POLYDISK and any(is_infinite(a) for a in self.params):
            raise ValueError("polydisk factors must be finite")

    @property
    def dimension(self) -> int:
        if self.kind == POLYTOPE:
            return self.polytope.dimension
        return len(self.params)

    def describe(self) -> str:
        if self.kind == POLYTOPE:
            return f"polytope in dimension {self.dimension}"
        letter = "E" if self.kind == ELLIPSOID else "P"
        return f"{letter}({', '.join(fmt(a) for a in self.params)})"


def ellipsoid(*params) -> ToricDomain:
    values = sorted(rat(p) for p in params)
    return ToricDomain(ELLIPSOID, tuple(values))


def polydisk(*params) -> ToricDomain:
    values = sorted(rat(p) for p in params)
    return ToricDomain(POLYDISK, tuple(values))


def ball(capacity) -> ToricDomain:
    return ellipsoid(capacity, capacity)


def polytope_domain(polytope: Polytope) -> ToricDomain:
    return ToricDomain(POLYTOPE, polytope=polytope)


def moment_polytope(domain: ToricDomain) -> Polytope:
    """Image of the domain under z -> (pi |z_1|^2, ..., pi |z_n|^2)."""
    n = domain.dimension
    if domain.kind == POLYTOPE:
        return domain.polytope
    halfspaces = [(tuple(-1 if j == i else 0 for j in range(n)), Fraction(0)) for i in range(n)]
    if domain.kind == ELLIPSOID:
        normal = tuple(
            Fraction(0) if is_infinite(a) else 1 / a for a in domain.params
        )
        halfspaces.append((normal, Fraction(1)))
    else:
        for i, a in enumerate(domain.params):
            halfspaces.append((tuple(1 if j == i else 0 for j in range(n)), a))
    return Polytope.from_halfspaces(halfspaces)


def scale_domain(domain: ToricDomain, factor) -> ToricDomain:
    """Rescale moment coordinates by factor (the area rescaling sqrt(factor) U)."""
    factor = rat(factor)
    if is_infinite(factor) or factor <= 0:
        raise ValueError("scale factor must be a positive rational")
    if domain.kind == POLYTOPE:
        return polytope_domain(domain.polytope.scale(factor))
    params = tuple(a if is_infinite(a) else a * factor for a in domain.params)
    return ToricDomain(domain.kind, params)


# ---------------------------------------------------------------------------
# Simplex images
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplexImage:
    """The image of the standard simplex of a given capacity under g."""

    capacity: Fraction
    transform: SpecialAffineTransform

    def __post_init__(self):
        if rat(self.capacity) <= 0:
            raise ValueError("capacity must be positive")

    @property
    def dimension(self) -> int:
        return self.transform.dimension


def standard_simplex(capacity, n: int) -> SimplexImage:
    return SimplexImage(rat(capacity), SpecialAffineTransform.identity(n))


def simplex_vertices(simplex: SimplexImage) -> list[Vector]:
    n = simplex.dimension
    a = rat(simplex.capacity)
    base = [tuple(Fraction(0) for _ in range(n))]
    base += [tuple(a if j == i else Fraction(0) for j in range(n)) for i in range(n)]
    return [simplex.transform.apply(v) for v in base]


def contains(polytope: Polytope, simplex: SimplexImage) -> bool:
    """Closed containment; by convexity it suffices to test the vertices."""
    if polytope.dimension != simplex.dimension:
        raise DimensionMismatch("polytope and simplex dimensions disagree")
    return all(polytope.contains_point(v) for v in simplex_vertices(simplex))


def _check_full_dimensional(vertices: list[Vector]) -> None:
    v0 = vertices[0]
    edges = [[b - a for a, b in zip(v0, v)] for v in vertices[1:]]
    if _det(edges) == 0:
        raise DegenerateSimplexError("simplex has zero volume")


def interiors_disjoint(s1: SimplexImage, s2: SimplexImage) -> bool:
    """True iff the open simplices do not meet.

    Decided exactly: the interiors of two full-dimensional convex bodies
    intersect iff the LP max{t : sum l_i v_i = sum m_j w_j, coordinates
    >= t, barycentric sums = 1} has a positive optimum.
    """
    if s1.dimension != s2.dimension:
        raise DimensionMismatch("simplex dimensions disagree")
    n = s1.dimension
    v = simplex_vertices(s1)
    w = simplex_vertices(s2)
    _check_full_dimensional(v)
    _check_full_dimensional(w)

    if _boxes_disjoint(v, w):
        return True
    if _separated_by_facet(v, w) or _separated_by_facet(w, v):
        return True

    # Variables: l_0..l_n, m_0..m_n, t (all >= 0), with the true
    # barycentric weights being l_i + t and m_j + t.
    k = n + 1
    nvars = 2 * k + 1
    a_eq = []
    b_eq = []
    for axis in range(n):
        row = [v[i][axis] for i in range(k)]
        row += [-w[j][axis] for j in range(k)]
        row.append(sum(v[i][axis] for i in range(k)) - sum(w[j][axis] for j in range(k)))
        a_eq.append(row)
        b_eq.append(Fraction(0))
    a_eq.append([Fraction(1)] * k + [Fraction(0)] * k + [Fraction(k)])
    b_eq.append(Fraction(1))
    a_eq.append([Fraction(0)] * k + [Fraction(1)] * k + [Fraction(k)])
    b_eq.append(Fraction(1))
    objective = [Fraction(0)] * (nvars - 1) + [Fraction(1)]
    status, _, value = solve_lp(objective, a_eq, b_eq)
    if status == INFEASIBLE:
        return True
    assert status == OPTIMAL
    return value == 0


def _inward_facets(vertices: list[Vector]) -> list[tuple[Vector, Fraction]]:
    """Halfspaces nu . x > beta whose strict intersection is the interior."""
    n = len(vertices[0])
    facets = []
    for i, excluded in enumerate(vertices):
        others = vertices[:i] + vertices[i + 1 :]
        base = others[0]
        edges = [[p[axis] - base[axis] for axis in range(n)] for p in others[1:]]
        normal = _null_covector(edges, n)
        if normal is None:
            continue
        offset = _dot(normal, base)
        side = _dot(normal, excluded) - offset
        if side == 0:
            continue
        if side < 0:
            normal = tuple(-c for c in normal)
            offset = -offset
        facets.append((normal, offset))
    return facets


def open_overlap_witness(v: list[Vector], w: list[Vector]) -> bool:
    """Cheap sufficient test that two open simplices intersect.

    True when a vertex or the centroid of one simplex lies strictly
    inside the other; False is inconclusive (fall back to the LP).
    """
    for a, b in ((v, w), (w, v)):
        facets = _inward_facets(a)
        if len(facets) != len(a):
            continue
        k = len(b)
        centroid = tuple(sum(p[i] for p in b) / k for i in range(len(b[0])))
        for point in [*b, centroid]:
            if all(_dot(nu, point) - beta > 0 for nu, beta in facets):
                return True
    return False


def _boxes_disjoint(v: list[Vector], w: list[Vector]) -> bool:
    n = len(v[0])
    for axis in range(n):
        if max(p[axis] for p in v) <= min(p[axis] for p in w):
            return True
        if max(p[axis] for p in w) <= min(p[axis] for p in v):
            return True
    return False


def _separated_by_facet(v: list[Vector], w: list[Vector]) -> bool:
    """Try the facet hyperplanes of hull(v) as separators (cheap pre-check)."""
    n = len(v[0])
    for facet in combinations(range(len(v)), n):
        base = v[facet[0]]
        edges = [[v[i][axis] - base[axis] for axis in range(n)] for i in facet[1:]]
        normal = _null_covector(edges, n)
        if normal is None:
            continue
        beta = _dot(normal, base)
        side_v = [_dot(normal, p) - beta for p in v]
        side_w = [_dot(normal, p) - beta for p in w]
        if max(side_v) <= 0 and min(side_w) >= 0:
            return True
        if min(side_v) >= 0 and max(side_w) <= 0:
            return True
    return False


def _null_covector(edges: list[list[Fraction]], n: int) -> Vector | None:
    """A nonzero covector orthogonal to n-1 edge vectors, or None."""
    if n == 1:
        return (Fraction(1),)
    normal = []
    for axis in range(n):
        minor = [[row[c] for c in range(n) if c != axis] for row in edges]
        sign = -1 if axis % 2 else 1
        normal.append(sign * _det(minor))
    if all(c == 0 for c in normal):
        return None
    return tuple(normal)
