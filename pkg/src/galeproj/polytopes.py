"""Polytopes in H- and V-representation with exact vertex enumeration.

H-polytopes are validated on construction: the solution set must be
nonempty, bounded and full-dimensional, and every row must define a facet.
Vertex enumeration goes through all n-subsets of rows, which is the right
trade-off at the scale this package targets (m up to ~20).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from . import lp
from .complexes import Complex, closure_from_facets
from .errors import (
    DimensionMismatch,
    DuplicateLabels,
    EmptyPolytope,
    IndexOutOfRange,
    NotFullDimensional,
    OriginNotInterior,
    RedundantRow,
    UnboundedPolytope,
)
from .gale import VectorConfig
from .linalg import (
    Mat,
    Vec,
    affine_rank,
    kernel_basis,
    mat,
    mat_vec,
    rank,
    solve_square,
    unit,
    vadd,
    vdot,
    vec,
    vsub,
)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite point set (points need not all be vertices)."""

    points: tuple[Vec, ...]
    dim: int

    def __init__(self, points: Iterable[Iterable]):
        pts = tuple(vec(p) for p in points)
        if not pts:
            raise EmptyPolytope("a V-polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionMismatch("points with mixed dimensions")
        if len(set(pts)) != len(pts):
            raise DuplicateLabels("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", n)

    def f0(self) -> int:
        return len(hull_vertices(self))


@dataclass(frozen=True)
class FaceRecord:
    tight_facets: frozenset[int]
    vertex_coords: Vec | None = None


@dataclass(frozen=True)
class HPolytope:
    """Bounded full-dimensional {x : Ax <= b} with facet-defining rows."""

    A: Mat
    b: Vec
    facet_labels: tuple[int, ...]

    def __init__(self, A: Iterable[Iterable], b: Iterable, facet_labels: Sequence[int] | None = None):
        A = mat(A)
        b = vec(b)
        if not A or len(A) != len(b):
            raise DimensionMismatch("need one rhs entry per row")
        m, n = len(A), len(A[0])
        labels = tuple(facet_labels) if facet_labels is not None else tuple(range(1, m + 1))
        if len(labels) != m or len(set(labels)) != m:
            raise DuplicateLabels("facet labels must be distinct, one per row")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "facet_labels", labels)
        self._validate()

    @property
    def dim(self) -> int:
        return len(self.A[0])

    @property
    def num_facets(self) -> int:
        return len(self.A)

    def row(self, label: int) -> tuple[Vec, Fraction]:
        i = self.facet_labels.index(label)
        return self.A[i], self.b[i]

    def contains(self, x: Vec) -> bool:
        return all(vdot(a, x) <= bi for a, bi in zip(self.A, self.b))

    def _validate(self) -> None:
        m, n = self.num_facets, self.dim
        interior = lp.lp_feasible([lp.lt(a, bi) for a, bi in zip(self.A, self.b)])
        if not interior.feasible:
            relaxed = lp.lp_feasible([lp.le(a, bi) for a, bi in zip(self.A, self.b)])
            if not relaxed.feasible:
                raise EmptyPolytope("the inequality system has no solution")
            raise NotFullDimensional("the solution set has empty interior")
        # bounded iff the recession cone {Ax <= 0} is {0}; equivalently the
        # rows positively span, i.e. +-e_j lies in cone(rows) for every j
        for j in range(n):
            for s in (1, -1):
                target = tuple(Fraction(s if i == j else 0) for i in range(n))
                if lp.cone_combination(list(self.A), target) is None:
                    raise UnboundedPolytope(f"unbounded in direction {'-' if s < 0 else ''}e_{j + 1}")
        # row i defines a facet iff it is not implied by the others (Farkas)
        for i in range(m):
            others = [r for r in range(m) if r != i]
            eq_rows = [
                ([self.A[r][c] for r in others] + [Fraction(0)], self.A[i][c])
                for c in range(n)
            ]
            eq_rows.append(([self.b[r] for r in others] + [Fraction(1)], self.b[i]))
            if lp.nonneg_combination(eq_rows, len(others) + 1) is not None:
                raise RedundantRow(f"row with label {self.facet_labels[i]} defines no facet")


def h_vertices(P: HPolytope) -> list[FaceRecord]:
    """All vertices with exact coordinates and full tight-facet sets.

    Enumerates n-subsets of rows, keeps feasible basic solutions, merges
    duplicates and recomputes tightness against every row, so non-simple
    vertices come out with |I(v)| > n.  Ordered by coordinates.
    """
    m, n = P.num_facets, P.dim
    found: dict[Vec, frozenset[int]] = {}
    for rows in itertools.combinations(range(m), n):
        x = solve_square(tuple(P.A[i] for i in rows), tuple(P.b[i] for i in rows))
        if x is None or x in found or not P.contains(x):
            continue
        tight = frozenset(
            P.facet_labels[i] for i in range(m) if vdot(P.A[i], x) == P.b[i]
        )
        found[x] = tight
    return [FaceRecord(found[x], x) for x in sorted(found)]


def hull_vertex_indices(points: Sequence[Vec]) -> set[int]:
    """Indices whose point is a vertex of the hull and occurs exactly once.

    A point repeated in the input is never reported (its index cannot name
    a vertex unambiguously); a unique point is a vertex iff it is not a
    convex combination of the other distinct values.
    """
    pts = [vec(p) for p in points]
    out = set()
    for i, p in enumerate(pts):
        if any(j != i and q == p for j, q in enumerate(pts)):
            continue
        others = sorted(set(q for q in pts if q != p))
        if not others:
            out.add(i)
        elif lp.convex_combination(others, p) is None:
            out.add(i)
    return out


def hull_vertices(S: VPolytope) -> tuple[int, ...]:
    """Sorted indices of the points that are vertices of conv(S)."""
    return tuple(sorted(hull_vertex_indices(S.points)))


def is_simple(P: HPolytope) -> bool:
    """True iff every vertex lies on exactly dim-many facets."""
    n = P.dim
    return all(len(rec.tight_facets) == n for rec in h_vertices(P))


def product(P: HPolytope, Q: HPolytope) -> HPolytope:
    """Cartesian product as a block-diagonal system; P's facets first."""
    n1, n2 = P.dim, Q.dim
    zero1, zero2 = (Fraction(0),) * n1, (Fraction(0),) * n2
    A = [tuple(a) + zero2 for a in P.A] + [zero1 + tuple(a) for a in Q.A]
    b = tuple(P.b) + tuple(Q.b)
    return HPolytope(A, b)


def recentre(P: HPolytope) -> HPolytope:
    """Translate so that 0 is strictly interior (max-slack interior point)."""
    interior = lp.lp_feasible([lp.lt(a, bi) for a, bi in zip(P.A, P.b)])
    if not interior.feasible:
        raise NotFullDimensional("no interior point to recentre on")
    x0 = interior.witness
    b = tuple(bi - vdot(a, x0) for a, bi in zip(P.A, P.b))
    return HPolytope(P.A, b, P.facet_labels)


def dual_generators(P: HPolytope) -> VectorConfig:
    """Vertices ell_i = a_i / b_i of the polar dual, labeled by facets.

    Requires 0 in the interior (all b_i > 0); row irredundancy guarantees
    that every ell_i really is a vertex of the dual.
    """
    if any(bi <= 0 for bi in P.b):
        raise OriginNotInterior("dualization needs 0 strictly inside, i.e. b > 0")
    vectors = tuple(tuple(x / bi for x in a) for a, bi in zip(P.A, P.b))
    return VectorConfig(vectors, P.facet_labels)


def minkowski_vertex_test(choice: Sequence[int], polys: Sequence[VPolytope]) -> bool:
    """Does the chosen vertex tuple sum to a vertex of the Minkowski sum?

    True iff some direction c has strictly larger inner product on each
    chosen point than on every other point of its polytope, i.e. the open
    normal cones of the chosen vertices intersect.
    """
    if len(choice) != len(polys):
        raise DimensionMismatch("one chosen vertex per summand")
    dims = {Q.dim for Q in polys}
    if len(dims) != 1:
        raise DimensionMismatch("summands must share an ambient dimension")
    d = dims.pop()
    cons = []
    for idx, Q in zip(choice, polys):
        if not 0 <= idx < len(Q.points):
            raise IndexOutOfRange(f"vertex index {idx} out of range")
        v = Q.points[idx]
        cons.extend(lp.lt(vsub(w, v), 0) for w in Q.points if w != v)
    if not cons:
        return True  # all summands are single points
    return lp.lp_feasible(cons, dim=d).feasible


def minkowski_sum_vertices(polys: Sequence[VPolytope]) -> list[tuple[tuple[int, ...], Vec]]:
    """All vertex-sum tuples that pass the normal-cone test, with their sums.

    Ordered lexicographically by choice; the count is bounded by the
    product of the summand vertex counts.
    """
    out = []
    for choice in itertools.product(*(range(len(Q.points)) for Q in polys)):
        if minkowski_vertex_test(choice, polys):
            point = tuple(
                sum((Q.points[i][c] for i, Q in zip(choice, polys)), Fraction(0))
                for c in range(polys[0].dim)
            )
            out.append((choice, point))
    return out


def trivial_upper_bound(f0s: Sequence[int]) -> int:
    """Product of the vertex counts: every sum vertex is a vertex-sum tuple."""
    if not f0s:
        raise DimensionMismatch("need at least one summand")
    return prod(f0s)


def facet_description(S: VPolytope) -> HPolytope:
    """Exact H-representation of a full-dimensional V-polytope.

    Brute force over n-subsets spanning candidate hyperplanes; a candidate
    survives if all points lie on one side.  Only intended for desk-scale
    inputs (the package never needs more).
    """
    n = S.dim
    if affine_rank(S.points) != n:
        raise NotFullDimensional("V-polytope is lower-dimensional")
    rows: set[tuple[Vec, Fraction]] = set()
    for subset in itertools.combinations(S.points, n):
        if n == 1:
            normal: Vec = (Fraction(1),)
        else:
            diffs = mat([vsub(p, subset[0]) for p in subset[1:]])
            if rank(diffs) != n - 1:
                continue
            normal = tuple(col[0] for col in kernel_basis(diffs))
        beta = vdot(normal, subset[0])
        values = [vdot(normal, p) for p in S.points]
        if all(v <= beta for v in values):
            rows.add(_canonical_row(normal, beta))
        if all(v >= beta for v in values):
            rows.add(_canonical_row(tuple(-x for x in normal), -beta))
    ordered = sorted(rows)
    return HPolytope([r[0] for r in ordered], [r[1] for r in ordered])


def _canonical_row(a: Vec, beta: Fraction) -> tuple[Vec, Fraction]:
    """Scale (a, beta) by a positive rational to coprime integer form."""
    denom = 1
    for x in a + (beta,):
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in a] + [int(beta * denom)]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def sum_as_projection(P: VPolytope, Q: VPolytope) -> tuple[HPolytope, Mat]:
    """Product H-polytope and the summing projection [I_d | I_d].

    The hull of the projected product vertices equals P + Q, so the
    Minkowski sum is literally a shadow of the product.
    """
    if P.dim != Q.dim:
        raise DimensionMismatch("summands must share an ambient dimension")
    d = P.dim
    prod_poly = product(facet_description(P), facet_description(Q))
    proj = tuple(
        tuple(Fraction(1 if (c == j or c == d + j) else 0) for c in range(2 * d))
        for j in range(d)
    )
    return prod_poly, proj


def dual_boundary_complex(P: HPolytope) -> Complex:
    """Boundary complex of the polar dual of a simple polytope.

    Vertices are the facet labels of P; the facets are the tight sets I(v)
    of the vertices of P.
    """
    records = h_vertices(P)
    n = P.dim
    if any(len(r.tight_facets) != n for r in records):
        raise ValueError("dual boundary complex needs a simple polytope")
    return closure_from_facets(P.facet_labels, [r.tight_facets for r in records])
