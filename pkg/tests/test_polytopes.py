import itertools
import random
from fractions import Fraction

import pytest

from galeproj.errors import (
    DimensionMismatch,
    DuplicateLabels,
    EmptyPolytope,
    IndexOutOfRange,
    NotFullDimensional,
    OriginNotInterior,
    RedundantRow,
    UnboundedPolytope,
)
from galeproj.linalg import mat_vec, vadd, vec
from galeproj.polytopes import (
    HPolytope,
    VPolytope,
    dual_boundary_complex,
    dual_generators,
    facet_description,
    h_vertices,
    hull_vertex_indices,
    hull_vertices,
    is_simple,
    minkowski_sum_vertices,
    minkowski_vertex_test,
    product,
    recentre,
    sum_as_projection,
    trivial_upper_bound,
)
from helpers import random_points, separation_hull_vertices

UNIT_SQUARE = HPolytope([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])
TRIANGLE = VPolytope([(0, 0), (1, 0), (0, 1)])


def coupled_triangles(e):
    e = Fraction(e)
    rows = [
        [1, 1, 0, 0],
        [-1, 1, 0, 0],
        [0, -1, -e, 0],
        [0, -e, -1, 0],
        [0, 0, 1, 1],
        [0, 0, 1, -1],
    ]
    return HPolytope(rows, [1] * 6)


class TestConstruction:
    def test_empty_rejected(self):
        with pytest.raises(EmptyPolytope):
            HPolytope([[1], [-1]], [0, -1])

    def test_unbounded_rejected(self):
        with pytest.raises(UnboundedPolytope):
            HPolytope([[1, 0], [0, 1]], [1, 1])

    def test_lower_dimensional_rejected(self):
        with pytest.raises(NotFullDimensional):
            HPolytope([[1, 0], [-1, 0], [0, 1], [0, -1]], [0, 0, 1, 1])

    def test_redundant_row_rejected(self):
        with pytest.raises(RedundantRow):
            HPolytope([[1, 0], [-1, 0], [0, 1], [0, -1], [1, 0]], [1, 1, 1, 1, 2])

    def test_scaled_duplicate_row_rejected(self):
        with pytest.raises(RedundantRow):
            HPolytope([[1, 0], [2, 0], [-1, 0], [0, 1], [0, -1]], [1, 2, 1, 1, 1])

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DuplicateLabels):
            HPolytope([[1], [-1]], [1, 1], [1, 1])

    def test_vpolytope_distinct_points(self):
        with pytest.raises(DuplicateLabels):
            VPolytope([(0, 0), (0, 0)])


class TestVertexEnumeration:
    def test_unit_square(self):
        recs = h_vertices(UNIT_SQUARE)
        assert len(recs) == 4
        assert all(len(r.tight_facets) == 2 for r in recs)
        assert {r.vertex_coords for r in recs} == {
            vec([1, 1]), vec([1, -1]), vec([-1, 1]), vec([-1, -1])
        }

    def test_simplex(self):
        simp = HPolytope([[-1, 0, 0], [0, -1, 0], [0, 0, -1], [1, 1, 1]], [0, 0, 0, 1])
        assert len(h_vertices(simp)) == 4

    def test_coupled_triangles_quarter(self):
        P = coupled_triangles(Fraction(1, 4))
        recs = h_vertices(P)
        assert len(recs) == 9
        assert all(len(r.tight_facets) == 4 for r in recs)
        expected = {
            frozenset(a) | frozenset(b)
            for a in itertools.combinations((1, 2, 3), 2)
            for b in itertools.combinations((4, 5, 6), 2)
        }
        assert {r.tight_facets for r in recs} == expected

    def test_nonsimple_vertex_merged(self):
        # square pyramid: apex lies on all four slanted facets
        pyramid = HPolytope(
            [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1], [0, 0, -1]],
            [1, 1, 1, 1, 0],
        )
        recs = h_vertices(pyramid)
        assert len(recs) == 5
        apex = [r for r in recs if r.vertex_coords == vec([0, 0, 1])]
        assert len(apex) == 1 and len(apex[0].tight_facets) == 4
        assert not is_simple(pyramid)


class TestHull:
    def test_interior_point_dropped(self):
        V = VPolytope([(0, 0), (1, 0), (0, 1), (Fraction(1, 4), Fraction(1, 4))])
        assert hull_vertices(V) == (0, 1, 2)

    def test_collinear(self):
        assert hull_vertices(VPolytope([(0, 0), (1, 1), (2, 2)])) == (0, 2)

    def test_duplicate_values_not_reported(self):
        pts = [vec([0, 0]), vec([1, 0]), vec([1, 0]), vec([0, 1])]
        assert hull_vertex_indices(pts) == {0, 3}

    def test_matches_separation_oracle_on_random_sets(self):
        rng = random.Random(5150)
        for _ in range(40):
            d = rng.randint(1, 3)
            pts = [vec(p) for p in random_points(rng, d, rng.randint(1, 7))]
            assert hull_vertex_indices(pts) == separation_hull_vertices(pts)


class TestSimple:
    def test_cube_simple(self):
        cube = HPolytope(
            [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
            [1] * 6,
        )
        assert is_simple(cube)

    def test_coupled_triangles_simple(self):
        assert is_simple(coupled_triangles(Fraction(1, 4)))


class TestProduct:
    def test_square_is_product_of_segments(self):
        seg = HPolytope([[1], [-1]], [1, 1])
        sq = product(seg, seg)
        assert sq.num_facets == 4
        assert len(h_vertices(sq)) == 4

    def test_product_of_triangles(self):
        tri = HPolytope([[1, 1], [-1, 1], [0, -1]], [1, 1, 1])
        pp = product(tri, tri)
        assert pp.num_facets == 6
        assert len(h_vertices(pp)) == 9

    def test_facet_counts_add_and_incidences_pair(self):
        seg = HPolytope([[1], [-1]], [2, 0])
        tri = HPolytope([[1, 1], [-1, 1], [0, -1]], [1, 1, 1])
        pp = product(seg, tri)
        assert pp.num_facets == seg.num_facets + tri.num_facets
        seg_recs = h_vertices(seg)
        tri_recs = h_vertices(tri)
        expected = set()
        for a in seg_recs:
            for b in tri_recs:
                shifted = frozenset(l + seg.num_facets for l in b.tight_facets)
                expected.add(a.tight_facets | shifted)
        assert {r.tight_facets for r in h_vertices(pp)} == expected
        pairs = {a.vertex_coords + b.vertex_coords for a in seg_recs for b in tri_recs}
        assert {r.vertex_coords for r in h_vertices(pp)} == pairs


class TestRecentre:
    def test_segment(self):
        seg = HPolytope([[1], [-1]], [2, 0])  # [0, 2]
        moved = recentre(seg)
        assert all(bi > 0 for bi in moved.b)

    def test_already_centred_system_stays_valid(self):
        P = coupled_triangles(Fraction(1, 4))
        assert all(bi > 0 for bi in P.b)
        moved = recentre(P)
        assert len(h_vertices(moved)) == 9

    def test_simplex_shifted_interior(self):
        simp = HPolytope([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
        moved = recentre(simp)
        zero = vec([0, 0])
        assert all(bi > 0 for bi in moved.b)
        # 0 is strictly inside the translated copy
        assert all(mat_vec(moved.A, zero)[i] < moved.b[i] for i in range(3))


class TestDualGenerators:
    def test_square(self):
        g = dual_generators(UNIT_SQUARE)
        assert set(g.vectors) == {vec([1, 0]), vec([-1, 0]), vec([0, 1]), vec([0, -1])}

    def test_rows_divided_by_rhs(self):
        P = coupled_triangles(Fraction(1, 2))
        g = dual_generators(P)
        assert g.vectors == P.A  # b = 1 everywhere
        assert g.labels == P.facet_labels

    def test_scale_invariance(self):
        a = HPolytope([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])
        b = HPolytope([[2, 0], [-1, 0], [0, 1], [0, -1]], [2, 1, 1, 1])
        assert dual_generators(a).vectors == dual_generators(b).vectors

    def test_origin_must_be_interior(self):
        shifted = HPolytope([[1], [-1]], [3, -1])  # [1, 3]
        with pytest.raises(OriginNotInterior):
            dual_generators(shifted)


class TestMinkowski:
    def test_homothetic_squares(self):
        sq = VPolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert minkowski_vertex_test((3, 3), [sq, sq])

    def test_mismatched_normal_cones(self):
        assert not minkowski_vertex_test((1, 2), [TRIANGLE, TRIANGLE])

    def test_two_triangles_at_most_six(self):
        rng = random.Random(99)
        for _ in range(10):
            pts = random_points(rng, 2, 3)
            other = random_points(rng, 2, 3)
            p, q = VPolytope(pts), VPolytope(other)
            hits = sum(
                minkowski_vertex_test(c, [p, q])
                for c in itertools.product(range(3), range(3))
            )
            assert hits <= 6

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            minkowski_vertex_test((0, 7), [TRIANGLE, TRIANGLE])

    def test_generic_segments_sum_to_quadrilateral(self):
        s1 = VPolytope([(0, 0), (1, 0)])
        s2 = VPolytope([(0, 0), (0, 1)])
        assert len(minkowski_sum_vertices([s1, s2])) == 4

    def test_triangle_plus_reflection_is_hexagon(self):
        neg = VPolytope([tuple(-x for x in p) for p in TRIANGLE.points])
        sums = minkowski_sum_vertices([TRIANGLE, neg])
        assert len(sums) == 6
        # frozen oracle: hull of all nine pairwise sums
        candidates = [vadd(p, q) for p in TRIANGLE.points for q in neg.points]
        distinct = sorted(set(candidates))
        hull = {distinct[i] for i in hull_vertex_indices(distinct)}
        assert {pt for _, pt in sums} == hull

    def test_axis_aligned_squares(self):
        sq = VPolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(minkowski_sum_vertices([sq, sq])) == 4

    def test_point_summand_translates(self):
        pt = VPolytope([(2, 3)])
        sums = minkowski_sum_vertices([TRIANGLE, pt])
        assert {p for _, p in sums} == {vadd(v, vec([2, 3])) for v in TRIANGLE.points}

    def test_translation_invariance(self):
        rng = random.Random(4242)
        for _ in range(10):
            p = VPolytope(random_points(rng, 2, 4))
            q = VPolytope(random_points(rng, 2, 3))
            shift = vec([rng.randint(-5, 5), rng.randint(-5, 5)])
            q2 = VPolytope([vadd(pt, shift) for pt in q.points])
            for choice in itertools.product(range(4), range(3)):
                assert minkowski_vertex_test(choice, [p, q]) == minkowski_vertex_test(
                    choice, [p, q2]
                )

    def test_oracle_equivalence_small_random(self):
        rng = random.Random(2718)
        for _ in range(15):
            d = rng.randint(2, 3)
            r = rng.randint(2, 3)
            polys = [VPolytope(random_points(rng, d, rng.randint(2, 4))) for _ in range(r)]
            sums = minkowski_sum_vertices(polys)
            assert len(sums) <= trivial_upper_bound([len(p.points) for p in polys])
            candidates = [
                tuple(sum(p.points[i][c] for i, p in zip(choice, polys)) for c in range(d))
                for choice in itertools.product(*(range(len(p.points)) for p in polys))
            ]
            distinct = sorted(set(candidates))
            hull = {distinct[i] for i in hull_vertex_indices(distinct)}
            assert {pt for _, pt in sums} == hull


class TestTrivialBound:
    def test_values(self):
        assert trivial_upper_bound([3, 3]) == 9
        assert trivial_upper_bound([1, 7]) == 7
        assert trivial_upper_bound([4, 4, 4]) == 64

    def test_empty_rejected(self):
        with pytest.raises(DimensionMismatch):
            trivial_upper_bound([])


class TestSumAsProjection:
    def test_two_segments(self):
        s1 = VPolytope([(0,), (1,)])
        s2 = VPolytope([(0,), (3,)])
        prod_poly, proj = sum_as_projection(s1, s2)
        assert prod_poly.dim == 2 and len(h_vertices(prod_poly)) == 4
        images = {mat_vec(proj, r.vertex_coords) for r in h_vertices(prod_poly)}
        assert images == {(Fraction(0),), (Fraction(1),), (Fraction(3),), (Fraction(4),)}

    def test_two_triangles_project_to_sum(self):
        neg = VPolytope([tuple(-x for x in p) for p in TRIANGLE.points])
        prod_poly, proj = sum_as_projection(TRIANGLE, neg)
        assert prod_poly.dim == 4
        images = [mat_vec(proj, r.vertex_coords) for r in h_vertices(prod_poly)]
        distinct = sorted(set(images))
        hull = {distinct[i] for i in hull_vertex_indices(distinct)}
        direct = {pt for _, pt in minkowski_sum_vertices([TRIANGLE, neg])}
        assert hull == direct

    def test_point_summand_is_lower_dimensional(self):
        pt = VPolytope([(2, 3)])
        with pytest.raises(NotFullDimensional):
            sum_as_projection(TRIANGLE, pt)

    def test_facet_description_roundtrip(self):
        rng = random.Random(1234)
        for _ in range(10):
            pts = random_points(rng, 2, 5)
            V = VPolytope(pts)
            hull_idx = hull_vertices(V)
            H = facet_description(V)
            assert {r.vertex_coords for r in h_vertices(H)} == {
                V.points[i] for i in hull_idx
            }


def test_dual_boundary_complex_of_triangle_product():
    tri = HPolytope([[1, 1], [-1, 1], [0, -1]], [1, 1, 1])
    pp = product(tri, tri)
    K = dual_boundary_complex(pp)
    assert len(K.vertices) == 6
    assert all(len(f) == 4 for f in K.facets)
    assert len(K.facets) == 9
