import random
from fractions import Fraction

import pytest

import oracles
from linkinv import laurent, polytope
from linkinv.polytope import (
    Face,
    difference_body,
    face_of,
    hull,
    polar_dual,
    polytope_equal,
    product_with_segment,
    vertex_facet_count,
    vertex_valence,
)

F = Fraction


def random_points(rng, dim, count, span=3):
    return [
        tuple(rng.randint(-span, span) for _ in range(dim)) for _ in range(count)
    ]


class TestHull:
    def test_square_interior_point_dropped(self):
        P = hull([(0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), F(1, 2))])
        assert P.num_vertices() == 4
        assert (F(1, 2), F(1, 2)) not in P.vertices

    def test_mt_support_sixteen_vertices(self):
        P = hull(laurent.mt_link_polynomial().support())
        assert P.num_vertices() == 16
        assert all(c > 0 for _, c in P.facets)  # origin strictly interior

    def test_single_point(self):
        P = hull([(2, 3, 4)])
        assert P.dim == 0 and P.num_vertices() == 1

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            hull([(0, 0), (1, 1, 1)])

    def test_degenerate_segment(self):
        P = hull([(0, 0, 0), (1, 1, 0), (2, 2, 0)])
        assert P.dim == 1 and P.num_vertices() == 2

    def test_facets_contain_enough_points_and_none_violate(self):
        rng = random.Random(17)
        for _ in range(25):
            dim = rng.randint(2, 3)
            pts = random_points(rng, dim, rng.randint(dim + 1, 8))
            P = hull(pts)
            for n, c in P.facets:
                assert all(sum(a * b for a, b in zip(n, p)) <= c for p in pts)
                on = [p for p in pts if sum(a * b for a, b in zip(n, p)) == c]
                base = on[0]
                diffs = [tuple(a - b for a, b in zip(p, base)) for p in on[1:]]
                assert polytope._rank(diffs) >= P.dim - 1

    def test_oracle_equivalence_small(self):
        rng = random.Random(29)
        for _ in range(40):
            dim = rng.randint(1, 4)
            pts = random_points(rng, dim, rng.randint(1, 7), span=2)
            P = hull(pts)
            expected = oracles.extreme_points(pts)
            assert set(P.vertices) == expected


class TestFaceOf:
    def test_square_edge(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        f = face_of(sq, (1, 0))
        assert set(f.vertices) == {(F(1), F(0)), (F(1), F(1))}
        assert f.dim == 1

    def test_mt_dual_vertex_face(self):
        P = hull(laurent.mt_link_polynomial().support())
        f = face_of(P, (1, 1, 1, 1))
        assert f.vertices == ((F(1), F(1), F(1), F(0)),)
        assert f.dim == 0

    def test_zero_functional_gives_whole_polytope(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        f = face_of(sq, (0, 0))
        assert len(f.vertices) == 4 and f.dim == 2

    def test_vertices_are_exact_maximizers(self):
        rng = random.Random(31)
        for _ in range(20):
            pts = random_points(rng, 3, 7)
            P = hull(pts)
            func = tuple(rng.randint(-3, 3) for _ in range(3))
            f = face_of(P, func)
            values = {v: sum(a * b for a, b in zip(func, v)) for v in P.vertices}
            top = max(values.values())
            assert set(f.vertices) == {v for v, s in values.items() if s == top}


class TestValence:
    def test_square(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert vertex_valence(sq, (0, 0)) == 2

    def test_cube(self):
        cube = hull([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
        assert vertex_valence(cube, (0, 0, 0)) == 3

    def test_mt_valences_differ(self):
        P = hull(laurent.mt_link_polynomial().support())
        v_t = vertex_valence(P, (0, 0, 0, 1))
        v_xyz = vertex_valence(P, (1, 1, 1, 0))
        assert v_t == oracles.valence(P.vertices, (0, 0, 0, 1))
        assert v_xyz == oracles.valence(P.vertices, (1, 1, 1, 0))
        assert v_t != v_xyz

    def test_not_a_vertex(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        with pytest.raises(ValueError):
            vertex_valence(sq, (F(1, 2), F(1, 2)))

    def test_facet_count_exposed(self):
        cube = hull([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
        assert vertex_facet_count(cube, (0, 0, 0)) == 3

    def test_valence_sum_is_twice_edges(self):
        fixtures = [
            hull([(0, 0), (1, 0), (0, 1), (1, 1)]),
            hull([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]),
            hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
            hull(laurent.mt_link_polynomial().support()),
        ]
        for P in fixtures:
            total = sum(vertex_valence(P, v) for v in P.vertices)
            assert total == 2 * len(polytope.edges(P))

    def test_edges_match_oracle(self):
        rng = random.Random(37)
        for _ in range(10):
            pts = random_points(rng, 3, 6)
            P = hull(pts)
            if P.dim < 2:
                continue
            mine = {
                frozenset((P.vertices.index(a), P.vertices.index(b)))
                for a, b in polytope.edges(P)
            }
            theirs = {frozenset(e) for e in oracles.all_edges(P.vertices)}
            assert mine == theirs


class TestDifferenceBody:
    def test_segment(self):
        seg = hull([(0,), (1,)])
        D = difference_body(seg)
        assert set(D.vertices) == {(F(-1),), (F(1),)}

    def test_symmetric_doubles(self):
        P = hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
        D = difference_body(P)
        assert set(D.vertices) == {(F(2), F(0)), (F(0), F(2)), (F(-2), F(0)), (F(0), F(-2))}

    def test_mt_newton_doubles(self):
        P = hull(laurent.mt_link_polynomial().support())
        assert P.is_centrally_symmetric()
        D = difference_body(P)
        assert set(D.vertices) == {tuple(2 * c for c in v) for v in P.vertices}

    def test_centrally_symmetric_random(self):
        rng = random.Random(41)
        for _ in range(15):
            pts = random_points(rng, rng.randint(1, 3), rng.randint(2, 6))
            D = difference_body(hull(pts))
            assert D.is_centrally_symmetric()


class TestPolarDual:
    def test_square_to_cross(self):
        sq = hull([(1, 1), (1, -1), (-1, 1), (-1, -1)])
        cross = polar_dual(sq)
        assert set(cross.vertices) == {
            (F(1), F(0)),
            (F(-1), F(0)),
            (F(0), F(1)),
            (F(0), F(-1)),
        }

    def test_involution(self):
        rng = random.Random(43)
        for _ in range(15):
            dim = rng.randint(1, 3)
            pts = random_points(rng, dim, 6)
            pts += [tuple(-v for v in p) for p in pts]
            P = hull(pts)
            if P.dim < dim:
                continue
            assert polytope_equal(polar_dual(polar_dual(P)), P)

    def test_origin_must_be_interior(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        with pytest.raises(ValueError):
            polar_dual(sq)
        seg = hull([(0, 0), (1, 1)])
        with pytest.raises(ValueError):
            polar_dual(seg)

    def test_order_reversing(self):
        rng = random.Random(47)
        basis = [(1, 0), (0, 1), (-1, 0), (0, -1)]
        for _ in range(15):
            inner_pts = [tuple(F(v, 2) for v in p) for p in basis]
            outer_pts = basis + random_points(rng, 2, 4)
            outer = hull(outer_pts)
            inner = hull(inner_pts)
            assert all(outer.contains(v) for v in inner.vertices)
            p_outer = polar_dual(outer)
            p_inner = polar_dual(inner)
            assert all(p_inner.contains(v) for v in p_outer.vertices)


class TestProductWithSegment:
    def test_segment_times_segment(self):
        seg = hull([(0, -1), (0, 1)])
        rect = product_with_segment(seg, (1, 0), F(1, 2))
        assert set(rect.vertices) == {
            (F(1, 2), F(-1)),
            (F(1, 2), F(1)),
            (F(-1, 2), F(-1)),
            (F(-1, 2), F(1)),
        }

    def test_point_times_segment(self):
        pt = hull([(0, 0)])
        seg = product_with_segment(pt, (0, 1), F(1, 2))
        assert set(seg.vertices) == {(F(0), F(1, 2)), (F(0), F(-1, 2))}
        assert seg.dim == 1

    def test_orthogonality_required(self):
        seg = hull([(1, 0), (2, 0)])
        with pytest.raises(ValueError):
            product_with_segment(seg, (1, 0), 1)

    def test_matches_hull_construction(self):
        sq = hull([(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0)])
        prism = product_with_segment(sq, (0, 0, 1), F(1, 2))
        direct = hull(
            [v[:2] + (F(1, 2),) for v in sq.vertices]
            + [v[:2] + (F(-1, 2),) for v in sq.vertices]
        )
        assert polytope_equal(prism, direct)
        assert set(prism.facets) == set(direct.facets)


class TestEquality:
    def test_reflexive(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert polytope_equal(sq, sq)

    def test_rotation_same_vertex_set(self):
        a = hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
        b = hull([(0, 1), (-1, 0), (0, -1), (1, 0)])
        assert polytope_equal(a, b)

    def test_square_vs_cross(self):
        sq = hull([(1, 1), (1, -1), (-1, 1), (-1, -1)])
        cross = hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
        assert not polytope_equal(sq, cross)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            polytope_equal(hull([(0,)]), hull([(0, 0)]))


class TestTextFormat:
    def test_round_trip(self):
        P = hull([(0, 0), (2, 0), (0, 2), (F(1, 2), F(1, 2))])
        text = polytope.to_text(P)
        assert polytope.to_text(polytope.from_text(text)) == text

    def test_fraction_format(self):
        P = hull([(F(1, 2), F(0)), (F(-1, 2), F(0)), (F(0), F(1)), (F(0), F(-1))])
        text = polytope.to_text(P)
        assert "1/2" in text and "polytope 2" in text

    def test_membership_consistency(self):
        rng = random.Random(53)
        for _ in range(10):
            pts = random_points(rng, 3, 6)
            P = hull(pts)
            for _ in range(20):
                q = tuple(F(rng.randint(-6, 6), 2) for _ in range(3))
                assert P.contains(q) == oracles.in_hull(q, pts)
