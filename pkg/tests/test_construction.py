import json
import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from lehmus.bisectors import DegenerateTriangleError, alpha_minus_beta, new_triangle
from lehmus.construction import (
    EQUAL_BISECTOR_TOL,
    EXACT_TOL,
    FUZZ_TOL,
    Point,
    PreconditionError,
    build_scene,
    cevian_probe,
    circumradius_for_chord,
    congruence_conclusion,
    embed_sides,
    hg_coincidence,
    normalized_area,
    parallelism_check,
    power_relations,
    predicted_parallel_defect,
    scene_invariants,
)
from oracles import cevian_lengths, incenter_by_bisectors

ISOSCELES = (Point(0, 0), Point(4, 0), Point(2, 3))
EQUILATERAL = (Point(0, 0), Point(2, 0), Point(1, math.sqrt(3)))
SCALENE = (Point(0, 0), Point(5, 0), Point(1, 3))
# sides (a, b, c) = (4, 5, 6) with B at the origin and C on the x-axis
SIDES_456 = (Point(27 / 8, 15 * math.sqrt(7) / 8), Point(0, 0), Point(4, 0))


def rel(u, v):
    return abs(u - v) / max(abs(u), abs(v))


sides = st.fractions(1, 10, max_denominator=50)
coords = st.floats(-100, 100, allow_nan=False, allow_infinity=False)


@st.composite
def triangles(draw):
    A, B, C = (Point(draw(coords), draw(coords)) for _ in range(3))
    assume(max(A.dist(B), B.dist(C), C.dist(A)) > 1e-3)
    assume(normalized_area(A, B, C) > 1e-3)
    return A, B, C


def similarity(points, angle, scale, shift):
    c, s = math.cos(angle), math.sin(angle)
    return tuple(
        Point(scale * (c * p.x - s * p.y) + shift[0], scale * (s * p.x + c * p.y) + shift[1])
        for p in points
    )


def oracle_foot(V, P, Q, R):
    """Intersection of line V->P with line Q->R (numpy)."""
    V, P, Q, R = (np.array([p.x, p.y]) for p in (V, P, Q, R))
    s = np.linalg.solve(np.column_stack([P - V, -(R - Q)]), Q - V)
    return V + s[0] * (P - V)


class TestScene:
    def test_isosceles_equal_bisectors(self):
        s = build_scene(*ISOSCELES)
        assert rel(s.aa1, s.bb1) < EXACT_TOL

    def test_right_isosceles_apex_at_b(self):
        A, B, C = Point(0, 0), Point(1, 0), Point(1, 1)
        s = build_scene(A, B, C)
        J = incenter_by_bisectors((0, 0), (1, 0), (1, 1))
        A1 = oracle_foot(A, Point(*J), B, C)
        B1 = oracle_foot(B, Point(*J), A, C)
        assert math.isclose(s.aa1, float(np.linalg.norm(A1)), rel_tol=1e-12)
        assert math.isclose(s.bb1, float(np.linalg.norm(B1 - [1, 0])), rel_tol=1e-12)
        assert rel(s.aa1, s.bb1) > 0.1

    def test_collinear_rejected(self):
        with pytest.raises(DegenerateTriangleError):
            build_scene(Point(0, 0), Point(1, 0), Point(2, 0))

    def test_nearly_collinear_rejected(self):
        with pytest.raises(DegenerateTriangleError):
            build_scene(Point(0, 0), Point(1, 0), Point(0.5, 1e-9))

    @pytest.mark.parametrize("tri", [ISOSCELES, EQUILATERAL, SCALENE, SIDES_456])
    def test_invariants(self, tri):
        s = build_scene(*tri)
        assert max(scene_invariants(s).values()) < EXACT_TOL
        J = incenter_by_bisectors(*((p.x, p.y) for p in tri))
        assert s.J.dist(Point(*J)) < EXACT_TOL * s.scale
        assert s.h_param > 1 and s.g_param > 1

    def test_gamma(self):
        s = build_scene(*EQUILATERAL)
        assert math.isclose(s.gamma, math.pi / 6, rel_tol=1e-14)

    def test_dump(self):
        d = build_scene(*SCALENE).to_dict()
        assert set(d["points"]) == {"A", "B", "C", "J", "A1", "B1", "H", "G", "K", "M", "N", "L", "O1", "O2"}
        assert set(d["circles"]) == {"k1", "k2"}
        json.dumps(d)

    @given(triangles())
    def test_invariants_random(self, tri):
        s = build_scene(*tri)
        assert max(scene_invariants(s).values()) < FUZZ_TOL


class TestCircles:
    def test_semicircle(self):
        assert math.isclose(circumradius_for_chord(2, math.pi / 2), 1)

    def test_thirty_degrees(self):
        assert math.isclose(circumradius_for_chord(2, math.pi / 6), 2, rel_tol=1e-15)

    @pytest.mark.parametrize("chord, angle", [(0, 1), (-1, 1), (1, 0), (1, math.pi), (1, 4)])
    def test_domain(self, chord, angle):
        with pytest.raises(ValueError):
            circumradius_for_chord(chord, angle)

    @pytest.mark.parametrize("tri", [ISOSCELES, EQUILATERAL])
    def test_isosceles_equal_radii(self, tri):
        s = build_scene(*tri)
        assert rel(s.k1.radius, s.k2.radius) < EXACT_TOL
        r1 = circumradius_for_chord(s.aa1, 2 * s.gamma)
        r2 = circumradius_for_chord(s.bb1, 2 * s.gamma)
        assert rel(r1, r2) < EXACT_TOL

    @given(triangles())
    def test_chord_formula_gives_circle_radius(self, tri):
        s = build_scene(*tri)
        assert rel(s.k1.radius, circumradius_for_chord(s.aa1, 2 * s.gamma)) < FUZZ_TOL
        assert rel(s.k2.radius, circumradius_for_chord(s.bb1, 2 * s.gamma)) < FUZZ_TOL


class TestPower:
    def test_equilateral(self):
        assert max(power_relations(build_scene(*EQUILATERAL))) < EXACT_TOL

    def test_scalene_against_oracle(self):
        s = build_scene(*SCALENE)
        assert max(power_relations(s)) < FUZZ_TOL
        # recompute H from scratch: circle through A, C, A1 by a linear solve,
        # then the far intersection of line C -> J
        pts = np.array([s.A.as_list(), s.C.as_list(), s.A1.as_list()])
        M = np.column_stack([2 * pts, np.ones(3)])
        cx, cy, k = np.linalg.solve(M, (pts**2).sum(axis=1))
        center = np.array([cx, cy])
        C, J = np.array(s.C.as_list()), np.array(s.J.as_list())
        u = (J - C) / np.linalg.norm(J - C)
        H = C - 2 * u.dot(C - center) * u
        K = (pts[0] + pts[2]) / 2
        N = 2 * center - H
        lhs = np.linalg.norm(H - K) * np.linalg.norm(H - N)
        rhs = np.linalg.norm(H - J) * np.linalg.norm(H - C)
        assert rel(lhs, rhs) < FUZZ_TOL
        assert rel(lhs, s.power_h) < FUZZ_TOL

    @pytest.mark.parametrize("h", [1e-1, 1e-2, 1e-3, 1e-4])
    @pytest.mark.parametrize("cx", [2.0, 1.3])
    def test_incenter_approaching_c(self, h, cx):
        s = build_scene(Point(0, 0), Point(4, 0), Point(cx, h))
        assert s.d / s.scale < h
        assert max(power_relations(s)) < FUZZ_TOL

    @given(triangles())
    def test_any_triangle(self, tri):
        assert max(power_relations(build_scene(*tri))) < FUZZ_TOL

    @given(triangles(), st.floats(0, 2 * math.pi), st.floats(0.01, 100), coords, coords)
    def test_similarity_invariance(self, tri, angle, scale, dx, dy):
        s1 = build_scene(*tri)
        s2 = build_scene(*similarity(tri, angle, scale, (dx, dy)))
        for r1, r2 in zip(power_relations(s1), power_relations(s2)):
            assert abs(r1 - r2) < FUZZ_TOL
        c1, c2 = hg_coincidence(s1), hg_coincidence(s2)
        assert abs(c1.gap - c2.gap) < FUZZ_TOL
        assert abs(parallelism_check(s1) - parallelism_check(s2)) < FUZZ_TOL


class TestCoincidence:
    @pytest.mark.parametrize("tri", [ISOSCELES, EQUILATERAL])
    def test_isosceles(self, tri):
        co = hg_coincidence(build_scene(*tri))
        assert co.gap < EXACT_TOL
        assert co.x_root_residual < EXACT_TOL and co.y_root_residual < EXACT_TOL
        assert co.power_mismatch < EXACT_TOL
        assert co.equal_bisectors

    def test_literal_root_formula(self):
        s = build_scene(*ISOSCELES)
        literal = (math.sqrt(4 * s.power_h + s.d**2) - s.d) / 2
        assert rel(s.x, literal) < EXACT_TOL

    def test_scalene_gap_reported(self):
        s = build_scene(*SCALENE)
        co = hg_coincidence(s)
        # the gap is |x - y| since H and G are on the same ray from C
        assert co.gap > 0.1
        assert math.isclose(co.gap * s.scale, abs(s.x - s.y), rel_tol=1e-12)
        assert not co.equal_bisectors


class TestCongruence:
    @pytest.mark.parametrize("tri", [ISOSCELES, EQUILATERAL])
    def test_holds(self, tri):
        assert congruence_conclusion(build_scene(*tri)) is True

    def test_gate_just_past_tolerance(self):
        s = build_scene(Point(0, 0), Point(4, 0), Point(2 + 1e-8, 3))
        assert EQUAL_BISECTOR_TOL < rel(s.aa1, s.bb1) < 100 * EQUAL_BISECTOR_TOL
        with pytest.raises(PreconditionError):
            congruence_conclusion(s)

    def test_gate_within_tolerance(self):
        s = build_scene(Point(0, 0), Point(4, 0), Point(2 + 1e-13, 3))
        assert congruence_conclusion(s) is True

    def test_scalene_rejected(self):
        with pytest.raises(PreconditionError):
            congruence_conclusion(build_scene(*SCALENE))


class TestCevianProbe:
    @pytest.mark.parametrize("j", [0.05, 0.25, 0.5, 0.75, 0.95])
    def test_isosceles_equal(self, j):
        la, lb = cevian_probe(*ISOSCELES, j)
        assert rel(la, lb) < EXACT_TOL

    def test_scalene_golden(self):
        la, lb = cevian_probe(*SCALENE, 0.5)
        assert math.isclose(la, 3.0260498228140320625, rel_tol=1e-12)
        assert math.isclose(lb, 4.7586031404328890896, rel_tol=1e-12)
        assert lb - la > 1.73

    def test_at_incenter_gives_bisectors(self):
        s = build_scene(*SCALENE)
        a, b, c = s.sides
        # J divides the C-bisector in ratio (a + b) : c from C
        la, lb = cevian_probe(*SCALENE, (a + b) / (a + b + c))
        assert rel(la, s.aa1) < EXACT_TOL and rel(lb, s.bb1) < EXACT_TOL

    @pytest.mark.parametrize("j", [0.0, 1.0, -0.1, 1.5, 1 - 1e-12])
    def test_out_of_range(self, j):
        with pytest.raises(PreconditionError):
            cevian_probe(*SCALENE, j)

    @given(triangles(), st.floats(0.01, 0.99))
    def test_matches_oracle(self, tri, j):
        la, lb = cevian_probe(*tri, j)
        oa, ob = cevian_lengths(*((p.x, p.y) for p in tri), j)
        assert rel(la, oa) < FUZZ_TOL and rel(lb, ob) < FUZZ_TOL


class TestParallelism:
    @pytest.mark.parametrize("tri", [ISOSCELES, EQUILATERAL])
    def test_isosceles(self, tri):
        assert abs(parallelism_check(build_scene(*tri))) < EXACT_TOL

    def test_sides_456(self):
        s = build_scene(*SIDES_456)
        a, b, c = s.sides
        assert (round(a, 12), round(b, 12), round(c, 12)) == (4, 5, 6)
        defect = parallelism_check(s)
        amb = alpha_minus_beta(new_triangle(4, 5, 6))
        assert defect < 0 and amb < 0
        assert math.isclose(defect, -0.071324675269681960153, rel_tol=1e-12)
        assert rel(defect, predicted_parallel_defect(s, float(amb))) < EXACT_TOL

    def test_orientation_does_not_flip_sign(self):
        A, B, C = SIDES_456
        mirrored = [Point(p.x, -p.y) for p in (A, B, C)]
        assert math.isclose(
            parallelism_check(build_scene(*mirrored)), parallelism_check(build_scene(A, B, C)), rel_tol=1e-12
        )

    @given(sides, sides, sides)
    def test_tracks_exact_alpha_minus_beta(self, a, b, c):
        assume(a + b > c and b + c > a and a + c > b)
        A, B, C = embed_sides(a, b, c)
        assume(normalized_area(A, B, C) > 1e-4)
        s = build_scene(A, B, C)
        amb = alpha_minus_beta(new_triangle(a, b, c))
        defect = parallelism_check(s)
        if amb == 0:
            assert abs(defect) < EXACT_TOL
        else:
            assert np.sign(defect) == np.sign(float(amb))
            assert rel(defect, predicted_parallel_defect(s, float(amb))) < FUZZ_TOL


class TestEmbedding:
    @given(sides, sides, sides)
    def test_side_lengths(self, a, b, c):
        assume(a + b > c and b + c > a and a + c > b)
        A, B, C = embed_sides(a, b, c)
        assert math.isclose(B.dist(C), float(a), rel_tol=1e-9)
        assert math.isclose(A.dist(C), float(b), rel_tol=1e-9)
        assert math.isclose(A.dist(B), float(c), rel_tol=1e-15)

    def test_isosceles_is_mirror_symmetric(self):
        A, B, C = embed_sides(7, 7, 3)
        assert C.x == 1.5

    def test_degenerate(self):
        with pytest.raises(DegenerateTriangleError):
            embed_sides(1, 2, 3)
