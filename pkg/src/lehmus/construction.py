"""Coordinate construction of the circle-based equal-bisector argument.

The scene places the two base bisectors AA1, BB1 of triangle ABC, their
meeting point J (the incenter), the circumcircles k1 of ACA1 and k2 of BCB1,
and the points where the ray CJ meets them again (H on k1, G on k2). K and M
are the midpoints of the chords AA1 and BB1; N and L are the far ends of the
diameters through H and G.

Everything here is double precision; relative tolerances are documented at
each check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from lehmus.bisectors import DegenerateTriangleError

DEGENERACY_THRESHOLD = 1e-8
EXACT_TOL = 1e-12
FUZZ_TOL = 1e-9
# Bisector lengths count as equal when they agree to this relative tolerance.
EQUAL_BISECTOR_TOL = 1e-9
FOOT_EPS = 1e-9


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, o: "Point") -> "Point":
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "Point") -> "Point":
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, o: "Point") -> float:
        return self.x * o.x + self.y * o.y

    def cross(self, o: "Point") -> float:
        return self.x * o.y - self.y * o.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, o: "Point") -> float:
        return math.hypot(self.x - o.x, self.y - o.y)

    def as_list(self) -> list[float]:
        return [self.x, self.y]


def weighted(points_weights) -> Point:
    total = sum(w for _, w in points_weights)
    x = sum(p.x * w for p, w in points_weights) / total
    y = sum(p.y * w for p, w in points_weights) / total
    return Point(x, y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def angle_at(vertex: Point, p: Point, q: Point) -> float:
    """Unsigned angle p-vertex-q in [0, pi]."""
    u, v = p - vertex, q - vertex
    return math.atan2(abs(u.cross(v)), u.dot(v))


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    r2: float

    def __post_init__(self):
        if not self.r2 > 0:
            raise ValueError("circle needs a positive squared radius")

    @property
    def radius(self) -> float:
        return math.sqrt(self.r2)


def circumcircle(p: Point, q: Point, r: Point) -> Circle:
    # Solve in coordinates relative to p to keep the magnitudes small.
    b, c = q - p, r - p
    d = 2.0 * b.cross(c)
    if d == 0.0:
        raise DegenerateTriangleError("collinear points have no circumcircle")
    bb, cc = b.dot(b), c.dot(c)
    ux = (c.y * bb - b.y * cc) / d
    uy = (b.x * cc - c.x * bb) / d
    return Circle(Point(p.x + ux, p.y + uy), ux * ux + uy * uy)


def second_intersection(circle: Circle, start: Point, through: Point) -> tuple[Point, float]:
    """Other intersection of line ``start -> through`` with ``circle``.

    ``start`` must lie on the circle. Returns the point and its parameter
    along ``start + t * (through - start)``.
    """
    u = through - start
    t = -2.0 * u.dot(start - circle.center) / u.dot(u)
    return start + u * t, t


def twice_area(A: Point, B: Point, C: Point) -> float:
    return (B - A).cross(C - A)


def normalized_area(A: Point, B: Point, C: Point) -> float:
    scale = max(A.dist(B), B.dist(C), C.dist(A))
    if scale == 0.0:
        return 0.0
    return abs(twice_area(A, B, C)) / scale / scale


def check_nondegenerate(A: Point, B: Point, C: Point):
    area = normalized_area(A, B, C)
    if area < DEGENERACY_THRESHOLD:
        raise DegenerateTriangleError(
            f"triangle is collinear or nearly so (normalized area {area:.3g})"
        )


@dataclass(frozen=True)
class ConstructionScene:
    A: Point
    B: Point
    C: Point
    gamma: float  # half of angle ACB
    J: Point
    A1: Point
    B1: Point
    k1: Circle
    k2: Circle
    H: Point
    G: Point
    K: Point
    M: Point
    N: Point
    L: Point
    d: float  # |CJ|
    x: float  # |HJ|
    y: float  # |GJ|
    power_h: float  # |HK||HN|, the "a^2" of the quadratic for x
    power_g: float  # |GM||GL|
    h_param: float  # CH = h_param * CJ
    g_param: float

    @property
    def sides(self) -> tuple[float, float, float]:
        """(a, b, c) = (|BC|, |AC|, |AB|)."""
        return self.B.dist(self.C), self.A.dist(self.C), self.A.dist(self.B)

    @property
    def scale(self) -> float:
        return max(self.sides)

    @property
    def aa1(self) -> float:
        return self.A.dist(self.A1)

    @property
    def bb1(self) -> float:
        return self.B.dist(self.B1)

    def to_dict(self) -> dict:
        points = {
            name: getattr(self, name).as_list()
            for name in ("A", "B", "C", "J", "A1", "B1", "H", "G", "K", "M", "N", "L")
        }
        points["O1"] = self.k1.center.as_list()
        points["O2"] = self.k2.center.as_list()
        return {
            "points": points,
            "circles": {
                "k1": {"center": self.k1.center.as_list(), "radius": self.k1.radius},
                "k2": {"center": self.k2.center.as_list(), "radius": self.k2.radius},
            },
            "scalars": {
                "gamma": self.gamma,
                "d": self.d,
                "x": self.x,
                "y": self.y,
                "power_h": self.power_h,
                "power_g": self.power_g,
            },
        }


def build_scene(A: Point, B: Point, C: Point) -> ConstructionScene:
    check_nondegenerate(A, B, C)
    a, b, c = B.dist(C), A.dist(C), A.dist(B)
    J = weighted([(A, a), (B, b), (C, c)])
    # |BA1| : |A1C| = c : b and |AB1| : |B1C| = c : a
    A1 = weighted([(B, b), (C, c)])
    B1 = weighted([(A, a), (C, c)])
    gamma = angle_at(C, A, B) / 2
    k1 = circumcircle(A, C, A1)
    k2 = circumcircle(B, C, B1)
    H, h_param = second_intersection(k1, C, J)
    G, g_param = second_intersection(k2, C, J)
    K = midpoint(A, A1)
    M = midpoint(B, B1)
    N, _ = second_intersection(k1, H, K)
    L, _ = second_intersection(k2, G, M)
    return ConstructionScene(
        A=A, B=B, C=C, gamma=gamma, J=J, A1=A1, B1=B1, k1=k1, k2=k2,
        H=H, G=G, K=K, M=M, N=N, L=L,
        d=C.dist(J), x=H.dist(J), y=G.dist(J),
        power_h=H.dist(K) * H.dist(N),
        power_g=G.dist(M) * G.dist(L),
        h_param=h_param, g_param=g_param,
    )


def embed_sides(a, b, c) -> tuple[Point, Point, Point]:
    """Place a triangle with side lengths (|BC|, |AC|, |AB|) = (a, b, c).

    A sits at the origin, B on the positive x-axis and C above it. The
    abscissa of C and the squared height are evaluated exactly when the sides
    are rationals, so equal sides give an exactly mirror-symmetric placement.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    cx = c / 2 + (b - a) * (b + a) / (2 * c)
    sixteen_area_sq = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    if sixteen_area_sq <= 0:
        raise DegenerateTriangleError(f"sides ({a}, {b}, {c}) do not form a triangle")
    height = math.sqrt(sixteen_area_sq) / (2 * float(c))
    return Point(0.0, 0.0), Point(float(c), 0.0), Point(float(cx), height)


def scene_invariants(s: ConstructionScene) -> dict[str, float]:
    """Relative residuals of the defining properties of the scene."""
    a, b, c = s.sides
    scale = s.scale
    ratio_a1 = abs(s.B.dist(s.A1) * b - s.A1.dist(s.C) * c) / (scale * scale)
    ratio_b1 = abs(s.A.dist(s.B1) * a - s.B1.dist(s.C) * c) / (scale * scale)
    on_bc = abs(twice_area(s.B, s.C, s.A1)) / (scale * scale)
    on_ac = abs(twice_area(s.A, s.C, s.B1)) / (scale * scale)
    # J is on a bisector iff it is equidistant from the two adjacent sides.
    def line_dist(p, q, r):
        return abs(twice_area(p, q, r)) / p.dist(q)

    d_ab = line_dist(s.A, s.B, s.J)
    d_bc = line_dist(s.B, s.C, s.J)
    d_ca = line_dist(s.C, s.A, s.J)
    incenter = max(abs(d_ab - d_bc), abs(d_bc - d_ca), abs(d_ca - d_ab)) / scale
    on_k1 = max(abs(p.dist(s.k1.center) - s.k1.radius) for p in (s.A, s.C, s.A1, s.H, s.N))
    on_k2 = max(abs(p.dist(s.k2.center) - s.k2.radius) for p in (s.B, s.C, s.B1, s.G, s.L))
    # HN and GL are diameters.
    diam_h = s.k1.center.dist(midpoint(s.H, s.N))
    diam_g = s.k2.center.dist(midpoint(s.G, s.L))
    return {
        "a1_ratio": ratio_a1,
        "b1_ratio": ratio_b1,
        "a1_on_bc": on_bc,
        "b1_on_ac": on_ac,
        "incenter": incenter,
        "on_k1": on_k1 / scale,
        "on_k2": on_k2 / scale,
        "hn_diameter": diam_h / scale,
        "gl_diameter": diam_g / scale,
        # beyond J means parameter > 1 along C -> J
        "h_beyond_j": 0.0 if s.h_param > 1.0 else 1.0 - s.h_param,
        "g_beyond_j": 0.0 if s.g_param > 1.0 else 1.0 - s.g_param,
    }


def circumradius_for_chord(chord_length: float, inscribed_angle: float) -> float:
    """Radius of the circle on which a chord is seen under ``inscribed_angle``."""
    if not chord_length > 0:
        raise ValueError("chord length must be positive")
    if not 0 < inscribed_angle < math.pi:
        raise ValueError("inscribed angle must lie in (0, pi)")
    return chord_length / (2.0 * math.sin(inscribed_angle))


def _relative(u: float, v: float) -> float:
    scale = max(abs(u), abs(v))
    return 0.0 if scale == 0.0 else abs(u - v) / scale


def power_relations(s: ConstructionScene) -> tuple[float, float]:
    """Relative residuals of |HK||HN| = |HJ||HC| and |GM||GL| = |GJ||GC|.

    Both relations hold for every triangle, not only isosceles ones.
    """
    res_h = _relative(s.power_h, s.H.dist(s.J) * s.H.dist(s.C))
    res_g = _relative(s.power_g, s.G.dist(s.J) * s.G.dist(s.C))
    return res_h, res_g


def closed_form_root(power: float, d: float) -> float:
    """Positive root of ``x^2 + d x - power = 0``.

    Same value as ``(sqrt(4 power + d^2) - d) / 2``, written without the
    subtraction so small roots keep full precision.
    """
    return 2.0 * power / (math.sqrt(4.0 * power + d * d) + d)


@dataclass(frozen=True)
class Coincidence:
    gap: float  # |H - G| / scale
    power_mismatch: float  # relative gap between x(x+d) and y(y+d)
    x_root_residual: float  # measured x vs closed-form root, relative
    y_root_residual: float
    bisector_mismatch: float  # relative gap between |AA1| and |BB1|

    @property
    def equal_bisectors(self) -> bool:
        return self.bisector_mismatch <= EQUAL_BISECTOR_TOL


def hg_coincidence(s: ConstructionScene) -> Coincidence:
    d, x, y = s.d, s.x, s.y
    return Coincidence(
        gap=s.H.dist(s.G) / s.scale,
        power_mismatch=_relative(x * (x + d), y * (y + d)),
        x_root_residual=_relative(x, closed_form_root(s.power_h, d)),
        y_root_residual=_relative(y, closed_form_root(s.power_g, d)),
        bisector_mismatch=_relative(s.aa1, s.bb1),
    )


def congruence_conclusion(s: ConstructionScene, tol: float = FUZZ_TOL) -> bool:
    """Triangles AGC and BGC share CG, the angle at C and the angle at the
    base vertex; hence |CA| = |CB|.

    Requires |AA1| = |BB1| (relative ``EQUAL_BISECTOR_TOL``).
    """
    mismatch = _relative(s.aa1, s.bb1)
    if mismatch > EQUAL_BISECTOR_TOL:
        raise PreconditionError(
            f"bisectors differ by {mismatch:.3g} relative; the conclusion needs |AA1| = |BB1|"
        )
    A, B, C, G = s.A, s.B, s.C, s.G
    common_side = s.H.dist(G) / s.scale <= tol
    angle_c = abs(angle_at(C, A, G) - angle_at(C, B, G)) <= tol
    angle_base = abs(angle_at(A, C, G) - angle_at(B, C, G)) <= tol
    congruent = common_side and angle_c and angle_base
    return congruent and _relative(C.dist(A), C.dist(B)) <= tol


def _line_intersection(p: Point, r: Point, q: Point, s: Point) -> tuple[float, float]:
    """Parameters (t, u) with p + t r = q + u s."""
    denom = r.cross(s)
    if denom == 0.0:
        raise PreconditionError("parallel lines")
    qp = q - p
    return qp.cross(s) / denom, qp.cross(r) / denom


def bisector_point(A: Point, B: Point, C: Point, j_param: float) -> Point:
    """Point at fraction ``j_param`` along the C-bisector from C to AB."""
    a, b = B.dist(C), A.dist(C)
    D = weighted([(A, a), (B, b)])
    return C + (D - C) * j_param


def cevian_probe(A: Point, B: Point, C: Point, j_param: float) -> tuple[float, float]:
    """Lengths of the cevians from A and B through a point on the C-bisector.

    Returns (|AA1'|, |BB1'|) where A1' on BC and B1' on AC are the feet of the
    lines through the bisector point.
    """
    check_nondegenerate(A, B, C)
    if not 0.0 < j_param < 1.0:
        raise PreconditionError("j_param must lie strictly between 0 and 1")
    P = bisector_point(A, B, C, j_param)
    _, u_a = _line_intersection(A, P - A, B, C - B)
    _, u_b = _line_intersection(B, P - B, A, C - A)
    for name, u in (("A1'", u_a), ("B1'", u_b)):
        if not FOOT_EPS < u < 1.0 - FOOT_EPS:
            raise PreconditionError(f"cevian foot {name} falls outside its side (parameter {u:.3g})")
    A1 = B + (C - B) * u_a
    B1 = A + (C - A) * u_b
    return A.dist(A1), B.dist(B1)


def parallelism_check(s: ConstructionScene) -> float:
    """Signed sine of the angle between A1B1 and AB.

    Zero exactly when A1B1 is parallel to AB. The sign is oriented so that it
    matches the sign of alpha - beta (the difference of the bisector-foot
    ratios); the magnitude equals
    ``(alpha - beta) * |2 area(ABC)| / (|A1B1| |AB|)``.
    """
    w = s.B1 - s.A1
    u = s.B - s.A
    orientation = 1.0 if twice_area(s.A, s.B, s.C) > 0 else -1.0
    return orientation * w.cross(u) / (w.norm() * u.norm())


def predicted_parallel_defect(s: ConstructionScene, alpha_minus_beta: float) -> float:
    """Defect implied by a given alpha - beta for this scene's geometry."""
    area2 = abs(twice_area(s.A, s.B, s.C))
    return alpha_minus_beta * area2 / (s.A1.dist(s.B1) * s.A.dist(s.B))
