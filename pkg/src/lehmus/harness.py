"""Seeded sampling and the full verification run."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

import numpy as np

from lehmus import bisectors as bc
from lehmus import construction as geo
from lehmus.catalog import verify_catalog
from lehmus.report import CheckRecord, VerificationReport

RNG_ALGORITHM = "numpy PCG64, stream per sample from SeedSequence([seed, index])"
MAX_REJECTIONS = 10_000
SHAPES = ("any", "isosceles", "scalene")
PROBE_POINTS = 20
PROBE_MARGIN = 1e-6
PARALLEL_MARGIN = 1e-6


class ConfigError(ValueError):
    pass


class SamplingError(RuntimeError):
    pass


def _exact(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 42
    count: int = 100
    shape: str = "any"
    gap: float = 0.05  # minimum |b - a| / max side for the scalene class
    lo: Fraction = Fraction(1)
    hi: Fraction = Fraction(10)
    max_denominator: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "lo", _exact(self.lo))
        object.__setattr__(self, "hi", _exact(self.hi))
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.count < 1:
            raise ConfigError("count must be at least 1")
        if self.shape not in SHAPES:
            raise ConfigError(f"shape must be one of {SHAPES}, got {self.shape!r}")
        if not 0 <= self.gap < 1:
            raise ConfigError("gap must lie in [0, 1)")
        if self.lo <= 0 or self.hi < self.lo:
            raise ConfigError("side range needs 0 < lo <= hi")
        if self.max_denominator < 1:
            raise ConfigError("max_denominator must be positive")

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "shape": self.shape,
            "gap": self.gap,
            "lo": str(self.lo),
            "hi": str(self.hi),
            "max_denominator": self.max_denominator,
            "rng": RNG_ALGORITHM,
        }


def sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def _rational(rng: np.random.Generator, lo: Fraction, hi: Fraction, max_den: int) -> Optional[Fraction]:
    q = int(rng.integers(1, max_den + 1))
    low, high = math.ceil(lo * q), math.floor(hi * q)
    if low > high:
        return None
    return Fraction(int(rng.integers(low, high + 1)), q)


def side_gap(t: bc.TriangleSides) -> Fraction:
    return abs(t.b - t.a) / max(t.a, t.b, t.c)


def _usable(t: bc.TriangleSides) -> bool:
    # also reject triangles the float construction would call degenerate
    a, b, c = t.a, t.b, t.c
    sixteen_area_sq = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    return math.sqrt(sixteen_area_sq) / 2 / float(max(a, b, c)) ** 2 >= geo.DEGENERACY_THRESHOLD


def _draw_triangle(cfg: SampleConfig, rng: np.random.Generator) -> Optional[bc.TriangleSides]:
    draw = lambda: _rational(rng, cfg.lo, cfg.hi, cfg.max_denominator)  # noqa: E731
    a, c = draw(), draw()
    b = a if cfg.shape == "isosceles" else draw()
    if a is None or b is None or c is None:
        return None
    try:
        t = bc.TriangleSides(a, b, c)
    except bc.DegenerateTriangleError:
        return None
    if not _usable(t):
        return None
    if cfg.shape == "scalene" and side_gap(t) < Fraction(str(cfg.gap)):
        return None
    return t


def sample_triangle(cfg: SampleConfig, index: int) -> bc.TriangleSides:
    rng = sample_rng(cfg.seed, index)
    for _ in range(MAX_REJECTIONS):
        t = _draw_triangle(cfg, rng)
        if t is not None:
            return t
    raise SamplingError(
        f"no {cfg.shape} triangle in [{cfg.lo}, {cfg.hi}] after {MAX_REJECTIONS} draws"
    )


def sample_triangles(cfg: SampleConfig) -> list[bc.TriangleSides]:
    """``cfg.count`` rational triangles meeting the shape filter.

    Each sample has its own stream derived from (seed, index), so the list
    does not depend on how the work is split.
    """
    if cfg.shape == "scalene":
        best = (cfg.hi - cfg.lo) / cfg.hi
        if best < Fraction(str(cfg.gap)):
            raise SamplingError(
                f"side range [{cfg.lo}, {cfg.hi}] cannot reach a side gap of {cfg.gap}"
            )
    return [sample_triangle(cfg, i) for i in range(cfg.count)]


def sample_quadruple(cfg: SampleConfig, index: int) -> tuple[bc.SignedQuadruple, dict]:
    """Apex C over collinear A, B, P with P strictly between A and B.

    Coordinates are rational with A, B, P on the x-axis and a random axis
    orientation, so every measure and squared distance is exact.
    """
    rng = sample_rng(cfg.seed, 1_000_000_000 + index)
    for _ in range(MAX_REJECTIONS):
        xs = [_rational(rng, -cfg.hi, cfg.hi, cfg.max_denominator) for _ in range(4)]
        cy = _rational(rng, cfg.lo, cfg.hi, cfg.max_denominator)
        t = _rational(rng, Fraction(0), Fraction(1), cfg.max_denominator)
        if None in xs or cy is None or t is None or t in (0, 1):
            continue
        xa, xb, cx, _ = xs
        if xa == xb:
            continue
        xp = xa + t * (xb - xa)
        direction = 1 if rng.integers(0, 2) else -1
        dist2 = lambda x: (cx - x) ** 2 + cy * cy  # noqa: E731
        q = bc.SignedQuadruple.on_axis(
            direction * xa, direction * xb, direction * xp, dist2(xa), dist2(xb), dist2(xp)
        )
        inputs = {
            "A": [str(xa), "0"],
            "B": [str(xb), "0"],
            "P": [str(xp), "0"],
            "C": [str(cx), str(cy)],
            "axis": direction,
        }
        return q, inputs
    raise SamplingError("could not draw a Stewart quadruple")


# -- checks --------------------------------------------------------------------


def _record(check_id, anchor, passed, residual=None, inputs=None, seed=None) -> CheckRecord:
    return CheckRecord(check_id, anchor, bool(passed), residual, inputs or {}, seed)


def exact_checks(t: bc.TriangleSides, inputs: dict, seed: int) -> list[CheckRecord]:
    records = []
    data = bc.bisector_data(t)
    closed_ok = data.aa1_sq == bc.closed_form_aa1_sq(t) and data.bb1_sq == bc.closed_form_bb1_sq(t)
    records.append(_record(
        "bisector.closed_form", "squared bisector lengths from Stewart's relation",
        closed_ok, None, inputs, seed,
    ))
    ident = bc.lehmus_identity(t)
    records.append(_record(
        "bisector.identity", "(|AA1|-|BB1|) X = (|AC|-|BC|) Y, multiplied through by |AA1|+|BB1|",
        ident.passed, str(ident.residual), inputs, seed,
    ))
    try:
        bc.sign_theorem(t)
        sign_ok = True
    except bc.SignLawViolation:
        sign_ok = False
    records.append(_record(
        "bisector.sign_law", "|AA1| = |BB1| iff |AC| = |BC| (signs of both differences agree)",
        sign_ok, None, inputs, seed,
    ))
    amb = bc.alpha_minus_beta(t)
    direct = data.alpha - data.beta
    records.append(_record(
        "bisector.alpha_minus_beta", "alpha - beta = |AB| (|BC| - |AC|) / ((|AB|+|AC|)(|AB|+|BC|))",
        amb == direct and (amb == 0) == (t.a == t.b), str(amb - direct), inputs, seed,
    ))
    return records


def construction_checks(
    t: bc.TriangleSides, inputs: dict, seed: int, gap: float
) -> list[CheckRecord]:
    records = []
    A, B, C = geo.embed_sides(t.a, t.b, t.c)
    try:
        s = geo.build_scene(A, B, C)
    except (bc.DegenerateTriangleError, ValueError) as exc:
        return [_record("construction.scene", "scene construction", False, str(exc), inputs, seed)]

    inv = max(geo.scene_invariants(s).values())
    records.append(_record(
        "construction.scene", "incenter, bisector feet, circles k1/k2 and points H, G, N, L",
        inv <= geo.FUZZ_TOL, inv, inputs, seed,
    ))
    power = max(geo.power_relations(s))
    records.append(_record(
        "construction.power", "|HK||HN| = |HJ||HC| and |GM||GL| = |GJ||GC|",
        power <= geo.FUZZ_TOL, power, inputs, seed,
    ))
    chord = max(
        geo._relative(s.k1.radius, geo.circumradius_for_chord(s.aa1, 2 * s.gamma)),
        geo._relative(s.k2.radius, geo.circumradius_for_chord(s.bb1, 2 * s.gamma)),
    )
    records.append(_record(
        "construction.chord_radius", "chord seen under angle 2*gamma fixes the circle radius",
        chord <= geo.FUZZ_TOL, chord, inputs, seed,
    ))

    amb = bc.alpha_minus_beta(t)
    defect = geo.parallelism_check(s)
    predicted = geo.predicted_parallel_defect(s, float(amb))
    if amb == 0:
        par_ok = abs(defect) <= geo.EXACT_TOL
        par_res = abs(defect)
    else:
        par_res = geo._relative(defect, predicted)
        par_ok = bc.sign(defect) == bc.sign(amb) and par_res <= geo.FUZZ_TOL
    records.append(_record(
        "construction.parallel", "A1B1 parallel to AB iff alpha = beta iff |AC| = |BC|",
        par_ok, par_res, {**inputs, "defect": defect, "alpha_minus_beta": str(amb)}, seed,
    ))

    if t.a == t.b:
        co = geo.hg_coincidence(s)
        radii = geo._relative(s.k1.radius, s.k2.radius)
        records.append(_record(
            "construction.equal_radii", "equal chords under equal angles lie on congruent circles",
            radii <= geo.EXACT_TOL, radii, inputs, seed,
        ))
        records.append(_record(
            "construction.hg_gap", "H and G on the same ray coincide",
            co.gap <= geo.FUZZ_TOL, co.gap, inputs, seed,
        ))
        root = max(co.x_root_residual, co.y_root_residual, co.power_mismatch)
        records.append(_record(
            "construction.root", "x = y = (sqrt(4 a^2 + d^2) - d) / 2",
            root <= geo.EXACT_TOL, root, inputs, seed,
        ))
        try:
            congruent = geo.congruence_conclusion(s)
            detail = None
        except geo.PreconditionError as exc:
            congruent, detail = False, str(exc)
        records.append(_record(
            "construction.congruence", "triangles AGC and BGC congruent, hence CA = CB",
            congruent, detail, inputs, seed,
        ))

    if t.a == t.b or side_gap(t) >= Fraction(str(gap)):
        margins = []
        try:
            for k in range(1, PROBE_POINTS + 1):
                la, lb = geo.cevian_probe(A, B, C, k / (PROBE_POINTS + 1))
                margins.append(geo._relative(la, lb))
        except geo.PreconditionError as exc:
            records.append(_record(
                "construction.cevian_probe", "cevians through a point of the C-bisector",
                False, str(exc), inputs, seed,
            ))
        else:
            if t.a == t.b:
                worst = max(margins)
                ok = worst <= geo.EXACT_TOL
            else:
                worst = min(margins)
                ok = worst > PROBE_MARGIN and abs(defect) > PARALLEL_MARGIN
            records.append(_record(
                "construction.cevian_probe",
                "equal cevians through a point of the C-bisector force |CA| = |CB|",
                ok, worst, inputs, seed,
            ))
    return records


def check_sample(cfg: SampleConfig, index: int) -> list[CheckRecord]:
    t = sample_triangle(cfg, index)
    inputs = {"sample": index, **t.as_strings()}
    records = exact_checks(t, inputs, cfg.seed)
    records += construction_checks(t, inputs, cfg.seed, cfg.gap)
    q, q_inputs = sample_quadruple(cfg, index)
    residual = bc.stewart_residual(q)
    records.append(_record(
        "stewart.residual", "|CA|^2 BP + |CB|^2 PA + |CP|^2 AB + BP PA AB = 0",
        residual == 0, str(residual), {"sample": index, **q_inputs}, cfg.seed,
    ))
    return records


def run_full_suite(cfg: SampleConfig, workers: int = 1) -> VerificationReport:
    """Catalog once, then exact and construction checks per sample.

    With ``workers > 1`` samples fan out to processes; records are merged in
    sample order, so the report is the same either way.
    """
    report = VerificationReport(config=cfg.to_dict())
    for record in verify_catalog().records:
        report.add(CheckRecord(
            record.check_id, record.anchor, record.passed, record.residual,
            record.inputs, cfg.seed,
        ))
    if cfg.shape == "scalene":
        sample_triangles(replace(cfg, count=1))  # fail fast on bad ranges
    indices = range(cfg.count)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(check_sample, [cfg] * cfg.count, indices, chunksize=16))
    else:
        chunks = [check_sample(cfg, i) for i in indices]
    for chunk in chunks:
        for record in chunk:
            report.add(record)
    return report
