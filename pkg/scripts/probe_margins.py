"""How far are the float checks from their thresholds?

Samples random and isosceles triangles and reports the worst value of each
floating-point quantity next to the tolerance the harness applies.
"""

import argparse
from fractions import Fraction

from lehmus import bisectors as bc
from lehmus import construction as geo
from lehmus.harness import PROBE_POINTS, SampleConfig, sample_triangles, side_gap


def scene(t):
    return geo.build_scene(*geo.embed_sides(t.a, t.b, t.c))


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=2000)
    p.add_argument("--gap", type=float, default=0.05)
    args = p.parse_args()

    anyshape = sample_triangles(SampleConfig(seed=args.seed, count=args.count))
    iso = sample_triangles(SampleConfig(seed=args.seed, count=args.count // 5, shape="isosceles"))
    scalene = [t for t in anyshape if side_gap(t) >= Fraction(str(args.gap))]

    power = max(max(geo.power_relations(scene(t))) for t in anyshape)
    gaps, roots = [], []
    for t in iso:
        co = geo.hg_coincidence(scene(t))
        gaps.append(co.gap)
        roots.append(max(co.x_root_residual, co.y_root_residual))

    margins, defects = [], []
    for t in scalene:
        A, B, C = geo.embed_sides(t.a, t.b, t.c)
        for k in range(1, PROBE_POINTS + 1):
            la, lb = geo.cevian_probe(A, B, C, k / (PROBE_POINTS + 1))
            margins.append(geo._relative(la, lb))
        defects.append(abs(geo.parallelism_check(scene(t))))

    rows = [
        ("power residual (max)", power, "<= 1e-9"),
        ("isosceles H-G gap (max)", max(gaps), "<= 1e-9"),
        ("isosceles root residual (max)", max(roots), "<= 1e-12"),
        ("scalene cevian margin (min)", min(margins), ">  1e-6"),
        ("scalene parallel defect (min)", min(defects), ">  1e-6"),
    ]
    print(f"{len(anyshape)} random, {len(iso)} isosceles, {len(scalene)} with gap >= {args.gap}")
    for name, value, bound in rows:
        print(f"{name:32s} {value:10.3e}   {bound}")

    # the smallest scalene margin shrinks with the gap; show the trend
    print("\nside gap vs smallest cevian margin")
    for t in sorted(scalene, key=side_gap)[:5]:
        A, B, C = geo.embed_sides(t.a, t.b, t.c)
        m = min(geo._relative(*geo.cevian_probe(A, B, C, k / 21)) for k in range(1, 21))
        print(f"  gap {float(side_gap(t)):.4f}  margin {m:.3e}  alpha-beta {float(bc.alpha_minus_beta(t)):+.3e}")


if __name__ == "__main__":
    main()
