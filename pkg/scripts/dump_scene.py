"""Print the construction for one triangle given by its sides, as JSON.

    python3 scripts/dump_scene.py 5 5 6
"""

import json
import sys

from lehmus import bisectors as bc
from lehmus import construction as geo


def main(argv):
    if len(argv) != 3:
        sys.exit("usage: dump_scene.py a b c")
    t = bc.new_triangle(*(bc.parse_rational(x) for x in argv))
    s = geo.build_scene(*geo.embed_sides(t.a, t.b, t.c))
    out = s.to_dict()
    out["invariants"] = geo.scene_invariants(s)
    out["power_residuals"] = list(geo.power_relations(s))
    out["parallel_defect"] = geo.parallelism_check(s)
    out["alpha_minus_beta"] = str(bc.alpha_minus_beta(t))
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main(sys.argv[1:])
