"""Print chi_r for r = 1..Delta over a list of family expressions.

    python scripts/chi_profile.py "gear(5)" "middle(friendship(3))" "line(kary(2,3))"
"""

import argparse
import sys

from condcolor.closed_form import chi_r_formula
from condcolor.families import FamilySpec
from condcolor.graph import InputError, max_degree
from condcolor.solver import compute_chi_r


def profile(text: str, budget: int) -> list[str]:
    spec = FamilySpec.parse(text)
    g = spec.build()
    lines = [f"{spec}: n={g.n} |E|={g.num_edges} Delta={max_degree(g)}"]
    for r in range(1, max_degree(g) + 1):
        cert = compute_chi_r(g, r, budget=budget)
        value = cert.chi_r if cert.proven else "?"
        try:
            res = chi_r_formula(spec, r, budget=budget)
            formula = f"{res.value} ({res.entry}: {res.branch})" if res.guard_ok else "-"
        except InputError:
            formula = "-"
        lines.append(f"  r={r:<2} chi_r={value:<3} bound={cert.lower_bound_kind:<13} "
                     f"formula={formula}")
    return lines


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("families", nargs="+")
    ap.add_argument("--budget", type=int, default=5_000_000)
    args = ap.parse_args()
    for text in args.families:
        print("\n".join(profile(text, args.budget)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
