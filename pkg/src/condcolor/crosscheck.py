"""Sweep closed-form values against the exact solver.

Each row is one in-guard ``(family, r, entry branch)``: the formula value, the
solver's ``chi_r``, and whether the explicit coloring and lower-bound vertex
set verify. Rows are sorted by family key, family, r and entry so the output
is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from condcolor.closed_form import check_construction, evaluations
from condcolor.families import FamilySpec
from condcolor.graph import is_clique, max_degree
from condcolor.kernel import trivial_lower_bound, verify_vset_d2r
from condcolor.solver import DEFAULT_BUDGET, compute_chi_r

MATCH = "MATCH"
MISMATCH = "MISMATCH"
INDETERMINATE = "INDETERMINATE"
CONSTRUCTION_INVALID = "CONSTRUCTION-INVALID"


@dataclass(frozen=True)
class CheckRow:
    key: str
    family: str
    r: int
    entry: str
    branch: str
    guard: bool
    formula: int | None
    solver: int | None
    construction: str
    witness: str
    status: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _spec(text: str) -> FamilySpec:
    return FamilySpec.parse(text)


def _delta(text: str) -> int:
    return max_degree(_spec(text).build())


def _sweep_windmill(max_n: int):
    for k in (3, 4):
        for n in range(2, max_n + 1):
            yield f"windmill({k},{n})", range(2, k + 3)


def _sweep_line_windmill(max_n: int):
    for k in (3, 4):
        for n in range(2, max_n + 1):
            if k == 4 and n > 3:
                continue
            f = f"line(windmill({k},{n}))"
            yield f, [_delta(f)]


def _sweep_line_friendship(max_n: int):
    for n in range(2, max_n + 1):
        f = f"line(friendship({n}))"
        yield f, range(1, _delta(f) + 1)


def _sweep_middle_kpartite(max_n: int):
    for sizes in ((1, 2), (2, 2), (1, 3), (2, 3), (1, 1, 1), (1, 1, 2), (3, 3), (2, 2, 2), (1, 2, 3)):
        if sum(sizes) <= max_n:
            f = "middle(kpartite({}))".format(",".join(map(str, sizes)))
            yield f, [_delta(f)]


def _sweep_middle_bipartite(max_n: int):
    for n1 in range(1, max_n + 1):
        for n2 in range(n1, max_n + 1):
            if n1 + n2 <= max_n and n1 + n2 >= 3:
                yield f"middle(kpartite({n1},{n2}))", range(1, n2 + 2)


def _sweep_middle_cycle(max_n: int):
    for n in range(4, max_n + 1):
        yield f"middle(cycle({n}))", (2, 3)


def _sweep_middle_friendship(max_n: int):
    for n in range(2, max_n + 1):
        f = f"middle(friendship({n}))"
        yield f, range(1, _delta(f) + 1)


def _sweep_gear(max_n: int):
    for n in range(3, max_n + 1):
        yield f"gear({n})", range(2, 6)


def _sweep_line_kary(max_n: int):
    for k, h in ((2, 2), (3, 2), (2, 3), (4, 2)):
        if h <= max_n:
            f = f"line(kary({k},{h}))"
            yield f, range(1, _delta(f) + 1)


def _sweep_join(max_n: int):
    pairs = ("complete(2),complete(3)", "path(3),cycle(5)", "cycle(4),complete(3)",
             "path(2),cycle(5)", "cycle(5),cycle(5)", "complete(1),cycle(4)")
    for pair in pairs:
        f = f"join({pair})"
        if _spec(f).build().n <= max_n:
            yield f, range(1, 6)


def _sweep_join_trees(max_n: int):
    pairs = ("path(3),path(4)", "path(4),path(4)", "path(4),path(5)", "kary(3,1),path(4)",
             "path(5),kary(2,2)")
    for pair in pairs:
        f = f"join({pair})"
        if _spec(f).build().n <= max_n:
            yield f, range(4, 7)


def _sweep_bipartite(max_n: int):
    for f in ("kpartite(2,2)", "kpartite(2,3)", "kpartite(3,3)", "kpartite(2,4)", "kpartite(3,4)",
              "cycle(4)", "kpartite(1,3)"):
        if _spec(f).build().n <= max_n:
            yield f, range(1, 5)


def _sweep_path(max_n: int):
    for n in range(3, max_n + 1):
        yield f"path({n})", (2,)


# family key -> (sweep, default size limit)
SWEEPS: dict[str, tuple[Callable[[int], Iterable], int]] = {
    "windmill": (_sweep_windmill, 4),
    "LWd": (_sweep_line_windmill, 3),
    "LF": (_sweep_line_friendship, 4),
    "MKp": (_sweep_middle_kpartite, 6),
    "MKbip": (_sweep_middle_bipartite, 6),
    "MC": (_sweep_middle_cycle, 10),
    "MF": (_sweep_middle_friendship, 3),
    "gear": (_sweep_gear, 7),
    "LT": (_sweep_line_kary, 3),
    "join": (_sweep_join, 10),
    "joinT": (_sweep_join_trees, 9),
    "bipartite": (_sweep_bipartite, 7),
    "path": (_sweep_path, 9),
}

# which table entries a family key exercises
_ENTRIES_FOR = {
    "windmill": {"windmill"},
    "LWd": {"line-windmill"},
    "LF": {"line-friendship"},
    "MKp": {"middle-kpartite"},
    "MKbip": {"middle-bipartite"},
    "MC": {"middle-cycle"},
    "MF": {"middle-friendship"},
    "gear": {"gear"},
    "LT": {"line-kary-tree"},
    "join": {"join"},
    "joinT": {"join-trees"},
    "bipartite": {"bipartite-common-neighborhood"},
    "path": {"path"},
}


def _check_witness(ev, r: int, value: int) -> str:
    w = ev.witness()
    if w is None:
        return "n/a"
    g = ev.params["graph"]
    if w.kind == "degree":
        ok = trivial_lower_bound(g, r) >= value
        return "VALID" if ok else f"INVALID: degree bound {trivial_lower_bound(g, r)} < {value}"
    if len(w.members) != value:
        return f"INVALID: size {len(w.members)} != {value}"
    if w.kind == "clique":
        return "VALID" if is_clique(g, w.members) else "INVALID: not a clique"
    ok, bad = verify_vset_d2r(g, w.members, r)
    return "VALID" if ok else f"INVALID: Vset-d2r fails at {bad}"


def _check_construction(ev, r: int, value: int) -> str:
    con = ev.construct()
    if con is None:
        return "n/a"
    report = check_construction(con, value, r)
    if report.ok:
        return "VALID"
    first = report.violations[0]
    where = first.where
    if first.condition in ("C2",):
        where = f"v{where}:{con.graph.label(where)}"
    return f"INVALID: {first.condition} at {where} ({len(report.violations)} violations)"


def check_instance(key: str, family: str, r: int, budget: int = DEFAULT_BUDGET) -> list[CheckRow]:
    spec = FamilySpec.parse(family)
    rows = []
    wanted = _ENTRIES_FOR.get(key)
    solved = None
    for ev in evaluations(spec, r, budget):
        if wanted is not None and ev.entry.name not in wanted:
            continue
        if not ev.guard_ok:
            continue
        if solved is None:
            solved = compute_chi_r(ev.params["graph"], r, budget=budget)
        value = ev.value()
        eff = ev.effective_r
        construction = _check_construction(ev, eff, value)
        witness = _check_witness(ev, eff, value)
        if not solved.proven:
            status = INDETERMINATE
        elif solved.chi_r != value:
            status = MISMATCH
        elif construction.startswith("INVALID"):
            status = CONSTRUCTION_INVALID
        else:
            status = MATCH
        rows.append(CheckRow(key, str(spec), r, ev.entry.name, ev.branch.text, True, value,
                             solved.chi_r, construction, witness, status))
    return rows


def crosscheck(
    families: Iterable[str] | None = None,
    max_n: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[CheckRow]:
    """Run the sweep for the given family keys (all keys by default)."""
    keys = list(families) if families else list(SWEEPS)
    unknown = [k for k in keys if k not in SWEEPS]
    if unknown:
        raise KeyError(f"unknown family key(s): {', '.join(unknown)}")
    rows = []
    for key in sorted(keys):
        sweep, default_n = SWEEPS[key]
        for family, rs in sweep(max_n if max_n is not None else default_n):
            for r in rs:
                rows.extend(check_instance(key, family, r, budget))
    return rows


def summary(rows: list[CheckRow]) -> dict[str, int]:
    counts = {MATCH: 0, MISMATCH: 0, INDETERMINATE: 0, CONSTRUCTION_INVALID: 0}
    for row in rows:
        counts[row.status] += 1
    return counts


def to_jsonl(rows: list[CheckRow]) -> str:
    return "".join(row.to_json() + "\n" for row in rows)


def to_table(rows: list[CheckRow]) -> str:
    header = ("family", "r", "entry", "branch", "formula", "solver", "construction", "witness",
              "status")
    body = [(row.family, str(row.r), row.entry, row.branch, str(row.formula), str(row.solver),
             row.construction, row.witness, row.status) for row in rows]
    widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h)
              for i, h in enumerate(header)]
    def fmt(cells) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    lines = [fmt(header), fmt("-" * w for w in widths)]
    lines.extend(fmt(b) for b in body)
    counts = summary(rows)
    lines.append("")
    lines.append(" ".join(f"{k}={v}" for k, v in counts.items()) + f" total={len(rows)}")
    return "\n".join(lines) + "\n"
