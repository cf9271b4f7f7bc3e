"""Closed-form conditional chromatic numbers and their explicit colorings.

The table ``ENTRIES`` holds one entry per family result. Each entry matches a
family descriptor, derives the parameters its formula needs, and lists
branches ``(guard, value, construction)``. A guard failure means "no claim";
values are never extrapolated outside a guard. Constructions return the graph
in the numbering the coloring formula is written for together with the
coloring, and are verified by the caller rather than trusted.

Guards are evaluated at the effective order ``min(r, Delta)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from condcolor.families import (
    FamilySpec,
    build,
    gen_complete_kpartite,
    gen_cycle,
    kpartite_edge_count,
    middle_graph,
)
from condcolor.graph import Graph, InputError, bipartition, is_connected, is_tree, max_degree, min_degree
from condcolor.kernel import (
    Coloring,
    VerificationReport,
    Violation,
    clamp_r,
    greedy_square_coloring,
    verify_conditional,
)
from condcolor.solver import DEFAULT_BUDGET, compute_chi_r


class GuardError(InputError):
    """The hypotheses of a closed form do not hold for the requested instance."""


class UnsupportedFamily(InputError):
    """No table entry covers the requested family."""


@dataclass(frozen=True)
class Construction:
    graph: Graph
    coloring: Coloring


@dataclass(frozen=True)
class BoundWitness:
    """Vertex set behind the lower bound of a branch.

    ``kind`` is ``vset`` (checked as a Vset-d2r at the row's order),
    ``clique`` (checked as a clique) or ``degree`` (the ``min(r, Delta)+1``
    bound, no vertex set).
    """

    kind: str
    members: tuple[int, ...] = ()


@dataclass(frozen=True)
class Branch:
    text: str
    guard: Callable[[dict, int], bool]
    value: Callable[[dict, int], int]
    construct: Callable[[dict, int], Construction] | None = None
    witness: Callable[[dict, int], BoundWitness] | None = None


@dataclass(frozen=True)
class ClosedFormEntry:
    name: str
    statement: str
    match: Callable[[FamilySpec], dict | None]
    branches: tuple[Branch, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    guard_ok: bool
    entry: str | None
    branch: str | None


def _coloring(colors: list[int]) -> Coloring:
    return Coloring(max(colors), tuple(colors))


def _is_windmill(spec: FamilySpec) -> tuple[int, int] | None:
    if spec.tag == "windmill" and len(spec.params) == 2:
        return spec.params[0], spec.params[1]
    if spec.tag == "friendship" and len(spec.params) == 1:
        return 3, spec.params[0]
    return None


def _operand(spec: FamilySpec, tag: str) -> FamilySpec | None:
    if spec.tag == tag and len(spec.params) == 1 and isinstance(spec.params[0], FamilySpec):
        return spec.params[0]
    return None


def _with_graph(spec: FamilySpec, **params) -> dict:
    g = build(spec)
    params.update(spec=spec, graph=g, Delta=max_degree(g))
    return params


# windmill ------------------------------------------------------------------


def _match_windmill(spec: FamilySpec) -> dict | None:
    kn = _is_windmill(spec)
    if kn is None or kn[0] < 3 or kn[1] < 2:
        return None
    return _with_graph(spec, k=kn[0], n=kn[1])


# line graph of windmill ------------------------------------------------------


def _match_line_windmill(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "line")
    kn = _is_windmill(base) if base is not None else None
    if kn is None or kn[0] < 3 or kn[1] < 1:
        return None
    k, n = kn
    return _with_graph(spec, k=k, n=n, z=n * (k - 1) + comb(k - 1, 2))


def _construct_line_windmill(p: dict, r: int) -> Construction:
    k, n, z = p["k"], p["n"], p["z"]
    block = comb(k - 1, 2)
    colors = []
    for i in range(1, p["graph"].n + 1):
        colors.append(i if i <= z else i % block + n * (k - 1) + 1)
    return Construction(p["graph"], _coloring(colors))


# line graph of friendship ------------------------------------------------------


def _match_line_friendship(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "line")
    kn = _is_windmill(base) if base is not None else None
    if kn is None or kn[0] != 3 or kn[1] < 2:
        return None
    return _with_graph(spec, n=kn[1])


def _construct_line_friendship(p: dict, r: int) -> Construction:
    n = p["n"]
    colors = []
    for i in range(1, 3 * n + 1):
        if i <= 2 * n:
            colors.append(i)
        elif i <= 3 * n - 1:
            colors.append(2 * n)
        else:
            colors.append(1)
    return Construction(p["graph"], _coloring(colors))


# middle graph of complete multipartite graph --------------------------------------


def _match_middle_kpartite(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "middle")
    if base is None or base.tag != "kpartite":
        return None
    sizes = tuple(base.params)
    return _with_graph(spec, sizes=sizes, parts=len(sizes), l=kpartite_edge_count(sizes))


def _construct_middle_kpartite(p: dict, r: int) -> Construction:
    l, sizes = p["l"], p["sizes"]
    colors = list(range(1, l + 1))
    for part, s in enumerate(sizes, start=1):
        colors.extend([l + part] * s)
    return Construction(p["graph"], _coloring(colors))


def _witness_middle_kpartite(p: dict, r: int) -> BoundWitness:
    l, sizes = p["l"], p["sizes"]
    firsts, offset = [], l
    for s in sizes:
        firsts.append(offset)
        offset += s
    return BoundWitness("vset", tuple(range(l)) + tuple(firsts))


# middle graph of a cycle ---------------------------------------------------------


def _match_middle_cycle(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "middle")
    if base is None or base.tag != "cycle" or base.params[0] < 4:
        return None
    return _with_graph(spec, n=base.params[0])


def _construct_middle_cycle_r2(p: dict, r: int) -> Construction:
    n = p["n"]
    colors = []
    for i in range(1, 2 * n + 1):
        if n % 2 == 0:
            if i <= n:
                c = 1
            elif i % 2 == 1:
                c = 2
            else:
                c = 3
        else:
            if i == 1 or (n + 1 <= i and i % 2 == 1):
                c = 1
            elif i == 2 * n or 2 <= i <= n - 1:
                c = 2
            else:
                c = 3
        colors.append(c)
    return Construction(p["graph"], _coloring(colors))


def _construct_middle_cycle_r3(p: dict, r: int) -> Construction:
    n = p["n"]
    colors = []
    for i in range(1, 2 * n + 1):
        if i > n and (i - n) % 2 == 0:
            c = 1
        elif i <= n and i % 2 == 1:
            c = 2
        elif i == n + 1 or (4 <= i <= n and i % 2 == 0):
            c = 3
        else:
            c = 4
        colors.append(c)
    return Construction(p["graph"], _coloring(colors))


# middle graph of friendship ---------------------------------------------------------


def _match_middle_friendship(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "middle")
    kn = _is_windmill(base) if base is not None else None
    if kn is None or kn[0] != 3 or kn[1] < 2:
        return None
    return _with_graph(spec, n=kn[1])


def _middle_friendship_case1(n: int) -> list[int]:
    colors = []
    for i in range(1, 5 * n + 2):
        if i <= 2 * n + 1:
            c = i
        elif i == 2 * n + 2:
            c = 3
        elif i == 2 * n + 3:
            c = 4
        elif i <= 4 * n + 1:
            c = 1 if (i - 2 * n) % 2 == 0 else 2
        else:
            c = 2 * n + 1
        colors.append(c)
    return colors


def _construct_middle_friendship_1(p: dict, r: int) -> Construction:
    return Construction(p["graph"], _coloring(_middle_friendship_case1(p["n"])))


def _construct_middle_friendship_2(p: dict, r: int) -> Construction:
    n = p["n"]
    base = _middle_friendship_case1(n)
    colors = [base[i - 1] if i <= 4 * n + 1 else 2 * n + 2 for i in range(1, 5 * n + 2)]
    return Construction(p["graph"], _coloring(colors))


def _construct_middle_friendship_3(p: dict, r: int) -> Construction:
    n = p["n"]
    colors = []
    for i in range(1, 5 * n + 2):
        if i <= 2 * n + 3:
            c = i
        elif i <= 4 * n + 1 and (i - 2 * n) % 2 == 0:
            c = 2 * n + 3
        elif i == 4 * n + 2 or (i <= 4 * n + 1 and (i - 2 * n) % 2 == 1):
            c = 2 * n + 4
        else:
            c = 2 * n + 2
        colors.append(c)
    return Construction(p["graph"], _coloring(colors))


# middle graph of complete bipartite graph ---------------------------------------


def _match_middle_bipartite(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "middle")
    if base is None or base.tag != "kpartite" or len(base.params) != 2:
        return None
    n1, n2 = sorted(base.params)
    return _with_graph(spec, n1=n1, n2=n2)


def _bipartite_middle_graph(n1: int, n2: int) -> Graph:
    """``M(K(n1, n2))`` with the two parts first, then edge ``(i, j)`` at ``n + (i-1) n2 + j``."""
    base = gen_complete_kpartite((n1, n2))
    layout = [("v", v) for v in range(n1 + n2)]
    layout += [("e", (i, n1 + j)) for i in range(n1) for j in range(n2)]
    return middle_graph(base, layout)


def _middle_bipartite_case1(n1: int, n2: int) -> list[int]:
    n = n1 + n2
    colors = []
    for i in range(1, n + n1 * n2 + 1):
        if i <= n:
            colors.append(n2 + 1)
        else:
            colors.append(1 + ((i - 1 - n) // n2 + (i - n)) % n2)
    return colors


def _construct_middle_bipartite_1(p: dict, r: int) -> Construction:
    g = _bipartite_middle_graph(p["n1"], p["n2"])
    return Construction(g, _coloring(_middle_bipartite_case1(p["n1"], p["n2"])))


def _construct_middle_bipartite_2(p: dict, r: int) -> Construction:
    n1, n2 = p["n1"], p["n2"]
    g = _bipartite_middle_graph(n1, n2)
    colors = _middle_bipartite_case1(n1, n2)
    colors[:n1] = [n2 + 2] * n1
    return Construction(g, _coloring(colors))


# gear ----------------------------------------------------------------------------


def _match_gear(spec: FamilySpec) -> dict | None:
    if spec.tag != "gear" or spec.params[0] < 3:
        return None
    return _with_graph(spec, n=spec.params[0])


def _construct_gear_r2(p: dict, r: int) -> Construction:
    n = p["n"]
    colors = [4] + [(1, 2, 3)[(i - 1) % 3] for i in range(1, 2 * n + 1)]
    if n % 3 == 2:
        colors[2 * n] = 2
    elif n % 3 == 1:
        for offset, c in zip(range(4, -1, -1), (2, 1, 3, 2, 3)):
            colors[2 * n - offset] = c
    return Construction(p["graph"], _coloring(colors))


def _cycle_chi2(p: dict) -> int:
    key = "_cycle_chi2"
    if key not in p:
        cert = compute_chi_r(gen_cycle(2 * p["n"]), 2, budget=p.get("budget", DEFAULT_BUDGET))
        if not cert.proven:
            raise GuardError("could not solve chi_2 of the rim cycle within budget")
        p[key] = cert
    return p[key].chi_r


def _construct_gear_r3(p: dict, r: int) -> Construction:
    _cycle_chi2(p)
    rim = p["_cycle_chi2"].witness
    colors = [rim.k + 1] + list(rim.colors)
    return Construction(p["graph"], _coloring(colors))


# line graph of complete k-ary tree -------------------------------------------------


def _match_line_kary(spec: FamilySpec) -> dict | None:
    base = _operand(spec, "line")
    if base is None or base.tag != "kary":
        return None
    k, h = base.params
    if k < 2 or h < 2:
        return None
    return _with_graph(spec, k=k, h=h)


def _construct_line_kary(p: dict, r: int) -> Construction:
    g = p["graph"]
    return Construction(g, greedy_square_coloring(g, range(g.n)))


# joins -------------------------------------------------------------------------------


def _match_join(spec: FamilySpec) -> dict | None:
    if spec.tag != "join" or len(spec.params) != 2:
        return None
    g1, g2 = build(spec.params[0]), build(spec.params[1])
    if not (is_connected(g1) and is_connected(g2)):
        return None
    return _with_graph(spec, g1=g1, g2=g2)


def _join_chis(p: dict) -> tuple[int, int]:
    if "_chis" not in p:
        certs = []
        for g in (p["g1"], p["g2"]):
            cert = compute_chi_r(g, 1, budget=p.get("budget", DEFAULT_BUDGET))
            if not cert.proven:
                raise GuardError("could not solve a join operand's chromatic number")
            certs.append(cert)
        p["_chis"] = certs
    return p["_chis"][0].chi_r, p["_chis"][1].chi_r


def _construct_join(p: dict, r: int) -> Construction:
    _join_chis(p)
    c1, c2 = (cert.witness for cert in p["_chis"])
    colors = list(c1.colors) + [c + c1.k for c in c2.colors]
    return Construction(p["graph"], _coloring(colors))


def _match_join_trees(spec: FamilySpec) -> dict | None:
    p = _match_join(spec)
    if p is None or not (is_tree(p["g1"]) and is_tree(p["g2"])):
        return None
    if p["g1"].n < 2 or p["g2"].n < 2:
        return None
    return p


def _tree_coloring(t: Graph, count: int) -> list[int]:
    """Proper coloring of a tree with exactly ``count >= 2`` colors."""
    a, b = bipartition(t)
    colors = [0] * t.n
    for v in a:
        colors[v] = 1
    for v in b:
        colors[v] = 2
    keep = {a[0], b[0]}
    fresh = 3
    for v in range(t.n):
        if fresh > count:
            break
        if v not in keep:
            colors[v] = fresh
            fresh += 1
    return colors


def _construct_join_trees(p: dict, r: int) -> Construction:
    g1, g2 = p["g1"], p["g2"]
    colors = _tree_coloring(g1, r - 1) + [c + r - 1 for c in _tree_coloring(g2, r - 1)]
    return Construction(p["graph"], _coloring(colors))


# bipartite graphs with common neighborhoods ---------------------------------------------


def _common_neighborhoods(g: Graph) -> tuple[list[int], list[int], list[int], list[int]] | None:
    sides = bipartition(g)
    if sides is None or g.n < 2:
        return None
    v1, v2 = sides
    s1 = set(g.adjacency[v1[0]])
    for u in v1[1:]:
        s1 &= set(g.adjacency[u])
    s2 = set(g.adjacency[v2[0]])
    for u in v2[1:]:
        s2 &= set(g.adjacency[u])
    return v1, v2, sorted(s1), sorted(s2)


def _match_bipartite(spec: FamilySpec) -> dict | None:
    if spec.tag in ("line", "middle", "join", "product"):
        return None
    try:
        g = build(spec)
    except InputError:
        return None
    parts = _common_neighborhoods(g)
    if parts is None:
        return None
    v1, v2, s1, s2 = parts
    if not s1 or not s2:
        return None
    return _with_graph(spec, V1=v1, V2=v2, S1=s1, S2=s2, s_min=min(len(s1), len(s2)))


def _construct_bipartite(p: dict, r: int) -> Construction:
    g = p["graph"]
    colors = [0] * g.n
    for v in p["V2"]:
        colors[v] = 1
    for j, v in enumerate(p["S1"]):
        colors[v] = 1 + j % r
    for v in p["V1"]:
        colors[v] = r + 1
    for j, v in enumerate(p["S2"]):
        colors[v] = r + 1 + j % r
    return Construction(g, _coloring(colors))


# paths ----------------------------------------------------------------------------------


def _match_path(spec: FamilySpec) -> dict | None:
    if spec.tag != "path" or spec.params[0] < 3:
        return None
    return _with_graph(spec, n=spec.params[0])


def _construct_path(p: dict, r: int) -> Construction:
    colors = [(3, 1, 2)[i % 3] for i in range(1, p["n"] + 1)]
    return Construction(p["graph"], _coloring(colors))


# table --------------------------------------------------------------------------------------


def _degree_witness(p: dict, r: int) -> BoundWitness:
    return BoundWitness("degree")


ENTRIES: tuple[ClosedFormEntry, ...] = (
    ClosedFormEntry(
        "join",
        "chi_r(G1 + G2) = chi(G1) + chi(G2) for r <= min(chi(G1), chi(G2)) + 1",
        _match_join,
        (
            Branch(
                "k1 + k2",
                lambda p, r: r <= min(_join_chis(p)) + 1,
                lambda p, r: sum(_join_chis(p)),
                _construct_join,
            ),
        ),
    ),
    ClosedFormEntry(
        "join-trees",
        "chi_r(T1 + T2) = 2(r - 1) for 4 <= r <= min(|T1|, |T2|) + 1",
        _match_join_trees,
        (
            Branch(
                "2(r-1)",
                lambda p, r: 4 <= r <= min(p["g1"].n, p["g2"].n) + 1,
                lambda p, r: 2 * (r - 1),
                _construct_join_trees,
            ),
        ),
    ),
    ClosedFormEntry(
        "bipartite-common-neighborhood",
        "chi_r(G) = 2r for bipartite G with r <= min(|S1|, |S2|)",
        _match_bipartite,
        (
            Branch(
                "2r",
                lambda p, r: r <= p["s_min"],
                lambda p, r: 2 * r,
                _construct_bipartite,
            ),
        ),
    ),
    ClosedFormEntry(
        "line-kary-tree",
        "chi_r(L(T)) = k + 1 if r <= k; 2k + 1 if r = Delta",
        _match_line_kary,
        (
            Branch("k+1", lambda p, r: r <= p["k"], lambda p, r: p["k"] + 1),
            Branch(
                "2k+1",
                lambda p, r: r == p["Delta"],
                lambda p, r: 2 * p["k"] + 1,
                _construct_line_kary,
                _degree_witness,
            ),
        ),
    ),
    ClosedFormEntry(
        "windmill",
        "chi_r(Wd(k,n)) = k if 2 <= r <= k - 1; min(r, Delta) + 1 if r >= k",
        _match_windmill,
        (
            Branch("k", lambda p, r: 2 <= r <= p["k"] - 1, lambda p, r: p["k"]),
            Branch(
                "min(r,Delta)+1",
                lambda p, r: r >= p["k"],
                lambda p, r: min(r, p["Delta"]) + 1,
                witness=_degree_witness,
            ),
        ),
    ),
    ClosedFormEntry(
        "line-windmill",
        "chi_Delta(L(Wd(k,n))) = n(k-1) + C(k-1, 2)",
        _match_line_windmill,
        (
            Branch(
                "z",
                lambda p, r: r == p["Delta"],
                lambda p, r: p["z"],
                _construct_line_windmill,
                lambda p, r: BoundWitness("vset", tuple(range(p["z"]))),
            ),
        ),
    ),
    ClosedFormEntry(
        "line-friendship",
        "chi_r(L(F_n)) = 2n if r < Delta; 2n + 1 if r = Delta",
        _match_line_friendship,
        (
            Branch(
                "2n",
                lambda p, r: r < p["Delta"],
                lambda p, r: 2 * p["n"],
                _construct_line_friendship,
                lambda p, r: BoundWitness("clique", tuple(range(2 * p["n"]))),
            ),
            Branch("2n+1", lambda p, r: r == p["Delta"], lambda p, r: 2 * p["n"] + 1,
                   witness=_degree_witness),
        ),
    ),
    ClosedFormEntry(
        "middle-kpartite",
        "chi_Delta(M(K(n_1..n_k))) = k + l, l the number of edges",
        _match_middle_kpartite,
        (
            Branch(
                "k+l",
                lambda p, r: r == p["Delta"],
                lambda p, r: p["parts"] + p["l"],
                _construct_middle_kpartite,
                _witness_middle_kpartite,
            ),
        ),
    ),
    ClosedFormEntry(
        "middle-cycle",
        "chi_r(M(C_n)) = 3 if r = 2; 4 if r = 3",
        _match_middle_cycle,
        (
            Branch("3", lambda p, r: r == 2, lambda p, r: 3, _construct_middle_cycle_r2,
                   _degree_witness),
            Branch("4", lambda p, r: r == 3, lambda p, r: 4, _construct_middle_cycle_r3,
                   _degree_witness),
        ),
    ),
    ClosedFormEntry(
        "middle-friendship",
        "chi_r(M(F_n)) = 2n + 1 if r <= 2n; 2n + 2 if r = 2n + 1; 2n + 4 if r = Delta",
        _match_middle_friendship,
        (
            Branch(
                "2n+1",
                lambda p, r: r <= 2 * p["n"],
                lambda p, r: 2 * p["n"] + 1,
                _construct_middle_friendship_1,
                lambda p, r: BoundWitness("clique", tuple(range(2 * p["n"] + 1))),
            ),
            Branch(
                "2n+2",
                lambda p, r: r == 2 * p["n"] + 1,
                lambda p, r: 2 * p["n"] + 2,
                _construct_middle_friendship_2,
                _degree_witness,
            ),
            Branch(
                "2n+4",
                lambda p, r: r == p["Delta"],
                lambda p, r: 2 * p["n"] + 4,
                _construct_middle_friendship_3,
                lambda p, r: BoundWitness(
                    "vset", tuple(range(2 * p["n"] + 3)) + (4 * p["n"] + 1,)),
            ),
        ),
    ),
    ClosedFormEntry(
        "middle-bipartite",
        "chi_r(M(K(n1,n2))) = n2 + 1 if r <= n2; n2 + 2 if r = n2 + 1 (n1 <= n2)",
        _match_middle_bipartite,
        (
            Branch(
                "n2+1",
                lambda p, r: r <= p["n2"],
                lambda p, r: p["n2"] + 1,
                _construct_middle_bipartite_1,
            ),
            Branch(
                "n2+2",
                lambda p, r: r == p["n2"] + 1,
                lambda p, r: p["n2"] + 2,
                _construct_middle_bipartite_2,
                _degree_witness,
            ),
        ),
    ),
    ClosedFormEntry(
        "gear",
        "chi_r(G_n) = 4 if r = 2; chi_2(C_2n) + 1 if r = 3; min(r, Delta) + 1 if r >= 4",
        _match_gear,
        (
            Branch("4", lambda p, r: r == 2, lambda p, r: 4, _construct_gear_r2),
            Branch("chi_2(C_2n)+1", lambda p, r: r == 3, lambda p, r: _cycle_chi2(p) + 1,
                   _construct_gear_r3),
            Branch("min(r,Delta)+1", lambda p, r: r >= 4, lambda p, r: min(r, p["Delta"]) + 1,
                   witness=_degree_witness),
        ),
    ),
    ClosedFormEntry(
        "path",
        "chi_2(P_n) = 3 for n >= 3, colored by index mod 3",
        _match_path,
        (Branch("3", lambda p, r: r == 2, lambda p, r: 3, _construct_path, _degree_witness),),
    ),
)

ENTRY_NAMES = tuple(e.name for e in ENTRIES)


@dataclass
class Evaluation:
    """One table entry matched against one ``(family, r)``."""

    entry: ClosedFormEntry
    params: dict
    r: int
    effective_r: int
    branch: Branch | None

    @property
    def guard_ok(self) -> bool:
        return self.branch is not None

    def value(self) -> int | None:
        return self.branch.value(self.params, self.effective_r) if self.branch else None

    def construct(self) -> Construction | None:
        if self.branch is None or self.branch.construct is None:
            return None
        return self.branch.construct(self.params, self.effective_r)

    def witness(self) -> BoundWitness | None:
        if self.branch is None or self.branch.witness is None:
            return None
        return self.branch.witness(self.params, self.effective_r)


def evaluations(family: FamilySpec | str, r: int, budget: int = DEFAULT_BUDGET) -> list[Evaluation]:
    """Every table entry matching ``family``, with the branch whose guard holds at ``r``."""
    if isinstance(family, str):
        family = FamilySpec.parse(family)
    out = []
    for entry in ENTRIES:
        params = entry.match(family)
        if params is None:
            continue
        params["budget"] = budget
        eff = clamp_r(params["graph"], r)
        branch = next((b for b in entry.branches if b.guard(params, eff)), None)
        out.append(Evaluation(entry, params, r, eff, branch))
    return out


def chi_r_formula(family: FamilySpec | str, r: int, budget: int = DEFAULT_BUDGET) -> FormulaResult:
    """Closed-form ``chi_r`` for ``family``, or ``guard_ok=False`` when no hypothesis holds."""
    evs = evaluations(family, r, budget)
    if not evs:
        raise UnsupportedFamily(f"no closed form covers {family}")
    for ev in evs:
        if ev.guard_ok:
            return FormulaResult(ev.value(), True, ev.entry.name, ev.branch.text)
    return FormulaResult(None, False, evs[0].entry.name, None)


def construct_coloring(family: FamilySpec | str, r: int, budget: int = DEFAULT_BUDGET) -> Construction:
    """Explicit coloring recorded for ``family`` at order ``r``.

    Raises :class:`GuardError` when no in-guard branch has a construction.
    The result is not verified here; see :func:`check_construction`.
    """
    evs = evaluations(family, r, budget)
    if not evs:
        raise UnsupportedFamily(f"no closed form covers {family}")
    for ev in evs:
        if ev.guard_ok and ev.branch.construct is not None:
            return ev.construct()
    raise GuardError(f"no constructive branch applies to {family} at r={r}")


def check_construction(con: Construction, value: int, r: int):
    """Verify a construction as a surjective conditional ``(value, r)``-coloring."""
    c = con.coloring
    if c.k > value:
        over = tuple(v for v, col in enumerate(c.colors) if col > value)
        return VerificationReport([Violation("range", over)])
    return verify_conditional(con.graph, Coloring(value, c.colors), r, require_surjective=True)


# Cartesian products ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ProductBound:
    upper_bound: int
    graph: Graph
    coloring: Coloring
    chi1: int
    chi2: int


def cartesian_bound(
    g1: Graph, r1: int, g2: Graph, r2: int, r: int, budget: int = DEFAULT_BUDGET
) -> ProductBound:
    """Product of optimal colorings of the factors, as a coloring of ``g1 x g2``.

    Requires ``r1 >= delta(g1)``, ``r2 >= delta(g2)`` and
    ``r <= delta(g1) + delta(g2)``. Pair ``(a, b)`` becomes color
    ``(a - 1) * chi2 + b``.
    """
    from condcolor.families import cartesian_product

    d1, d2 = min_degree(g1), min_degree(g2)
    if r1 < d1 or r2 < d2 or r > d1 + d2:
        raise GuardError(
            f"need r1 >= {d1}, r2 >= {d2}, r <= {d1 + d2}; got r1={r1}, r2={r2}, r={r}")
    c1 = compute_chi_r(g1, r1, budget=budget)
    c2 = compute_chi_r(g2, r2, budget=budget)
    if not (c1.proven and c2.proven):
        raise GuardError("factor chi_r not solved within budget")
    k1, k2 = c1.chi_r, c2.chi_r
    colors = [(c1.witness[x1] - 1) * k2 + c2.witness[x2]
              for x1 in range(g1.n) for x2 in range(g2.n)]
    return ProductBound(k1 * k2, cartesian_product(g1, g2), Coloring(k1 * k2, tuple(colors)), k1, k2)
