"""Colorings, (C1)/(C2)/(C3) checks, Vset-d2r witnesses and cheap lower bounds."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from condcolor.graph import Edge, Graph, InputError, distance2_neighborhood, max_degree

log = logging.getLogger(__name__)

DEFAULT_VSET_MAX_N = 32
DEFAULT_VSET_BUDGET = 200_000


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors ``1..k`` to vertices ``0..len(colors)-1``."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise InputError(f"color count must be positive, got {self.k}")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise InputError(f"color {bad[0]} outside 1..{self.k}")

    @classmethod
    def of(cls, colors: Sequence[int], k: int | None = None) -> Coloring:
        colors = tuple(int(c) for c in colors)
        return cls(k if k is not None else max(colors, default=1), colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def used(self) -> set[int]:
        return set(self.colors)

    def classes(self) -> list[list[int]]:
        """Color classes as sorted vertex lists, ordered by smallest member."""
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            by_color.setdefault(c, []).append(v)
        return sorted(by_color.values())

    def signature(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(b) for b in self.classes())


@dataclass(frozen=True)
class ProblemSpec:
    """A graph with a conditional order ``r``; ``r`` above the maximum degree is clamped."""

    graph: Graph
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InputError(f"order r must be >= 1, got {self.r}")

    @property
    def effective_r(self) -> int:
        return clamp_r(self.graph, self.r)


def clamp_r(g: Graph, r: int) -> int:
    if r < 1:
        raise InputError(f"order r must be >= 1, got {r}")
    if g.n == 0:
        return r
    delta = max_degree(g)
    if r > delta and delta > 0:
        log.info("r=%d exceeds maximum degree %d; using r=%d", r, delta, delta)
        return delta
    return r


@dataclass(frozen=True)
class Violation:
    condition: str  # "C1", "C2", "surjectivity" or "range"
    where: object  # edge, vertex, or missing colors

    def __str__(self) -> str:
        return f"{self.condition} at {self.where}"


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def by_condition(self, condition: str) -> list[object]:
        return [v.where for v in self.violations if v.condition == condition]


def _require_total(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise InputError(f"coloring covers {len(c)} vertices, graph has {g.n}")


def required_colors(g: Graph, v: int, r: int) -> int:
    """Distinct neighbor colors demanded at ``v``: ``min(d(v), r)``."""
    return min(len(g.adjacency[v]), r)


def verify_proper(g: Graph, c: Coloring) -> VerificationReport:
    _require_total(g, c)
    report = VerificationReport()
    for u, v in g.edges():
        if c[u] == c[v]:
            report.violations.append(Violation("C1", (u, v)))
    return report


def verify_c2(g: Graph, c: Coloring, r: int) -> VerificationReport:
    _require_total(g, c)
    report = VerificationReport()
    for v in range(g.n):
        seen = {c[u] for u in g.adjacency[v]}
        if len(seen) < required_colors(g, v, r):
            report.violations.append(Violation("C2", v))
    return report


def verify_conditional(
    g: Graph, c: Coloring, r: int, require_surjective: bool = True
) -> VerificationReport:
    """Check that ``c`` is a conditional ``(c.k, r)``-coloring of ``g``."""
    if r < 1:
        raise InputError(f"order r must be >= 1, got {r}")
    report = verify_proper(g, c)
    report.violations += verify_c2(g, c, r).violations
    if require_surjective:
        missing = sorted(set(range(1, c.k + 1)) - c.used())
        if missing:
            report.violations.append(Violation("surjectivity", tuple(missing)))
    return report


def verify_c3(g: Graph, r: int) -> tuple[bool, Edge | None]:
    """Every edge must lie in the neighborhood of some vertex of degree at most ``r``.

    Returns ``(True, None)`` or ``(False, edge)`` for the first failing edge.
    """
    low = [len(row) <= r for row in g.adjacency]
    for u, v in g.edges():
        nu = g._row_set(u)
        if not any(low[w] and w in nu for w in g.adjacency[v]):
            return False, (u, v)
    return True, None


@dataclass(frozen=True)
class VsetWitness:
    members: tuple[int, ...]
    r: int

    def __len__(self) -> int:
        return len(self.members)


def verify_vset_d2r(
    g: Graph, members: Iterable[int], r: int
) -> tuple[bool, int | tuple[int, int] | None]:
    """Check the Vset-d2r conditions for ``members``.

    Every member must have degree at most ``r``, and every pair of members
    must be adjacent or have a common neighbor that is itself a member.
    On failure the offending vertex or pair is returned.
    """
    s = sorted(set(members))
    for u in s:
        g._check(u)
        if len(g.adjacency[u]) > r:
            return False, u
    inside = set(s)
    for i, a in enumerate(s):
        na = g._row_set(a)
        for b in s[i + 1 :]:
            if b in na:
                continue
            if not any(w in na for w in g.adjacency[b] if w in inside):
                return False, (a, b)
    return True, None


def trivial_lower_bound(g: Graph, r: int) -> int:
    """``min(r, Delta) + 1``; any conditional coloring needs this many colors."""
    if g.n == 0:
        return 0
    if g.n == 1:
        return 1
    return min(r, max_degree(g)) + 1


def _vset_compatible(g: Graph, cand: list[int]) -> dict[int, set[int]]:
    cset = set(cand)
    compat: dict[int, set[int]] = {v: set() for v in cand}
    for i, a in enumerate(cand):
        na = g._row_set(a)
        for b in cand[i + 1 :]:
            if b in na or any(w in cset and w in na for w in g.adjacency[b]):
                compat[a].add(b)
                compat[b].add(a)
    return compat


def _greedy_vset(g: Graph, r: int) -> list[int]:
    order = sorted((v for v in range(g.n) if len(g.adjacency[v]) <= r),
                   key=lambda v: (len(g.adjacency[v]), v))
    chosen: list[int] = []
    for v in order:
        if verify_vset_d2r(g, chosen + [v], r)[0]:
            chosen.append(v)
    return sorted(chosen)


def vset_lower_bound(
    g: Graph,
    r: int,
    budget: int = DEFAULT_VSET_BUDGET,
    max_exact_n: int = DEFAULT_VSET_MAX_N,
) -> tuple[int, VsetWitness]:
    """Largest Vset-d2r found within ``budget`` search nodes.

    Exact branch and bound over sets that are cliques of the pairwise
    compatibility relation, for graphs with at most ``max_exact_n`` vertices;
    a greedy set (ascending degree, then id) otherwise or as a floor. The
    returned witness always verifies; it is maximal only when the search
    completed. Among maximum sets the lexicographically smallest is kept.
    """
    best = _greedy_vset(g, r)
    if g.n <= max_exact_n:
        cand = [v for v in range(g.n) if len(g.adjacency[v]) <= r]
        compat = _vset_compatible(g, cand)
        nodes = 0
        found: list[int] = []
        best_size = 0

        def extend(current: list[int], pool: list[int]) -> bool:
            nonlocal nodes, found, best_size
            nodes += 1
            if nodes > budget:
                return False
            if len(current) > best_size and verify_vset_d2r(g, current, r)[0]:
                found, best_size = list(current), len(current)
            for i, v in enumerate(pool):
                if len(current) + len(pool) - i <= best_size:
                    break
                nxt = [u for u in pool[i + 1 :] if u in compat[v]]
                current.append(v)
                ok = extend(current, nxt)
                current.pop()
                if not ok:
                    return False
            return True

        complete = extend([], cand)
        if best_size > len(best) or (complete and best_size == len(best) and found < best):
            best = found
    return len(best), VsetWitness(tuple(best), r)


def greedy_square_coloring(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """Color vertices in ``order`` with the least color unused within distance two.

    No two vertices at distance at most 2 share a color, so the result meets
    (C1) and (C2) for every ``r``.
    """
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise InputError("order must be a permutation of the vertices")
    colors = [0] * g.n
    for v in order:
        taken = {colors[u] for u in distance2_neighborhood(g, v)}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring.of(colors)
