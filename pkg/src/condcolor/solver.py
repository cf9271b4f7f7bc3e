"""Exact conditional chromatic numbers, enumeration and unique colorability.

All searches share one backtracking core. A partial assignment is pruned when

* an edge becomes monochromatic (C1);
* a vertex ``w`` with ``s`` distinct colors on colored neighbors and ``u``
  uncolored neighbors has ``s + u < min(d(w), r)`` (C2 can no longer be met);
* an uncolored vertex already sees all ``k`` colors.

Feasibility search picks the next vertex DSATUR-style and only opens one new
color per node (colors are interchangeable). Witness search walks vertices in
id order with colors ascending, so its first hit is the lexicographically
least valid assignment; the same one-new-color rule is safe there because the
least assignment introduces colors in order. Enumeration walks in id order
with no symmetry breaking.

Budgets count search nodes, so results do not depend on machine speed. A
search that runs out of nodes reports "unknown", never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from condcolor.graph import Graph, InputError, is_clique, is_connected
from condcolor.kernel import (
    Coloring,
    VsetWitness,
    trivial_lower_bound,
    verify_conditional,
    vset_lower_bound,
)

DEFAULT_BUDGET = 5_000_000
DEFAULT_CAP = 1_000_000

PartitionSignature = tuple[tuple[int, ...], ...]


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, k: int, r: int, budget: int | None) -> None:
        self.g = g
        self.n = g.n
        self.adj = g.adjacency
        self.k = k
        self.req = [min(len(row), r) for row in self.adj]
        self.colors = [0] * self.n
        self.cnt = [[0] * (k + 2) for _ in range(self.n)]
        self.distinct = [0] * self.n
        self.unc = [len(row) for row in self.adj]
        self.usage = [0] * (k + 2)
        self.n_used = 0
        self.max_used = 0
        self.nodes = 0
        self.budget = budget

    def hopeless(self) -> bool:
        # a vertex and its required neighbor colors must all differ
        return any(req + 1 > self.k for req in self.req) or (self.n > 0 and self.k < 1)

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _OutOfBudget

    def allowed(self, v: int, c: int) -> bool:
        if self.cnt[v][c]:
            return False
        cnt, distinct, unc, req, colors, k = (
            self.cnt, self.distinct, self.unc, self.req, self.colors, self.k)
        for w in self.adj[v]:
            s = distinct[w] + (cnt[w][c] == 0)
            if s + unc[w] - 1 < req[w]:
                return False
            if colors[w] == 0 and s >= k:
                return False
        return True

    def assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        for w in self.adj[v]:
            row = self.cnt[w]
            if row[c] == 0:
                self.distinct[w] += 1
            row[c] += 1
            self.unc[w] -= 1
        if self.usage[c] == 0:
            self.n_used += 1
        self.usage[c] += 1

    def unassign(self, v: int, c: int) -> None:
        self.colors[v] = 0
        for w in self.adj[v]:
            row = self.cnt[w]
            row[c] -= 1
            if row[c] == 0:
                self.distinct[w] -= 1
            self.unc[w] += 1
        self.usage[c] -= 1
        if self.usage[c] == 0:
            self.n_used -= 1

    # feasibility ---------------------------------------------------------

    def _pick(self) -> int:
        best, best_key = -1, None
        for v in range(self.n):
            if self.colors[v]:
                continue
            key = (self.distinct[v], len(self.adj[v]))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def feasible(self) -> bool:
        return self._dsatur(0)

    def _dsatur(self, depth: int) -> bool:
        if depth == self.n:
            return True
        self.tick()
        v = self._pick()
        top = min(self.k, self.max_used + 1)
        for c in range(1, top + 1):
            if not self.allowed(v, c):
                continue
            prev = self.max_used
            self.max_used = max(prev, c)
            self.assign(v, c)
            if self._dsatur(depth + 1):
                return True
            self.unassign(v, c)
            self.max_used = prev
        return False

    # lexicographically least -------------------------------------------

    def least(self) -> bool:
        return self._lex(0)

    def _lex(self, v: int) -> bool:
        if v == self.n:
            return True
        self.tick()
        top = min(self.k, self.max_used + 1)
        for c in range(1, top + 1):
            if not self.allowed(v, c):
                continue
            prev = self.max_used
            self.max_used = max(prev, c)
            self.assign(v, c)
            if self._lex(v + 1):
                return True
            self.unassign(v, c)
            self.max_used = prev
        return False

    # enumeration ----------------------------------------------------------

    def all_assignments(self, surjective: bool) -> Iterator[tuple[int, ...]]:
        yield from self._enum(0, surjective)

    def _enum(self, v: int, surjective: bool) -> Iterator[tuple[int, ...]]:
        if v == self.n:
            if not surjective or self.n_used == self.k:
                yield tuple(self.colors)
            return
        self.tick()
        if surjective and self.n_used + (self.n - v) < self.k:
            return
        for c in range(1, self.k + 1):
            if not self.allowed(v, c):
                continue
            self.assign(v, c)
            yield from self._enum(v + 1, surjective)
            self.unassign(v, c)


# results ---------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a feasibility search: ``feasible`` is None when the budget ran out."""

    feasible: bool | None
    witness: Coloring | None
    nodes: int


@dataclass(frozen=True)
class ChiCertificate:
    """Exact value of ``chi_r`` with a witness coloring and a lower-bound argument.

    ``lower_bound_kind`` is one of ``degree-bound``, ``vset-witness``,
    ``clique-witness`` or ``exhaustion``. When the budget ran out ``chi_r``
    and ``witness`` are None and ``lower_bound`` is the best proven bound.
    ``canonical`` tells whether the witness is the lexicographically least
    valid assignment.
    """

    r: int
    chi_r: int | None
    witness: Coloring | None
    lower_bound: int
    lower_bound_kind: str
    lower_bound_witness: tuple[int, ...] | None
    nodes: int
    canonical: bool = True

    @property
    def proven(self) -> bool:
        return self.chi_r is not None


def _check_order(r: int) -> None:
    if r < 1:
        raise InputError(f"order r must be >= 1, got {r}")


def exists_conditional_coloring(
    g: Graph, k: int, r: int, budget: int | None = DEFAULT_BUDGET
) -> SearchResult:
    """Decide whether ``g`` has a (C1)+(C2) coloring with at most ``k`` colors.

    Giving one vertex a fresh color never breaks (C1) or (C2), so a ``k``
    answer of yes implies yes for every larger ``k``.
    """
    _check_order(r)
    if k < 1:
        raise InputError(f"color count must be positive, got {k}")
    if g.n == 0:
        return SearchResult(True, Coloring(k, ()), 0)
    s = _Search(g, k, r, budget)
    if s.hopeless():
        return SearchResult(False, None, 0)
    try:
        ok = s.feasible()
    except _OutOfBudget:
        return SearchResult(None, None, s.nodes)
    witness = Coloring(max(s.colors), tuple(s.colors)) if ok else None
    return SearchResult(ok, witness, s.nodes)


def least_conditional_coloring(
    g: Graph, k: int, r: int, budget: int | None = DEFAULT_BUDGET
) -> SearchResult:
    """Lexicographically least assignment vector over ``1..k`` meeting (C1) and (C2)."""
    _check_order(r)
    s = _Search(g, k, r, budget)
    if s.hopeless():
        return SearchResult(False, None, 0)
    try:
        ok = s.least()
    except _OutOfBudget:
        return SearchResult(None, None, s.nodes)
    witness = Coloring(max(s.colors, default=1), tuple(s.colors)) if ok else None
    return SearchResult(ok, witness, s.nodes)


def _first_use_relabel(colors: tuple[int, ...]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    for c in colors:
        mapping.setdefault(c, len(mapping) + 1)
    return tuple(mapping[c] for c in colors)


def compute_chi_r(
    g: Graph,
    r: int,
    budget: int | None = DEFAULT_BUDGET,
    *,
    clique: tuple[int, ...] | list[int] | None = None,
    vset_budget: int = 20_000,
) -> ChiCertificate:
    """Smallest ``k`` admitting a conditional ``(k, r)``-coloring of a connected graph.

    The search starts at the best of the degree bound, a Vset-d2r bound and
    an optional caller-supplied clique, and increases ``k`` until a coloring
    exists. ``budget`` caps search nodes over all values of ``k``.
    """
    _check_order(r)
    if not is_connected(g):
        raise InputError("chi_r is only defined here for connected graphs")
    if g.n == 1:
        return ChiCertificate(r, 1, Coloring(1, (1,)), 1, "degree-bound", None, 0)

    bound, kind, bound_witness = trivial_lower_bound(g, r), "degree-bound", None
    vbound, vwit = vset_lower_bound(g, r, budget=vset_budget)
    if vbound > bound:
        bound, kind, bound_witness = vbound, "vset-witness", vwit.members
    if clique is not None:
        members = tuple(sorted(set(clique)))
        if not is_clique(g, members):
            raise InputError("supplied clique witness is not a clique")
        if len(members) > bound:
            bound, kind, bound_witness = len(members), "clique-witness", members

    nodes = 0
    k = bound
    while True:
        left = None if budget is None else budget - nodes
        res = exists_conditional_coloring(g, k, r, budget=left)
        nodes += res.nodes
        if res.feasible is None:
            return ChiCertificate(r, None, None, k, kind if k == bound else "exhaustion",
                                  bound_witness if k == bound else None, nodes, False)
        if res.feasible:
            break
        k += 1

    canon = least_conditional_coloring(g, k, r, budget=budget)
    nodes += canon.nodes
    if canon.feasible:
        witness, canonical = canon.witness, True
    else:
        # canonical search ran out of budget; fall back to the feasibility witness
        witness, canonical = Coloring(k, _first_use_relabel(res.witness.colors)), False
    if k > bound:
        kind, bound_witness = "exhaustion", None
    return ChiCertificate(r, k, witness, k, kind, bound_witness, nodes, canonical)


class ColoringStream:
    """Iterable over valid colorings in lexicographic order of assignment vectors.

    Stops after ``cap`` colorings; ``truncated`` is then set if more exist.
    ``exhausted`` is set if the node budget ran out (the stream is incomplete).
    """

    def __init__(self, g: Graph, k: int, r: int, surjective: bool = True,
                 cap: int | None = DEFAULT_CAP, budget: int | None = None) -> None:
        _check_order(r)
        if k < 1:
            raise InputError(f"color count must be positive, got {k}")
        self.g, self.k, self.r = g, k, r
        self.surjective = surjective
        self.cap = cap
        self.budget = budget
        self.truncated = False
        self.exhausted = False
        self.count = 0

    def __iter__(self) -> Iterator[Coloring]:
        s = _Search(self.g, self.k, self.r, self.budget)
        if self.g.n and s.hopeless():
            return
        try:
            for colors in s.all_assignments(self.surjective):
                if self.cap is not None and self.count >= self.cap:
                    self.truncated = True
                    return
                self.count += 1
                yield Coloring(self.k, colors)
        except _OutOfBudget:
            self.exhausted = True


def enumerate_conditional_colorings(
    g: Graph, k: int, r: int, surjective: bool = True,
    cap: int | None = DEFAULT_CAP, budget: int | None = None,
) -> ColoringStream:
    return ColoringStream(g, k, r, surjective, cap, budget)


@dataclass(frozen=True)
class UniquenessReport:
    """``unique`` is None when neither verdict could be established."""

    unique: bool | None
    chi_r: int | None
    partitions: int
    complete: bool
    first: PartitionSignature | None
    second: PartitionSignature | None


def is_uniquely_kr_colorable(
    g: Graph, r: int, cap: int | None = DEFAULT_CAP, budget: int | None = DEFAULT_BUDGET
) -> UniquenessReport:
    """Whether all conditional ``(chi_r, r)``-colorings induce one vertex partition."""
    cert = compute_chi_r(g, r, budget=budget)
    if not cert.proven:
        return UniquenessReport(None, None, 0, False, None, None)
    stream = enumerate_conditional_colorings(g, cert.chi_r, r, True, cap, budget)
    seen: dict[PartitionSignature, None] = {}
    for c in stream:
        seen.setdefault(c.signature(), None)
    sigs = list(seen)
    complete = not (stream.truncated or stream.exhausted)
    if len(sigs) >= 2:
        unique: bool | None = False
    else:
        unique = True if complete and sigs else None
    return UniquenessReport(
        unique, cert.chi_r, len(sigs), complete,
        sigs[0] if sigs else None, sigs[1] if len(sigs) > 1 else None,
    )


@dataclass(frozen=True)
class ImplicationCheck:
    """Premise and conclusion of "uniquely p-colorable and r <= p-1 gives chi_r = p"."""

    premise_ok: bool | None
    conclusion_ok: bool | None
    chi_r: int | None

    @property
    def holds(self) -> bool:
        return bool(self.premise_ok) and bool(self.conclusion_ok)


def check_uniquely_p_colorable_implies(
    g: Graph, p: int, r: int, cap: int | None = DEFAULT_CAP, budget: int | None = DEFAULT_BUDGET
) -> ImplicationCheck:
    """Verify the premise by enumerating proper p-colorings, then test ``chi_r(g) == p``."""
    if not 1 <= r <= p - 1:
        raise InputError("need 1 <= r <= p - 1")
    chi = compute_chi_r(g, 1, budget=budget)
    if not chi.proven:
        return ImplicationCheck(None, None, None)
    if chi.chi_r != p:
        return ImplicationCheck(False, None, None)
    stream = enumerate_conditional_colorings(g, p, 1, True, cap, budget)
    sigs = {c.signature() for c in stream}
    if len(sigs) > 1:
        return ImplicationCheck(False, None, None)
    if stream.truncated or stream.exhausted:
        return ImplicationCheck(None, None, None)
    cert = compute_chi_r(g, r, budget=budget)
    if not cert.proven:
        return ImplicationCheck(True, None, None)
    return ImplicationCheck(True, cert.chi_r == p, cert.chi_r)


def certificate_ok(g: Graph, cert: ChiCertificate) -> bool:
    """Re-check a proven certificate's witness and bound witness."""
    if not cert.proven or cert.witness.k != cert.chi_r:
        return False
    if not verify_conditional(g, cert.witness, cert.r, require_surjective=True).ok:
        return False
    if cert.lower_bound > cert.chi_r:
        return False
    if cert.lower_bound_kind == "vset-witness":
        from condcolor.kernel import verify_vset_d2r

        return verify_vset_d2r(g, cert.lower_bound_witness, cert.r)[0] and \
            len(cert.lower_bound_witness) == cert.lower_bound
    if cert.lower_bound_kind == "clique-witness":
        return is_clique(g, cert.lower_bound_witness) and \
            len(cert.lower_bound_witness) == cert.lower_bound
    if cert.lower_bound_kind == "degree-bound":
        return trivial_lower_bound(g, cert.r) == cert.lower_bound
    return cert.lower_bound == cert.chi_r


__all__ = [
    "ChiCertificate",
    "ColoringStream",
    "PartitionSignature",
    "SearchResult",
    "ImplicationCheck",
    "UniquenessReport",
    "VsetWitness",
    "certificate_ok",
    "check_uniquely_p_colorable_implies",
    "compute_chi_r",
    "enumerate_conditional_colorings",
    "exists_conditional_coloring",
    "is_uniquely_kr_colorable",
    "least_conditional_coloring",
]
