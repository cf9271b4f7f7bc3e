"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from condcolor.families import FamilySpec

log = logging.getLogger(__name__)

Edge = tuple[int, int]


class InputError(ValueError):
    """Malformed graph, coloring or parameter supplied by the caller."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    ``labels``, ``family``, ``edge_order`` and ``convention`` are metadata and
    do not take part in equality. ``edge_order`` is the enumeration of edges
    that the line and middle graph operators follow; generators set it to the
    numbering their colorings are written against.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    family: FamilySpec | None = field(default=None, compare=False, repr=False)
    edge_order: tuple[Edge, ...] | None = field(default=None, compare=False, repr=False)
    convention: str | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise InputError("adjacency length does not match n")
        for v, row in enumerate(self.adjacency):
            prev = -1
            for u in row:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at {v}")
                if u <= prev:
                    raise InputError(f"adjacency of {v} not strictly increasing")
                prev = u
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in self._row_set(u):
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("labels length does not match n")
        if self.edge_order is not None:
            if sorted(tuple(sorted(e)) for e in self.edge_order) != self.edges():
                raise InputError("edge_order is not a permutation of the edge set")

    def _row_set(self, v: int) -> frozenset[int]:
        cache = self.__dict__.get("_sets")
        if cache is None:
            cache = tuple(frozenset(row) for row in self.adjacency)
            object.__setattr__(self, "_sets", cache)
        return cache[v]

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Sequence[str] | None = None,
        *,
        dedup: bool = False,
        **meta,
    ) -> Graph:
        """Build a graph from an edge list.

        Duplicate edges and self-loops raise :class:`InputError` unless
        ``dedup`` is set, in which case they are dropped with a warning.
        """
        rows: list[set[int]] = [set() for _ in range(n)]
        dropped = 0
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v or v in rows[u]:
                if not dedup:
                    kind = "self-loop" if u == v else "duplicate edge"
                    raise InputError(f"{kind} ({u}, {v})")
                dropped += 1
                continue
            rows[u].add(v)
            rows[v].add(u)
        if dropped:
            log.warning("dropped %d duplicate edges or self-loops", dropped)
        adjacency = tuple(tuple(sorted(r)) for r in rows)
        return cls(n, adjacency, tuple(labels) if labels is not None else None, **meta)

    def with_meta(self, **meta) -> Graph:
        fields = {
            "labels": self.labels,
            "family": self.family,
            "edge_order": self.edge_order,
            "convention": self.convention,
        }
        fields.update(meta)
        return Graph(self.n, self.adjacency, **fields)

    # queries ----------------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._row_set(u)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v`` in sorted order."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    def ordered_edges(self) -> list[Edge]:
        if self.edge_order is not None:
            return list(self.edge_order)
        return self.edges()

    @property
    def num_edges(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def degree_sequence(self) -> list[int]:
        return sorted((len(row) for row in self.adjacency), reverse=True)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("maximum degree of the empty graph")
    return max(len(row) for row in g.adjacency)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("minimum degree of the empty graph")
    return min(len(row) for row in g.adjacency)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(_component(g, 0)) == g.n


def _component(g: Graph, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def distance2_neighborhood(g: Graph, v: int) -> list[int]:
    """Vertices other than ``v`` reachable from ``v`` by a path of length at most 2."""
    out = set(g.neighbors(v))
    for u in g.adjacency[v]:
        out.update(g.adjacency[u])
    out.discard(v)
    return sorted(out)


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two colour classes of a connected bipartite graph, or None.

    The class containing vertex 0 comes first.
    """
    if not is_connected(g):
        return None
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if side[u] < 0:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.num_edges == g.n - 1


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])
