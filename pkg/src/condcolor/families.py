"""Parameterized graph families and graph operators.

Every generator numbers its vertices (and, through ``Graph.edge_order``, its
edges) the way the matching closed-form colorings index them, so that a
coloring written as ``c(v_i)`` can be evaluated directly on vertex ids.
The ``convention`` field names the numbering that was used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from condcolor.graph import Edge, Graph, InputError

Param = Union[int, str, "FamilySpec", tuple]


@dataclass(frozen=True)
class FamilySpec:
    """Tagged family descriptor such as ``windmill(3,2)`` or ``M(cycle(5))``."""

    tag: str
    params: tuple = ()

    def __str__(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.tag}({inner})"

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        parser = _SpecParser(text)
        spec = parser.spec()
        parser.expect_end()
        return spec

    def build(self) -> Graph:
        return build(self)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_\-]*)|(.))")


class _SpecParser:
    def __init__(self, text: str) -> None:
        self.tokens = []
        for num, name, punct in _TOKEN.findall(text):
            if num:
                self.tokens.append(("int", int(num)))
            elif name:
                self.tokens.append(("name", name))
            elif punct.strip():
                self.tokens.append(("punct", punct))
        self.pos = 0
        self.text = text

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None)

    def _take(self, kind: str, value=None):
        tok = self._peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise InputError(f"cannot parse family spec {self.text!r}")
        self.pos += 1
        return tok[1]

    def spec(self) -> FamilySpec:
        tag = self._take("name")
        params: list = []
        if self._peek() == ("punct", "("):
            self._take("punct", "(")
            if self._peek() != ("punct", ")"):
                params.append(self.param())
                while self._peek() == ("punct", ","):
                    self._take("punct", ",")
                    params.append(self.param())
            self._take("punct", ")")
        return FamilySpec(_ALIASES.get(tag, tag), tuple(params))

    def param(self):
        kind, value = self._peek()
        if kind == "int":
            self.pos += 1
            return value
        if kind == "name":
            after = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if after == ("punct", "("):
                return self.spec()
            self.pos += 1
            return value
        raise InputError(f"cannot parse family spec {self.text!r}")

    def expect_end(self) -> None:
        if self.pos != len(self.tokens):
            raise InputError(f"trailing input in family spec {self.text!r}")


_ALIASES = {"L": "line", "M": "middle", "K": "kpartite", "Wd": "windmill", "F": "friendship"}


# generators ---------------------------------------------------------------


def _labels(prefix: str, start: int, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(start, start + count))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edges(
        n, edges, _labels("v_", 1, n),
        family=FamilySpec("path", (n,)), edge_order=tuple(edges), convention="path",
    )


def gen_cycle(n: int) -> Graph:
    """Cycle ``v_1 .. v_n``; edge ``i`` joins ``v_i`` and ``v_{i mod n + 1}``."""
    if n < 3:
        raise InputError("cycle needs n >= 3")
    order = tuple((i, (i + 1) % n) for i in range(n))
    return Graph.from_edges(
        n, order, _labels("v_", 1, n),
        family=FamilySpec("cycle", (n,)), edge_order=order, convention="cycle",
    )


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(
        n, edges, _labels("v_", 1, n),
        family=FamilySpec("complete", (n,)), convention="complete",
    )


def gen_complete_kpartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; part ``i`` occupies a consecutive id block."""
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise InputError("complete k-partite graph needs k >= 2 parts of size >= 1")
    part: list[int] = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    n = len(part)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    labels = []
    for i, s in enumerate(sizes):
        labels.extend(f"p{i + 1}.{j + 1}" for j in range(s))
    return Graph.from_edges(
        n, edges, labels,
        family=FamilySpec("kpartite", sizes), edge_order=tuple(edges), convention="kpartite",
    )


def kpartite_edge_count(sizes: Sequence[int]) -> int:
    n = sum(sizes)
    return sum(s * (n - s) for s in sizes) // 2


def gen_complete_kary_tree(k: int, h: int) -> Graph:
    """Complete k-ary tree of height h, ids in breadth-first order from the root.

    Edge ``j`` (0-based) is the edge from vertex ``j + 1`` to its parent, so
    edges are numbered level by level, left to right.
    """
    if k < 1 or h < 0:
        raise InputError("k-ary tree needs k >= 1, h >= 0")
    n = kary_vertex_count(k, h)
    parent = [(v - 1) // k for v in range(1, n)]
    order = tuple((p, v) for v, p in zip(range(1, n), parent))
    return Graph.from_edges(
        n, order, _labels("t", 0, n),
        family=FamilySpec("kary", (k, h)), edge_order=order, convention="kary",
    )


def kary_vertex_count(k: int, h: int) -> int:
    if k == 1:
        return h + 1
    return (k ** (h + 1) - 1) // (k - 1)


def kary_edge_count(k: int, h: int) -> int:
    return kary_vertex_count(k, h) - 1


def gen_windmill(k: int, n: int, *, tag: str = "windmill") -> Graph:
    """``n`` copies of ``K_k`` sharing vertex 0.

    Copy ``i`` (1-based) owns vertices ``1 + (i-1)(k-1) .. i(k-1)``. The edge
    order lists, copy by copy, the spokes (edges at the center) and then,
    copy by copy, the remaining edges in lexicographic order.
    """
    if k < 2 or n < 1:
        raise InputError("windmill needs k >= 2, n >= 1")
    m = k - 1
    copies = [list(range(1 + i * m, 1 + (i + 1) * m)) for i in range(n)]
    spokes = [(0, x) for block in copies for x in block]
    rest = [(a, b) for block in copies for j, a in enumerate(block) for b in block[j + 1 :]]
    labels = ["c"] + [f"x{i + 1}.{j + 1}" for i in range(n) for j in range(m)]
    family = FamilySpec("friendship", (n,)) if tag == "friendship" else FamilySpec("windmill", (k, n))
    return Graph.from_edges(
        n * m + 1, spokes + rest, labels,
        family=family, edge_order=tuple(spokes + rest), convention="windmill",
    )


def gen_friendship(n: int) -> Graph:
    return gen_windmill(3, n, tag="friendship")


def gen_gear(n: int) -> Graph:
    """Gear: center ``v_0`` (id 0), rim ``v_1 .. v_2n`` (ids 1..2n), spokes to odd rim vertices."""
    if n < 3:
        raise InputError("gear needs n >= 3")
    rim = [(i, i + 1) for i in range(1, 2 * n)] + [(1, 2 * n)]
    spokes = [(0, i) for i in range(1, 2 * n, 2)]
    return Graph.from_edges(
        2 * n + 1, rim + spokes, _labels("v_", 0, 2 * n + 1),
        family=FamilySpec("gear", (n,)), convention="gear",
    )


UNIQUE32_POLICIES = ("first", "last", "cycle", "newest")


def gen_unique32_family(k: int, edge_choice: str | Sequence[Edge] = "first") -> Graph:
    """Start from a triangle and ``k - 1`` times add a vertex joined to both ends of an edge.

    ``edge_choice`` picks the edge at each step: ``first``/``last`` take the
    lexicographically first/last edge, ``cycle`` takes sorted edge number
    ``step mod |E|``, ``newest`` the first edge at the most recently added
    vertex; a sequence supplies the edges explicitly.
    """
    if k < 1:
        raise InputError("family index k must be >= 1")
    edges = [(0, 1), (0, 2), (1, 2)]
    explicit = None if isinstance(edge_choice, str) else [tuple(e) for e in edge_choice]
    if explicit is None and edge_choice not in UNIQUE32_POLICIES:
        raise InputError(f"unknown edge-choice policy {edge_choice!r}")
    if explicit is not None and len(explicit) < k - 1:
        raise InputError(f"need {k - 1} edge picks, got {len(explicit)}")
    for step in range(k - 1):
        w = step + 3
        current = sorted(edges)
        if explicit is not None:
            u, v = sorted(explicit[step])
            if (u, v) not in current:
                raise InputError(f"pick ({u}, {v}) at step {step + 1} is not an edge")
        elif edge_choice == "first":
            u, v = current[0]
        elif edge_choice == "last":
            u, v = current[-1]
        elif edge_choice == "cycle":
            u, v = current[step % len(current)]
        else:
            u, v = next(e for e in current if w - 1 in e)
        edges += [(u, w), (v, w)]
    policy = "explicit" if explicit is not None else edge_choice
    return Graph.from_edges(
        k + 2, edges, _labels("v_", 1, k + 2),
        family=FamilySpec("unique32", (k, policy)), convention="unique32",
    )


# operators ------------------------------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; ``g2`` ids shift by ``g1.n``."""
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    labels = [f"a:{g1.label(v)}" for v in range(g1.n)] + [f"b:{g2.label(v)}" for v in range(g2.n)]
    family = None
    if g1.family is not None and g2.family is not None:
        family = FamilySpec("join", (g1.family, g2.family))
    return Graph.from_edges(g1.n + g2.n, edges, labels, family=family, convention="join")


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(x1, x2)`` has id ``x1 * g2.n + x2``."""
    n2 = g2.n
    edges = []
    for x1 in range(g1.n):
        for a, b in g2.edges():
            edges.append((x1 * n2 + a, x1 * n2 + b))
    for a, b in g1.edges():
        for x2 in range(n2):
            edges.append((a * n2 + x2, b * n2 + x2))
    labels = [f"({g1.label(x1)},{g2.label(x2)})" for x1 in range(g1.n) for x2 in range(n2)]
    family = None
    if g1.family is not None and g2.family is not None:
        family = FamilySpec("product", (g1.family, g2.family))
    return Graph.from_edges(g1.n * n2, edges, labels, family=family, convention="product")


def _edge_label(g: Graph, e: Edge) -> str:
    return f"e({g.label(e[0])},{g.label(e[1])})"


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g``, in ``g.ordered_edges()`` order."""
    order = g.ordered_edges()
    if not order:
        raise InputError("line graph of an edgeless graph")
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(order):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    edges = set()
    for ids in at.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.add((min(ids[a], ids[b]), max(ids[a], ids[b])))
    family = FamilySpec("line", (g.family,)) if g.family is not None else None
    return Graph.from_edges(
        len(order), sorted(edges), [_edge_label(g, e) for e in order],
        family=family, convention=f"line:{g.convention or 'sorted'}",
    )


def default_middle_layout(g: Graph) -> list[tuple[str, object]]:
    """Item order used for ``M(g)`` when no layout is given.

    Friendship graphs use spokes, center, copy vertices, outer edges; complete
    multipartite graphs put edges before vertices; everything else lists
    vertices first, then edges in ``g.ordered_edges()`` order.
    """
    vertices = [("v", v) for v in range(g.n)]
    edges = [("e", e) for e in g.ordered_edges()]
    if g.convention == "windmill" and g.n >= 3 and len(g.adjacency[1]) == 2:
        copies = (g.n - 1) // 2
        spokes = [("e", (0, x)) for x in range(1, g.n)]
        outer = [("e", (2 * i + 1, 2 * i + 2)) for i in range(copies)]
        return spokes + [("v", 0)] + [("v", x) for x in range(1, g.n)] + outer
    if g.convention == "kpartite":
        return edges + vertices
    return vertices + edges


def middle_graph(g: Graph, layout: Sequence[tuple[str, object]] | None = None) -> Graph:
    """Middle graph on ``V(g) + E(g)``.

    ``layout`` lists items ``("v", x)`` and ``("e", (u, v))``; position in the
    list is the vertex id in the result.
    """
    if g.num_edges == 0:
        raise InputError("middle graph of an edgeless graph")
    if layout is None:
        layout = default_middle_layout(g)
    pos: dict[tuple, int] = {}
    for i, (kind, item) in enumerate(layout):
        key = ("v", int(item)) if kind == "v" else ("e", tuple(sorted(item)))
        if key in pos:
            raise InputError(f"item {key} repeated in layout")
        pos[key] = i
    expected = {("v", v) for v in range(g.n)} | {("e", e) for e in g.edges()}
    if set(pos) != expected:
        raise InputError("layout must list every vertex and edge exactly once")
    edges = set()
    at: dict[int, list[int]] = {}
    for u, v in g.edges():
        e = pos[("e", (u, v))]
        for x in (u, v):
            edges.add((min(e, pos[("v", x)]), max(e, pos[("v", x)])))
            at.setdefault(x, []).append(e)
    for ids in at.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.add((min(ids[a], ids[b]), max(ids[a], ids[b])))
    labels = []
    for kind, item in layout:
        labels.append(g.label(int(item)) if kind == "v" else _edge_label(g, tuple(item)))
    family = FamilySpec("middle", (g.family,)) if g.family is not None else None
    return Graph.from_edges(
        len(layout), sorted(edges), labels,
        family=family, convention=f"middle:{g.convention or 'generic'}",
    )


def windmill_line_vertex_count(k: int, n: int) -> int:
    return n * comb(k, 2)


# dispatch -------------------------------------------------------------------


def _ints(spec: FamilySpec, count: int | None = None) -> list[int]:
    vals = list(spec.params)
    if count is not None and len(vals) != count:
        raise InputError(f"{spec.tag} takes {count} integer parameter(s), got {len(vals)}")
    if not all(isinstance(v, int) for v in vals):
        raise InputError(f"{spec.tag} parameters must be integers")
    return vals


def build(spec: FamilySpec) -> Graph:
    """Construct the graph described by ``spec``."""
    tag = spec.tag
    if tag == "path":
        return gen_path(*_ints(spec, 1))
    if tag == "cycle":
        return gen_cycle(*_ints(spec, 1))
    if tag == "complete":
        return gen_complete(*_ints(spec, 1))
    if tag == "kpartite":
        return gen_complete_kpartite(_ints(spec))
    if tag == "kary":
        return gen_complete_kary_tree(*_ints(spec, 2))
    if tag == "windmill":
        return gen_windmill(*_ints(spec, 2))
    if tag == "friendship":
        return gen_friendship(*_ints(spec, 1))
    if tag == "gear":
        return gen_gear(*_ints(spec, 1))
    if tag == "unique32":
        if not spec.params or not isinstance(spec.params[0], int):
            raise InputError("unique32 needs an integer index")
        policy = spec.params[1] if len(spec.params) > 1 else "first"
        return gen_unique32_family(spec.params[0], str(policy))
    if tag in ("line", "middle"):
        if len(spec.params) != 1 or not isinstance(spec.params[0], FamilySpec):
            raise InputError(f"{tag} takes one family argument")
        base = build(spec.params[0])
        return line_graph(base) if tag == "line" else middle_graph(base)
    if tag in ("join", "product"):
        if len(spec.params) != 2 or not all(isinstance(p, FamilySpec) for p in spec.params):
            raise InputError(f"{tag} takes two family arguments")
        a, b = build(spec.params[0]), build(spec.params[1])
        return join(a, b) if tag == "join" else cartesian_product(a, b)
    raise InputError(f"unknown family {tag!r}")
