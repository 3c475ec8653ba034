"""Simple undirected graphs and the parameterized families under study.

Vertices are 0-indexed.  Family constructors lay out vertex parts
consecutively (part 1 first), so positional arguments in the closed-form
derivations match vertex indices here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored as (u, v) pairs with u < v.  Use Graph.from_edges to
    build one with validation; edge mutators return new graphs.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs n >= 1, got n={self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) invalid for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        return cls(n, frozenset(seen))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets, indexed by vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Graph with edge {u, v} removed; error if the edge is absent."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range for n={g.n}: ({u}, {v})")
    if u > v:
        u, v = v, u
    if (u, v) not in g.edges:
        raise ValueError(f"({u}, {v}) is not an edge")
    return Graph(g.n, g.edges - {(u, v)})


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Graph with edge {u, v} added; error on self-loops or existing edges."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range for n={g.n}: ({u}, {v})")
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    if u > v:
        u, v = v, u
    if (u, v) in g.edges:
        raise ValueError(f"({u}, {v}) is already an edge")
    return Graph(g.n, g.edges | {(u, v)})


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance.

    kind is one of: complete, bipartite, multipartite, regular_multipartite,
    crown, star, starplus.  params holds the integer parameters in the order
    the constructors take them.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        k, p = self.kind, self.params
        if k == "complete":
            if len(p) != 1 or p[0] < 1:
                raise ValueError(f"complete requires n >= 1, got {p}")
        elif k == "bipartite":
            if len(p) != 2 or min(p) < 1:
                raise ValueError(f"bipartite requires part sizes >= 1, got {p}")
        elif k == "multipartite":
            if len(p) < 2 or min(p) < 1:
                raise ValueError(
                    f"multipartite requires t >= 2 parts, all >= 1, got {p}")
        elif k == "regular_multipartite":
            if len(p) != 2 or p[0] < 1 or p[1] < 2:
                raise ValueError(
                    f"regular_multipartite requires p >= 1, t >= 2, got {p}")
        elif k == "crown":
            if len(p) != 2 or p[0] < 2 or p[1] < 2:
                raise ValueError(f"crown requires p >= 2 and t >= 2, got {p}")
        elif k == "star":
            if len(p) != 1 or p[0] < 2:
                raise ValueError(f"star requires n >= 2, got {p}")
        elif k == "starplus":
            if len(p) != 1 or p[0] < 3:
                raise ValueError(f"starplus requires n >= 3, got {p}")
        else:
            raise ValueError(f"unknown family kind {k!r}")

    def describe(self) -> str:
        return f"{self.kind}:{','.join(str(x) for x in self.params)}"


def _multipartite(parts: Sequence[int]) -> Graph:
    n = sum(parts)
    starts = []
    s = 0
    for p in parts:
        starts.append(s)
        s += p
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(starts[i], starts[i] + parts[i]):
                for v in range(starts[j], starts[j] + parts[j]):
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def _crown(p: int, t: int) -> Graph:
    # complete multipartite with t parts of size p, minus the index matching:
    # vertices at the same within-part position are never joined
    n = p * t
    edges = []
    for i in range(t):
        for j in range(i + 1, t):
            for a in range(p):
                for b in range(p):
                    if a != b:
                        edges.append((i * p + a, j * p + b))
    return Graph.from_edges(n, edges)


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph a FamilySpec names, parts laid out consecutively."""
    k, p = spec.kind, spec.params
    if k == "complete":
        return _multipartite([1] * p[0])
    if k == "bipartite":
        return _multipartite(p)
    if k == "multipartite":
        return _multipartite(p)
    if k == "regular_multipartite":
        return _multipartite([p[0]] * p[1])
    if k == "crown":
        return _crown(p[0], p[1])
    if k == "star":
        return _multipartite([1, p[0] - 1])
    if k == "starplus":
        star = _multipartite([1, p[0] - 1])
        return add_edge(star, 1, 2)
    raise ValueError(f"unknown family kind {k!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse the family grammar used on the command line.

    Forms: complete:N, bipartite:A,B, multipartite:P1,P2,..., tripartite:P
    (three equal parts of size P), crown:P,T, star:N, starplus:N.
    """
    if ":" not in text:
        raise ValueError(f"family must look like kind:params, got {text!r}")
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise ValueError(f"non-integer family parameters in {text!r}") from None
    if kind == "complete":
        return FamilySpec("complete", params)
    if kind == "bipartite":
        return FamilySpec("bipartite", params)
    if kind == "multipartite":
        return FamilySpec("multipartite", params)
    if kind == "tripartite":
        if len(params) != 1:
            raise ValueError(f"tripartite takes one part size, got {rest!r}")
        return FamilySpec("regular_multipartite", (params[0], 3))
    if kind == "crown":
        return FamilySpec("crown", params)
    if kind == "star":
        return FamilySpec("star", params)
    if kind == "starplus":
        return FamilySpec("starplus", params)
    raise ValueError(f"unknown family kind {kind!r}")


def read_edge_list(text: str) -> Graph:
    """Parse an edge-list description of a graph.

    Format:
        - '#' starts a comment (whole line or trailing); blank lines ignored
        - optional first data line "n <count>" declares the vertex count
        - every other data line is an edge "u v" with 0-indexed endpoints

    Raises:
        ValueError: on malformed lines, self-loops, duplicate edges, or
            indices outside a declared vertex count, naming the line number.
    """
    n_declared: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    max_vertex = -1
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if first_data and fields[0] == "n":
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: header must be 'n <count>'")
            try:
                n_declared = int(fields[1])
            except ValueError:
                raise ValueError(
                    f"line {lineno}: vertex count {fields[1]!r} is not an integer"
                ) from None
            if n_declared < 1:
                raise ValueError(f"line {lineno}: vertex count must be >= 1")
            first_data = False
            continue
        first_data = False
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index in {line!r}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
        if n_declared is not None and v >= n_declared:
            raise ValueError(
                f"line {lineno}: vertex {v} exceeds declared count {n_declared}")
        seen.add((u, v))
        edges.append((u, v))
        max_vertex = max(max_vertex, v)
    n = n_declared if n_declared is not None else max_vertex + 1
    if n < 1:
        raise ValueError("edge list is empty and declares no vertex count")
    return Graph(n, frozenset(edges))
