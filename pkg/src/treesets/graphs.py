"""Bipartite graphs (extension and incidence graphs) and labeled digraphs
(Rauzy graphs and their quotients), with classification, isomorphism and
DOT output."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .words import Word, show

LEFT, RIGHT = "L", "R"
Vertex = Tuple[str, Word]  # (side, label)


@dataclass(frozen=True)
class BipartiteGraph:
    """Undirected bipartite graph on a disjoint union ``left ⊔ right``.

    Vertex labels are words; the same label may appear on both sides and
    still denotes two distinct vertices.  ``edges`` holds (left, right)
    label pairs.
    """

    left: Tuple[Word, ...]
    right: Tuple[Word, ...]
    edges: FrozenSet[Tuple[Word, Word]]
    order: Callable = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        ls, rs = set(self.left), set(self.right)
        for l, r in self.edges:
            if l not in ls or r not in rs:
                raise ValueError(f"edge {(l, r)} has an endpoint outside the vertex sets")

    def vertices(self) -> List[Vertex]:
        return [(LEFT, l) for l in self.left] + [(RIGHT, r) for r in self.right]

    def _key(self, v: Vertex):
        side, label = v
        k = self.order(label) if self.order else label
        return (side, k)

    def adjacency(self) -> Dict[Vertex, List[Vertex]]:
        adj: Dict[Vertex, List[Vertex]] = {v: [] for v in self.vertices()}
        for l, r in self.edges:
            adj[(LEFT, l)].append((RIGHT, r))
            adj[(RIGHT, r)].append((LEFT, l))
        for v in adj:
            adj[v].sort(key=self._key)
        return adj

    def sorted_edges(self) -> List[Tuple[Word, Word]]:
        key = self.order or (lambda w: w)
        return sorted(self.edges, key=lambda e: (key(e[0]), key(e[1])))

    def components(self) -> List[List[Vertex]]:
        adj = self.adjacency()
        seen = set()
        out = []
        for v in sorted(adj, key=self._key):
            if v in seen:
                continue
            comp = []
            queue = deque([v])
            seen.add(v)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            out.append(sorted(comp, key=self._key))
        return out

    def to_dot(self, name: str = "G") -> str:
        def vid(v: Vertex) -> str:
            side, label = v
            return f'"{side}_{show(label)}"'

        lines = [f"graph {name} {{", "  rankdir=LR;"]
        for v in sorted(self.vertices(), key=self._key):
            lines.append(f'  {vid(v)} [label="{show(v[1])}"];')
        for l, r in self.sorted_edges():
            lines.append(f"  {vid((LEFT, l))} -- {vid((RIGHT, r))};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphVerdict:
    is_acyclic: bool
    is_connected: bool
    component_count: int
    cycle_witness: Optional[Tuple[Tuple[Word, Word], ...]] = None

    @property
    def is_tree(self) -> bool:
        return self.is_acyclic and self.is_connected


def graph_classify(g: BipartiteGraph) -> GraphVerdict:
    """Acyclicity, connectivity and a shortest cycle witness.

    The empty graph counts as connected.  The witness is the
    lexicographically least shortest cycle, read from its least vertex,
    given as the sequence of its edges.
    """
    comps = g.components()
    c = len(comps)
    n = len(g.left) + len(g.right)
    acyclic = len(g.edges) == n - c
    witness = None if acyclic else _least_shortest_cycle(g)
    return GraphVerdict(acyclic, c <= 1, c, witness)


def _least_shortest_cycle(g: BipartiteGraph):
    adj = g.adjacency()
    order = sorted(adj, key=g._key)
    rank = {v: i for i, v in enumerate(order)}
    girth = None
    for s in order:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if girth is None or length < girth:
                        girth = length
    best = None
    for s in order:
        # cycles whose least vertex is s
        stack = [(s, [s])]
        while stack:
            x, path = stack.pop()
            if len(path) == girth:
                if s in adj[x] and len(path) > 2:
                    cand = tuple(rank[v] for v in path)
                    if best is None or cand < best[0]:
                        best = (cand, path)
                continue
            for y in adj[x]:
                if rank[y] > rank[s] and y not in path:
                    stack.append((y, path + [y]))
    path = best[1]
    edges = []
    for i, x in enumerate(path):
        y = path[(i + 1) % len(path)]
        l, r = (x, y) if x[0] == LEFT else (y, x)
        edges.append((l[1], r[1]))
    return tuple(edges)


# -- labeled directed graphs -------------------------------------------------

@dataclass(frozen=True)
class LabeledGraph:
    """Directed edge-labeled graph; ``edges`` holds (source, label, target)."""

    vertices: Tuple[Hashable, ...]
    edges: FrozenSet[Tuple[Hashable, str, Hashable]]

    def out_edges(self):
        out = defaultdict(list)
        for p, a, q in self.edges:
            out[p].append((a, q))
        return out

    def is_strongly_connected(self) -> bool:
        if not self.vertices:
            return False
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((p, q) for p, _, q in self.edges)
        return nx.is_strongly_connected(g)

    def to_networkx(self) -> nx.DiGraph:
        labels: Dict[Tuple, set] = defaultdict(set)
        for p, a, q in self.edges:
            labels[(p, q)].add(a)
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        for (p, q), ls in labels.items():
            g.add_edge(p, q, labels=frozenset(ls))
        return g

    def to_dot(self, name: str = "G", fmt: Callable = str,
               base: Optional[Hashable] = None) -> str:
        index = {v: i for i, v in enumerate(self.vertices)}
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for v in self.vertices:
            shape = "doublecircle" if v == base else "circle"
            lines.append(f'  "{fmt(v)}" [shape={shape}];')
        grouped: Dict[Tuple, List[str]] = defaultdict(list)
        for p, a, q in self.edges:
            grouped[(p, q)].append(a)
        for (p, q) in sorted(grouped, key=lambda e: (index[e[0]], index[e[1]])):
            label = ",".join(sorted(grouped[(p, q)]))
            lines.append(f'  "{fmt(p)}" -> "{fmt(q)}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def labeled_isomorphic(g: LabeledGraph, h: LabeledGraph) -> bool:
    """Label-respecting isomorphism of labeled digraphs."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    if sorted(a for _, a, _ in g.edges) != sorted(a for _, a, _ in h.edges):
        return False
    matcher = DiGraphMatcher(g.to_networkx(), h.to_networkx(),
                             edge_match=lambda x, y: x["labels"] == y["labels"])
    return matcher.is_isomorphic()


def quotient(g: LabeledGraph, classes: Sequence[FrozenSet]) -> LabeledGraph:
    """Quotient by a partition; parallel edges with equal labels merge."""
    cls_of = {}
    for c in classes:
        for v in c:
            cls_of[v] = c
    missing = [v for v in g.vertices if v not in cls_of]
    if missing:
        raise ValueError(f"partition does not cover vertices {missing}")
    verts: List[FrozenSet] = []
    for v in g.vertices:
        if cls_of[v] not in verts:
            verts.append(cls_of[v])
    edges = frozenset((cls_of[p], a, cls_of[q]) for p, a, q in g.edges)
    return LabeledGraph(tuple(verts), edges)
