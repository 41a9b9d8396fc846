"""Finite covers of multigraphs built from permutation voltages.

A base graph is a connected multigraph whose edges carry a fixed
orientation ``u -> v``; loops and parallel edges are allowed.  A breadth-first
spanning tree is fixed once per graph, tree edges carry the identity and
each cotree edge carries a permutation of {1..m}.  The derived cover has
vertices ``(v, i)`` and, for an edge ``u -> v`` with voltage ``s``, the
lifted edges ``(u, i) -> (v, s(i))``.

Two covers built over the same tree are isomorphic as coverings exactly
when their voltage tuples are simultaneously conjugate.
"""

import itertools
from math import factorial
from collections import Counter, deque
from dataclasses import dataclass, field

from ._errors import BudgetExceededError
from .combinatorics import stable_hilbert
from .permgroup import DEFAULT_BUDGET, Permutation, canonicalize, is_transitive, orbits

__all__ = [
    "PALETTE",
    "Multigraph",
    "VoltageAssignment",
    "CoveringMap",
    "read_graph",
    "parse_graph",
    "spanning_tree",
    "betti",
    "assign_voltages",
    "build_cover",
    "verify_cover",
    "covers_isomorphic",
    "covers_isomorphic_bruteforce",
    "enumerate_cover_classes",
    "is_connected",
    "cover_is_connected",
    "to_dot",
    "figure_eight",
    "bouquet",
]

PALETTE = (
    "blue", "red", "green", "orange", "purple", "brown",
    "magenta", "cyan", "gold", "gray", "navy", "darkgreen",
)


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``1..vertex_count``; ``edges[e - 1] == (u, v)`` is edge ``e``."""

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{self.vertex_count}")

    @property
    def edge_ids(self):
        return range(1, len(self.edges) + 1)

    def endpoints(self, e):
        return self.edges[e - 1]

    def darts(self, v):
        """Edge ends at ``v`` as ``(edge_id, end)`` with end 0 = tail, 1 = head."""
        out = []
        for e, (a, b) in enumerate(self.edges, start=1):
            if a == v:
                out.append((e, 0))
            if b == v:
                out.append((e, 1))
        return out


def parse_graph(text):
    """Read ``"V E"`` followed by E lines ``"u v"`` (1-based; ``"u u"`` is a loop)."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph description")
    try:
        nv, ne = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise ValueError("graph lines must be integer pairs") from None
    if len(edges) != ne or any(len(e) != 2 for e in edges):
        raise ValueError(f"expected {ne} edge lines of the form 'u v'")
    return Multigraph(nv, edges)


def read_graph(path):
    with open(path) as fh:
        return parse_graph(fh.read())


def bouquet(k):
    """One vertex with ``k`` loops."""
    return Multigraph(1, [(1, 1)] * k)


def figure_eight():
    return bouquet(2)


def is_connected(graph):
    adj = {v: set() for v in range(1, graph.vertex_count + 1)}
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {1}
    stack = [1]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == graph.vertex_count


def betti(graph):
    """Cycle rank ``|E| - |V| + 1`` of a connected graph."""
    if not is_connected(graph):
        raise ValueError("betti number is only defined here for connected graphs")
    return len(graph.edges) - graph.vertex_count + 1


def spanning_tree(graph):
    """Edge ids of the BFS tree from vertex 1, trying lower edge ids first."""
    if not is_connected(graph):
        raise ValueError("graph is not connected")
    incident = {v: [] for v in range(1, graph.vertex_count + 1)}
    for e, (u, v) in enumerate(graph.edges, start=1):
        if u != v:
            incident[u].append((e, v))
            incident[v].append((e, u))
    seen = {1}
    tree = set()
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for e, w in incident[u]:
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    return frozenset(tree)


@dataclass(frozen=True)
class VoltageAssignment:
    base: Multigraph
    tree_edges: frozenset
    voltages: dict = field(hash=False)
    m: int = 1

    def __post_init__(self):
        cotree = [e for e in self.base.edge_ids if e not in self.tree_edges]
        if sorted(self.voltages) != cotree:
            raise ValueError(f"voltages must be given exactly on cotree edges {cotree}")
        if any(p.degree != self.m for p in self.voltages.values()):
            raise ValueError(f"all voltages must have degree {self.m}")
        if len(self.tree_edges) != self.base.vertex_count - 1 or not _spans(
            self.base, self.tree_edges
        ):
            raise ValueError("tree_edges is not a spanning tree")

    @property
    def cotree_edges(self):
        return tuple(sorted(self.voltages))

    @property
    def voltage_tuple(self):
        """Cotree voltages in increasing edge-id order."""
        return tuple(self.voltages[e] for e in self.cotree_edges)

    def voltage(self, e):
        if e in self.voltages:
            return self.voltages[e]
        return Permutation.identity(self.m)


def _spans(graph, tree):
    sub = Multigraph(graph.vertex_count, [graph.endpoints(e) for e in sorted(tree)])
    return is_connected(sub)


def assign_voltages(graph, perms, m=None, tree=None):
    """Put ``perms`` on the cotree edges of ``graph`` in increasing edge-id order."""
    tree = spanning_tree(graph) if tree is None else frozenset(tree)
    cotree = [e for e in graph.edge_ids if e not in tree]
    perms = tuple(perms)
    if len(perms) != len(cotree):
        raise ValueError(f"graph has {len(cotree)} cotree edges, got {len(perms)} voltages")
    if m is None:
        if not perms:
            raise ValueError("m is required when the graph is a tree")
        m = perms[0].degree
    return VoltageAssignment(graph, tree, dict(zip(cotree, perms)), m)


@dataclass(frozen=True)
class CoveringMap:
    """A cover with its projection.

    ``vertices`` are pairs ``(v, i)`` projecting to ``v``; each edge is
    ``((u, i), (w, j), e)`` and projects to base edge ``e``.
    """

    base: Multigraph
    m: int
    vertices: tuple
    edges: tuple

    def project(self, vertex):
        return vertex[0]

    def as_multigraph(self):
        """The cover as a plain multigraph, vertex ``(v, i)`` numbered ``(v-1)*m + i``."""
        num = {x: (x[0] - 1) * self.m + x[1] for x in self.vertices}
        return Multigraph(len(self.vertices), [(num[a], num[b]) for a, b, _ in self.edges])


def build_cover(va):
    m = va.m
    vertices = tuple((v, i) for v in range(1, va.base.vertex_count + 1) for i in range(1, m + 1))
    edges = []
    for e, (u, w) in enumerate(va.base.edges, start=1):
        s = va.voltage(e)
        edges.extend(((u, i), (w, s(i)), e) for i in range(1, m + 1))
    return CoveringMap(va.base, m, vertices, tuple(edges))


def verify_cover(c):
    """Check the projection is m-to-1 and a bijection on edge-ends at every vertex."""
    base = c.base
    fibres = Counter(c.project(x) for x in c.vertices)
    if len(set(c.vertices)) != len(c.vertices):
        return False
    if fibres != Counter({v: c.m for v in range(1, base.vertex_count + 1)}):
        return False
    darts = {x: [] for x in c.vertices}
    for a, b, e in c.edges:
        if not (1 <= e <= len(base.edges)) or a not in darts or b not in darts:
            return False
        if (c.project(a), c.project(b)) != base.endpoints(e):
            return False
        darts[a].append((e, 0))
        darts[b].append((e, 1))
    base_darts = {v: sorted(base.darts(v)) for v in range(1, base.vertex_count + 1)}
    return all(sorted(d) == base_darts[c.project(x)] for x, d in darts.items())


def _check_comparable(a, b):
    if a.base != b.base or a.tree_edges != b.tree_edges or a.m != b.m:
        raise ValueError("voltage assignments must share base graph, spanning tree and m")


def covers_isomorphic(a, b):
    """Decide isomorphism of the derived covers by conjugacy of voltage tuples."""
    _check_comparable(a, b)
    return canonicalize(a.voltage_tuple, m=a.m) == canonicalize(b.voltage_tuple, m=b.m)


def covers_isomorphic_bruteforce(a, b, budget=DEFAULT_BUDGET):
    """Search all fibre-preserving vertex bijections between the two covers.

    A candidate relabels each fibre by its own permutation; it is accepted
    when it carries the oriented, edge-labelled edge multiset of one cover
    onto the other's.
    """
    _check_comparable(a, b)
    ca, cb = build_cover(a), build_cover(b)
    nv = a.base.vertex_count
    if factorial(a.m) ** nv > budget:
        raise BudgetExceededError(f"(m!)^|V| = {factorial(a.m) ** nv} exceeds budget {budget}")
    target = Counter(cb.edges)
    sheets = list(itertools.permutations(range(1, a.m + 1)))
    for choice in itertools.product(sheets, repeat=nv):
        phi = {(v, i): (v, choice[v - 1][i - 1]) for v, i in ca.vertices}
        if Counter((phi[x], phi[y], e) for x, y, e in ca.edges) == target:
            return True
    return False


def enumerate_cover_classes(graph, m, budget=DEFAULT_BUDGET):
    """One voltage assignment per isomorphism class of m-fold covers of ``graph``."""
    tree = spanning_tree(graph)
    k = len(graph.edges) - graph.vertex_count + 1
    classes = orbits(m, k, budget=budget)
    out = [assign_voltages(graph, cls.canonical, m=m, tree=tree) for cls in classes]
    assert len(out) == stable_hilbert(m, k + 1)
    return out


def cover_is_connected(va):
    return is_transitive(va.voltage_tuple, va.m)


def to_dot(c, name="cover"):
    """Render a cover as a DOT digraph.

    Lifts of cotree edges are directed and coloured by base edge; lifts of
    tree edges are black and undirected.  Output depends only on the input.
    """
    if isinstance(c, VoltageAssignment):
        tree = c.tree_edges
        c = build_cover(c)
    else:
        tree = spanning_tree(c.base)
    cotree = [e for e in c.base.edge_ids if e not in tree]
    if len(cotree) > len(PALETTE):
        raise ValueError(f"{len(cotree)} cotree edges exceed the palette of {len(PALETTE)} colours")
    colour = dict(zip(cotree, PALETTE))

    def node(x):
        return f'"{x[0]}.{x[1]}"'

    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for x in c.vertices:
        lines.append(f'  {node(x)} [label="{x[0]}.{x[1]}"];')
    for a, b, e in c.edges:
        if e in colour:
            lines.append(f'  {node(a)} -> {node(b)} [color={colour[e]}, label="e{e}"];')
        else:
            lines.append(f'  {node(a)} -> {node(b)} [color=black, dir=none, label="e{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
