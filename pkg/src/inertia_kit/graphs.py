"""Simple undirected graphs, named families, joins and block decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Iterable, Optional, Sequence, Union

from .errors import Disconnected, InvalidSpec, OutOfRange, TooSmall

__all__ = [
    "Graph",
    "Path",
    "Cycle",
    "DisjointPaths",
    "GeneralizedStar",
    "Bouquet",
    "Supernova",
    "Pulsar",
    "BinaryStar",
    "CompleteBipartite",
    "BipartiteJoin",
    "Join",
    "DisjointUnion",
    "FamilySpec",
    "build",
    "vertex_join",
    "delete_vertex",
    "disjoint_union",
    "connected_components",
    "Block",
    "BlockTree",
    "cut_vertex_blocks",
    "canonical_form",
    "is_isomorphic",
    "read_edge_list",
    "write_edge_list",
]


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable labelled graph on vertices ``0 .. order-1``."""

    order: int
    edges: frozenset = frozenset()
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {(u, v)} outside 0..{self.order - 1}")
            clean.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(clean))
        if self.labels is not None and len(self.labels) != self.order:
            raise ValueError("labels must name every vertex")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable, labels=None) -> "Graph":
        return cls(order, frozenset(_edge(u, v) for u, v in edges),
                   tuple(labels) if labels is not None else None)

    def __len__(self):
        return self.order

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency()]

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def vertex(self, name) -> int:
        """Resolve a vertex given either its index or its label."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        if isinstance(name, int) and 0 <= name < self.order:
            return name
        raise OutOfRange(f"no vertex {name!r}")

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled densely in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = tuple(self.labels[v] for v in vertices) if self.labels else None
        return Graph.from_edges(len(vertices), edges, labels)

    def is_connected(self) -> bool:
        return self.order <= 1 or len(_components(self)) == 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


# Family specifications.  Arm sizes count vertices excluding the centre,
# cycle sizes count vertices including it.


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class DisjointPaths:
    sizes: tuple


@dataclass(frozen=True)
class GeneralizedStar:
    arm_sizes: tuple


@dataclass(frozen=True)
class Bouquet:
    cycle_sizes: tuple


@dataclass(frozen=True)
class Supernova:
    cycle_sizes: tuple = ()
    arm_sizes: tuple = ()


@dataclass(frozen=True)
class Pulsar:
    s1: Supernova
    s2: Supernova
    bridge_cycle_size: int
    gap: int = 2


@dataclass(frozen=True)
class BinaryStar:
    """Two supernovas whose centres are the ends of a path on ``w`` vertices.

    The bridge counts as one more pendant path of ``s2``.
    """

    s1: Supernova
    s2: Supernova
    w: int


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int


@dataclass(frozen=True)
class BipartiteJoin:
    """``K_{a,b}`` joined to ``K_{c,d}``; ``case`` names the parts holding the shared vertex."""

    a: int
    b: int
    c: int
    d: int
    case: str = "AC"


@dataclass(frozen=True)
class Join:
    left: "FamilySpec"
    right: "FamilySpec"
    left_vertex: int = 0
    right_vertex: int = 0


@dataclass(frozen=True)
class DisjointUnion:
    specs: tuple


FamilySpec = Union[
    Path, Cycle, DisjointPaths, GeneralizedStar, Bouquet, Supernova, Pulsar,
    BinaryStar, CompleteBipartite, BipartiteJoin, Join, DisjointUnion,
]

BIPARTITE_CASES = ("AC", "AD", "BC", "BD")


def _check_arms(arms):
    if any(a < 1 for a in arms):
        raise InvalidSpec(f"arm sizes must be >= 1, got {list(arms)}")


def _check_cycles(cycles):
    if any(c < 3 for c in cycles):
        raise InvalidSpec(f"cycle sizes must be >= 3, got {list(cycles)}")


class _Builder:
    def __init__(self):
        self.order = 0
        self.edges = []

    def new(self) -> int:
        self.order += 1
        return self.order - 1

    def path_from(self, start: int, count: int) -> int:
        """Hang ``count`` new vertices as a path off ``start``; return the far end."""
        prev = start
        for _ in range(count):
            v = self.new()
            self.edges.append((prev, v))
            prev = v
        return prev

    def cycle_through(self, centre: int, size: int) -> list[int]:
        ring = [centre] + [self.new() for _ in range(size - 1)]
        for i in range(size):
            self.edges.append((ring[i], ring[(i + 1) % size]))
        return ring

    def nova(self, spec: Supernova, centre: int):
        _check_cycles(spec.cycle_sizes)
        _check_arms(spec.arm_sizes)
        for c in spec.cycle_sizes:
            self.cycle_through(centre, c)
        for a in spec.arm_sizes:
            self.path_from(centre, a)

    def graph(self, labels=None) -> Graph:
        return Graph.from_edges(self.order, self.edges, labels)


def build(spec: FamilySpec) -> Graph:
    """Deterministically construct the graph described by ``spec``.

    Centres come first, then cycles and arms in spec order.
    """
    b = _Builder()
    if isinstance(spec, Path):
        if spec.n < 1:
            raise InvalidSpec("path needs n >= 1")
        b.path_from(b.new(), spec.n - 1)
    elif isinstance(spec, Cycle):
        if spec.n < 3:
            raise InvalidSpec(f"cycle needs n >= 3, got {spec.n}")
        b.cycle_through(b.new(), spec.n)
    elif isinstance(spec, DisjointPaths):
        if not spec.sizes or any(s < 1 for s in spec.sizes):
            raise InvalidSpec("disjoint paths need at least one path, each of size >= 1")
        for s in spec.sizes:
            b.path_from(b.new(), s - 1)
    elif isinstance(spec, GeneralizedStar):
        if not spec.arm_sizes:
            raise InvalidSpec("generalized star needs at least one arm")
        _check_arms(spec.arm_sizes)
        centre = b.new()
        for a in spec.arm_sizes:
            b.path_from(centre, a)
    elif isinstance(spec, Bouquet):
        if not spec.cycle_sizes:
            raise InvalidSpec("bouquet needs at least one cycle")
        _check_cycles(spec.cycle_sizes)
        centre = b.new()
        for c in spec.cycle_sizes:
            b.cycle_through(centre, c)
    elif isinstance(spec, Supernova):
        b.nova(spec, b.new())
    elif isinstance(spec, Pulsar):
        m, gap = spec.bridge_cycle_size, spec.gap
        if m < 4:
            raise InvalidSpec("pulsar bridge cycle needs at least 4 vertices")
        if not 2 <= gap <= m - 2:
            raise InvalidSpec(f"pulsar gap must lie in [2, {m - 2}], got {gap}")
        v, u = b.new(), b.new()
        b.nova(spec.s1, v)
        b.nova(spec.s2, u)
        ring = [v] + [b.new() for _ in range(gap - 1)] + [u] + [b.new() for _ in range(m - gap - 1)]
        for i in range(m):
            b.edges.append((ring[i], ring[(i + 1) % m]))
    elif isinstance(spec, BinaryStar):
        if spec.w < 2:
            raise InvalidSpec("binary star bridge needs w >= 2")
        v, u = b.new(), b.new()
        b.nova(spec.s1, v)
        b.nova(spec.s2, u)
        prev = u
        for _ in range(spec.w - 2):
            x = b.new()
            b.edges.append((prev, x))
            prev = x
        b.edges.append((prev, v))
    elif isinstance(spec, CompleteBipartite):
        if spec.a < 1 or spec.b < 1:
            raise InvalidSpec("complete bipartite parts must be nonempty")
        left = [b.new() for _ in range(spec.a)]
        right = [b.new() for _ in range(spec.b)]
        b.edges.extend((x, y) for x in left for y in right)
    elif isinstance(spec, BipartiteJoin):
        if min(spec.a, spec.b, spec.c, spec.d) < 1:
            raise InvalidSpec("bipartite join parts must be nonempty")
        if spec.case not in BIPARTITE_CASES:
            raise InvalidSpec(f"case must be one of {BIPARTITE_CASES}")
        g = build(CompleteBipartite(spec.a, spec.b))
        h = build(CompleteBipartite(spec.c, spec.d))
        gv = 0 if spec.case[0] == "A" else spec.a
        hv = 0 if spec.case[1] == "C" else spec.c
        return vertex_join(g, h, gv, hv)
    elif isinstance(spec, Join):
        g, h = build(spec.left), build(spec.right)
        return vertex_join(g, h, spec.left_vertex, spec.right_vertex)
    elif isinstance(spec, DisjointUnion):
        if not spec.specs:
            raise InvalidSpec("disjoint union needs at least one part")
        return disjoint_union([build(s) for s in spec.specs])
    else:
        raise InvalidSpec(f"unknown family spec {spec!r}")
    return b.graph()


def vertex_join(g: Graph, h: Graph, v_in_g, v_in_h) -> Graph:
    """Glue ``g`` and ``h`` by identifying one vertex of each.

    The joined vertex keeps its index in ``g``; the other vertices of ``h``
    follow those of ``g`` in their original order.
    """
    if g.order < 2 or h.order < 2:
        raise TooSmall("vertex join needs both graphs on at least two vertices")
    gv, hv = g.vertex(v_in_g), h.vertex(v_in_h)
    remap, nxt = {}, g.order
    for x in range(h.order):
        if x == hv:
            remap[x] = gv
        else:
            remap[x] = nxt
            nxt += 1
    edges = list(g.edges) + [(remap[a], remap[c]) for a, c in h.edges]
    return Graph.from_edges(g.order + h.order - 1, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.order:
        raise OutOfRange(f"vertex {v} not in 0..{g.order - 1}")
    return g.induced([x for x in range(g.order) if x != v])


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    edges, offset = [], 0
    for g in gs:
        edges.extend((a + offset, c + offset) for a, c in g.edges)
        offset += g.order
    return Graph.from_edges(offset, edges)


def _components(g: Graph) -> list[list[int]]:
    adj = g.adjacency()
    seen, comps = [False] * g.order, []
    for s in range(g.order):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph) -> list[Graph]:
    """Components as induced subgraphs, ordered by their smallest vertex."""
    return [g.induced(c) for c in _components(g)]


@dataclass(frozen=True)
class Block:
    """A maximal 2-connected subgraph or a bridge, in original labels."""

    vertices: tuple
    edges: frozenset
    kind: str
    parts: Optional[tuple] = None  # bipartition for CompleteBipartite

    def subgraph(self, g: Graph) -> Graph:
        return g.induced(list(self.vertices))


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple
    cut_vertices: frozenset

    def blocks_at(self, v: int) -> list[Block]:
        return [b for b in self.blocks if v in b.vertices]

    def leaf_blocks(self) -> list[tuple[Block, int]]:
        """Blocks containing exactly one cut vertex, with that vertex."""
        out = []
        for b in self.blocks:
            cuts = [v for v in b.vertices if v in self.cut_vertices]
            if len(cuts) == 1:
                out.append((b, cuts[0]))
        return out


def _classify(vertices, edges) -> tuple[str, Optional[tuple]]:
    nv, ne = len(vertices), len(edges)
    if ne == 1:
        return "Edge", None
    deg = {v: 0 for v in vertices}
    for a, c in edges:
        deg[a] += 1
        deg[c] += 1
    if nv == ne and all(d == 2 for d in deg.values()):
        return "Cycle", None
    adj = {v: set() for v in vertices}
    for a, c in edges:
        adj[a].add(c)
        adj[c].add(a)
    colour = {vertices[0]: 0}
    stack = [vertices[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in colour:
                colour[y] = 1 - colour[x]
                stack.append(y)
            elif colour[y] == colour[x]:
                return "Other", None
    left = tuple(sorted(v for v in vertices if colour[v] == 0))
    right = tuple(sorted(v for v in vertices if colour[v] == 1))
    if ne == len(left) * len(right):
        return "CompleteBipartite", (left, right)
    return "Other", None


def cut_vertex_blocks(g: Graph) -> BlockTree:
    """Hopcroft-Tarjan block decomposition of a connected graph."""
    if not g.is_connected():
        raise Disconnected("block decomposition needs a connected graph")
    if g.order <= 1:
        return BlockTree((), frozenset())
    adj = [sorted(s) for s in g.adjacency()]
    disc = [-1] * g.order
    low = [0] * g.order
    cuts = set()
    raw_blocks = []
    edge_stack = []
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            comp = []
            while True:
                e = edge_stack.pop()
                comp.append(_edge(*e))
                if e == (parent, v):
                    break
            raw_blocks.append(comp)
    if root_children > 1:
        cuts.add(root)
    blocks = []
    for comp in raw_blocks:
        es = frozenset(comp)
        vs = tuple(sorted({x for e in es for x in e}))
        kind, parts = _classify(vs, es)
        blocks.append(Block(vs, es, kind, parts))
    blocks.sort(key=lambda b: (b.vertices, sorted(b.edges)))
    return BlockTree(tuple(blocks), frozenset(cuts))


# Canonical labelling: colour refinement, then brute force inside cells.

_CANON_PERM_LIMIT = 5040


def _refine(g: Graph) -> list[int]:
    adj = g.adjacency()
    colour = [len(a) for a in adj]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in range(g.order)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_form(g: Graph, max_order: int = 10, perm_limit: int = _CANON_PERM_LIMIT):
    """Isomorphism-invariant key ``(order, sorted edges)`` or ``None``.

    ``None`` means the search space is too big and the caller should not
    rely on a canonical key.
    """
    if g.order > max_order:
        return None
    colour = _refine(g)
    cells = {}
    for v in range(g.order):
        cells.setdefault(colour[v], []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    count = 1
    for cell in ordered:
        count *= factorial(len(cell))
        if count > perm_limit:
            return None
    best = None
    for choice in product(*(permutations(cell) for cell in ordered)):
        pos = {}
        i = 0
        for cell in choice:
            for v in cell:
                pos[v] = i
                i += 1
        key = tuple(sorted(_edge(pos[a], pos[c]) for a, c in g.edges))
        if best is None or key < best:
            best = key
    return (g.order, best)


def _brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = h.edges
    for perm in permutations(range(g.order)):
        if all(_edge(perm[a], perm[c]) in target for a, c in g.edges):
            return True
    return False


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Small-graph isomorphism test (canonical keys, else brute force)."""
    if g.order != h.order or g.size != h.size:
        return False
    kg, kh = canonical_form(g), canonical_form(h)
    if kg is not None and kh is not None:
        return kg == kh
    return _brute_isomorphic(g, h)


def read_edge_list(text: str) -> Graph:
    """Parse ``n <order>`` followed by ``u v`` lines (0-indexed)."""
    from .errors import ParseError

    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list", 1, 1, "'n <order>'")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(f"bad header {head!r}", lineno, 1, "'n <order>'")
    order = int(parts[1])
    edges = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"bad edge line {ln!r}", lineno, 1, "'u v'")
        u, v = int(parts[0]), int(parts[1])
        if u == v or u >= order or v >= order:
            raise ParseError(f"invalid edge {u} {v}", lineno, 1, f"distinct vertices below {order}")
        edges.append((u, v))
    return Graph.from_edges(order, edges)


def write_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.order}"] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"
