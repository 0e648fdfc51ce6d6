# Graph core - bitset graphs, local components, exterior flags and weight
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.errors import InvalidVertexError


def iter_bits(mask: int) -> Iterator[int]:
    # Yield the set bit positions of mask in increasing order
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[v] is a bitmask of the neighbours of v. Instances are immutable and
    hashable, so they can be shared between threads and used as dict keys.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        nodes = sorted(G.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in G.edges()))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v!r} is not in 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def n_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def components(self, within: Optional[int] = None) -> List[int]:
        # Connected components of the subgraph induced by `within`, as bitmasks,
        # ordered by their lowest vertex
        remaining = self.all_mask if within is None else within
        comps = []
        while remaining:
            start = remaining & -remaining
            comp = start
            frontier = start
            while frontier:
                v = frontier.bit_length() - 1
                frontier ^= 1 << v
                fresh = self.adj[v] & remaining & ~comp
                comp |= fresh
                frontier |= fresh
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def delete_vertex(self, v: int) -> "Graph":
        self.check_vertex(v)
        return induced_subgraph(self, [u for u in range(self.n) if u != v])[0]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class LocalComponent:
    # One connected component of G - z
    vertices: frozenset
    order: int
    exterior: bool
    clique: bool


@dataclass(frozen=True)
class LocalProfile:
    """Decomposition of a graph at a centre vertex into local components."""

    center: int
    components: Tuple[LocalComponent, ...]
    weight: int = field(default=0)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_exterior(self) -> int:
        return sum(1 for c in self.components if c.exterior)

    def non_exterior_orders(self) -> List[int]:
        return sorted(c.order for c in self.components if not c.exterior)

    def max_order(self) -> int:
        return max((c.order for c in self.components), default=0)


def weight_rule(n_components: int, non_exterior_orders: Sequence[int]) -> int:
    # Sum of the n-2 smallest non-exterior orders; empty sum when n <= 2
    take = n_components - 2
    if take <= 0:
        return 0
    return sum(sorted(non_exterior_orders)[:take])


def local_components(g: Graph, z: int) -> LocalProfile:
    g.check_vertex(z)
    rest = g.all_mask & ~(1 << z)
    comps = []
    for comp in g.components(rest):
        comps.append(LocalComponent(
            vertices=frozenset(iter_bits(comp)),
            order=comp.bit_count(),
            exterior=bool(comp & ~g.adj[z]),
            clique=g.is_clique(comp),
        ))
    weight = weight_rule(len(comps), [c.order for c in comps if not c.exterior])
    return LocalProfile(center=z, components=tuple(comps), weight=weight)


def weight_of_vertex(g: Graph, z: int) -> int:
    return local_components(g, z).weight


def weight_of_graph(g: Graph) -> int:
    return max((weight_of_vertex(g, v) for v in range(g.n)), default=0)


def vertex_type(g: Graph, z: int) -> int:
    # Number of exterior components at z (at most 2 when g is interval)
    return local_components(g, z).n_exterior


def positive_weight_vertices(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if weight_of_vertex(g, v) > 0)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph induced by s, relabelled densely in increasing vertex order.

    Returns the subgraph and the map old id -> new id.
    """
    keep = sorted(set(s))
    for v in keep:
        g.check_vertex(v)
    relabel = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in iter_bits(g.adj[old]):
            if u in relabel:
                row |= 1 << relabel[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows)), relabel


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


# Named families

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    # K_{1,leaves} with centre 0
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def spider_graph(legs: Sequence[int]) -> Graph:
    # Centre 0 with one path of the given length per leg
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def synthetic_profile_graph(non_exterior_orders: Sequence[int], n_exterior: int) -> Tuple[Graph, int]:
    """Graph whose centre 0 has prescribed local components.

    Each non-exterior component of order k is a K_k joined to the centre;
    each exterior component is a pendant path x-y-centre.
    """
    edges = []
    nxt = 1
    for k in non_exterior_orders:
        block = list(range(nxt, nxt + k))
        edges.extend((0, v) for v in block)
        edges.extend((u, v) for i, u in enumerate(block) for v in block[i + 1:])
        nxt += k
    for _ in range(n_exterior):
        y, x = nxt, nxt + 1
        edges.extend([(0, y), (y, x)])
        nxt += 2
    return Graph.from_edges(nxt, edges), 0
