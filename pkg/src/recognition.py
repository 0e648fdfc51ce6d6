# Recognition - chordality, maximal cliques, consecutive clique orderings and witnesses
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from src.errors import NotChordalError, NotIntervalError
from src.graph import Graph, iter_bits, mask_of

CHORDLESS_CYCLE = "chordless-cycle"
ASTEROIDAL_TRIPLE = "asteroidal-triple"


@dataclass(frozen=True)
class CliqueOrdering:
    """Maximal cliques in a consecutive arrangement.

    ranges[v] = (first, last) clique index containing v.
    """

    cliques: Tuple[frozenset, ...]
    ranges: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_cliques(cls, n: int, cliques: Sequence[frozenset]) -> "CliqueOrdering":
        first = [-1] * n
        last = [-1] * n
        for i, clique in enumerate(cliques):
            for v in clique:
                if first[v] < 0:
                    first[v] = i
                last[v] = i
        return cls(tuple(frozenset(c) for c in cliques), tuple(zip(first, last)))

    def to_dict(self) -> dict:
        return {
            "cliques": [sorted(c) for c in self.cliques],
            "ranges": [list(r) for r in self.ranges],
        }


@dataclass(frozen=True)
class NonIntervalWitness:
    kind: str
    vertices: Tuple[int, ...]
    # For asteroidal triples: paths a-b avoiding N[c], b-c avoiding N[a], a-c avoiding N[b]
    paths: Tuple[Tuple[int, ...], ...] = ()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "paths": [list(p) for p in self.paths]}


def _shortest_path(g: Graph, source: int, target: int, allowed: int) -> Optional[Tuple[int, ...]]:
    # BFS inside the vertex set `allowed`, lowest ids explored first
    if not (allowed >> source & 1 and allowed >> target & 1):
        return None
    parent = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            path = [v]
            while path[-1] != source:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for u in iter_bits(g.adj[v] & allowed):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return None


def find_chordless_cycle(g: Graph) -> Optional[Tuple[int, ...]]:
    """An induced cycle of length >= 4, or None when g is chordal.

    Candidates are v, a, (shortest a-b path avoiding N[v]), b for non-adjacent
    neighbours a, b of v; the lexicographically least vertex set wins.
    """
    best = None
    for v in range(g.n):
        closed = g.adj[v] | 1 << v
        for a, b in combinations(g.neighbors(v), 2):
            if g.has_edge(a, b):
                continue
            path = _shortest_path(g, a, b, (g.all_mask & ~closed) | 1 << a | 1 << b)
            if path is None:
                continue
            cycle = (v,) + path
            if best is None or sorted(cycle) < sorted(best):
                best = cycle
    return best


def is_chordal(g: Graph) -> bool:
    return g.n == 0 or nx.is_chordal(g.to_networkx())


def maximal_cliques(g: Graph) -> List[frozenset]:
    # Exact maximal cliques of a chordal graph, sorted by their vertex lists
    if g.n == 0:
        return []
    G = g.to_networkx()
    if not nx.is_chordal(G):
        raise NotChordalError(find_chordless_cycle(g))
    return sorted((frozenset(c) for c in nx.chordal_graph_cliques(G)), key=sorted)


def find_asteroidal_triple(g: Graph) -> Optional[NonIntervalWitness]:
    # Lexicographically first asteroidal triple, with its three avoiding paths
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            continue
        paths = []
        for s, t, avoid in ((a, b, c), (b, c, a), (a, c, b)):
            path = _shortest_path(g, s, t, g.all_mask & ~(g.adj[avoid] | 1 << avoid))
            if path is None:
                break
            paths.append(path)
        else:
            return NonIntervalWitness(ASTEROIDAL_TRIPLE, (a, b, c), tuple(paths))
    return None


def _orderings(n: int, cliques: List[frozenset]) -> Iterator[CliqueOrdering]:
    masks = [mask_of(c) for c in cliques]
    total = [0] * n
    for c in cliques:
        for v in c:
            total[v] += 1
    placed = [0] * n
    sequence: List[int] = []
    used = [False] * len(cliques)

    def extend(closed: int, last: int) -> Iterator[CliqueOrdering]:
        if len(sequence) == len(cliques):
            yield CliqueOrdering.from_cliques(n, [cliques[i] for i in sequence])
            return
        for i, m in enumerate(masks):
            if used[i] or m & closed:
                continue
            # vertices leaving the open set must have all their cliques placed
            leaving = last & ~m
            if any(placed[v] < total[v] for v in iter_bits(leaving)):
                continue
            used[i] = True
            sequence.append(i)
            for v in iter_bits(m):
                placed[v] += 1
            yield from extend(closed | leaving, m)
            for v in iter_bits(m):
                placed[v] -= 1
            sequence.pop()
            used[i] = False

    yield from extend(0, 0)


def consecutive_orderings(g: Graph) -> Iterator[CliqueOrdering]:
    """Every consecutive arrangement of the maximal cliques, each exactly once.

    Raises NotIntervalError (lazily, on first iteration) when none exists.
    """
    try:
        cliques = maximal_cliques(g)
    except NotChordalError as e:
        raise NotIntervalError(NonIntervalWitness(CHORDLESS_CYCLE, e.cycle)) from e
    found = False
    for ordering in _orderings(g.n, cliques):
        found = True
        yield ordering
    if not found:
        witness = find_asteroidal_triple(g)
        if witness is None:
            raise RuntimeError("chordal graph with no clique ordering and no asteroidal triple")
        raise NotIntervalError(witness)


def is_interval(g: Graph) -> Union[CliqueOrdering, NonIntervalWitness]:
    # Certificate in both directions: an ordering, or a verified witness
    try:
        return next(consecutive_orderings(g))
    except NotIntervalError as e:
        return e.witness
    except StopIteration:
        # n == 0: the empty ordering
        return CliqueOrdering((), ())


def require_interval(g: Graph) -> CliqueOrdering:
    result = is_interval(g)
    if isinstance(result, NonIntervalWitness):
        raise NotIntervalError(result)
    return result


def verify_ordering(g: Graph, ordering: CliqueOrdering) -> bool:
    # Independent certificate check: maximal cliques, consecutive ranges, Helly adjacency
    masks = [mask_of(c) for c in ordering.cliques]
    if len(set(masks)) != len(masks) or len(ordering.ranges) != g.n:
        return False
    for m in masks:
        if not m or not g.is_clique(m):
            return False
        common = g.all_mask & ~m
        for v in iter_bits(m):
            common &= g.adj[v]
        if common:
            return False
    for v, (first, last) in enumerate(ordering.ranges):
        inside = [i for i, m in enumerate(masks) if m >> v & 1]
        if not inside or inside != list(range(first, last + 1)):
            return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            (fu, lu), (fv, lv) = ordering.ranges[u], ordering.ranges[v]
            if g.has_edge(u, v) != (fu <= lv and fv <= lu):
                return False
    return True


def verify_witness(g: Graph, witness: NonIntervalWitness) -> bool:
    vs = witness.vertices
    if witness.kind == CHORDLESS_CYCLE:
        k = len(vs)
        if k < 4 or len(set(vs)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if g.has_edge(vs[i], vs[j]) != consecutive:
                    return False
        return True
    if witness.kind == ASTEROIDAL_TRIPLE:
        if len(vs) != 3 or len(witness.paths) != 3:
            return False
        a, b, c = vs
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            return False
        for path, (s, t, avoid) in zip(witness.paths, ((a, b, c), (b, c, a), (a, c, b))):
            if path[0] != s or path[-1] != t:
                return False
            if any(not g.has_edge(x, y) for x, y in zip(path, path[1:])):
                return False
            if any(x == avoid or g.has_edge(x, avoid) for x in path):
                return False
        return True
    return False
