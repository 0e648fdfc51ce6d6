# Canonical labelling by degree refinement and individualization backtracking
from __future__ import annotations

from typing import List, Optional, Tuple

from src.codec import graph6_encode
from src.config import CANON_MAX_N
from src.errors import GuardExceededError
from src.graph import Graph, mask_of

Partition = List[List[int]]


def _refine(g: Graph, cells: Partition) -> Partition:
    # Split cells by neighbour counts into every cell until stable
    while True:
        masks = [mask_of(c) for c in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                refined.append(groups[sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _are_twins(g: Graph, u: int, v: int) -> bool:
    # The transposition (u v) is an automorphism
    other = ~((1 << u) | (1 << v))
    return g.adj[u] & other == g.adj[v] & other


def _code(g: Graph, order: List[int]) -> int:
    code = 0
    for j in range(1, g.n):
        row = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph, guard: Optional[int] = CANON_MAX_N) -> List[int]:
    """Vertex order giving the canonical relabelling of g.

    new id i is given to vertex order[i].
    """
    if guard is not None and g.n > guard:
        raise GuardExceededError("canonical form order", guard, g.n)
    if g.n == 0:
        return []
    by_degree = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    start = _refine(g, [by_degree[d] for d in sorted(by_degree)])

    best: List[Tuple[int, List[int]]] = []

    def search(cells: Partition) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if not best or code > best[0][0]:
                best[:] = [(code, order)]
            return
        tried: List[int] = []
        for v in cells[target]:
            if any(_are_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    return best[0][1]


def canonical_graph(g: Graph, guard: Optional[int] = CANON_MAX_N) -> Graph:
    order = canonical_order(g, guard)
    position = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, ((position[u], position[v]) for u, v in g.edges()))


def canonical_form(g: Graph, guard: Optional[int] = CANON_MAX_N) -> str:
    # graph6 of the canonical relabelling; equal iff isomorphic
    return graph6_encode(canonical_graph(g, guard))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.n_edges() == h.n_edges() and canonical_form(g) == canonical_form(h)
