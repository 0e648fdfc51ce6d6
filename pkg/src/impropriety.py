# Impropriety engine - exact imp(G) over consecutive clique orderings, with an endpoint-order oracle
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import BRUTEFORCE_MAX_N
from src.errors import GuardExceededError, InvalidModelError
from src.graph import Graph, induced_subgraph, iter_bits, local_components, mask_of, weight_of_graph
from src.recognition import CliqueOrdering, maximal_cliques, require_interval

LEFT = "L"
RIGHT = "R"

KIND_WEIGHT = "weight"
KIND_EXHAUSTIVE = "exhaustive-search"


@dataclass(frozen=True)
class IntervalModel:
    """A linear order of 2n endpoint events (vertex, L|R)."""

    n: int
    events: Tuple[Tuple[int, str], ...]
    left: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    right: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.events) != 2 * self.n:
            raise InvalidModelError(f"{len(self.events)} events for {self.n} vertices")
        left = [-1] * self.n
        right = [-1] * self.n
        for pos, (v, side) in enumerate(self.events):
            if not 0 <= v < self.n:
                raise InvalidModelError(f"event for unknown vertex {v}")
            slot = left if side == LEFT else right if side == RIGHT else None
            if slot is None:
                raise InvalidModelError(f"bad endpoint side {side!r}")
            if slot[v] >= 0:
                raise InvalidModelError(f"vertex {v} has two {side} endpoints")
            slot[v] = pos
        for v in range(self.n):
            if not left[v] < right[v]:
                raise InvalidModelError(f"vertex {v}: left endpoint must precede right endpoint")
        object.__setattr__(self, "left", tuple(left))
        object.__setattr__(self, "right", tuple(right))

    def intersects(self, u: int, v: int) -> bool:
        return self.left[u] < self.right[v] and self.left[v] < self.right[u]

    def contains(self, z: int, v: int) -> bool:
        # Strict in event order
        return self.left[z] < self.left[v] and self.right[v] < self.right[z]

    def realizes(self, g: Graph) -> bool:
        if g.n != self.n:
            return False
        return all(self.intersects(u, v) == g.has_edge(u, v)
                   for u in range(g.n) for v in range(u + 1, g.n))

    def intersection_graph(self) -> Graph:
        return Graph.from_edges(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                                         if self.intersects(u, v)))

    @classmethod
    def from_intervals(cls, intervals: Sequence[Tuple[float, float]]) -> "IntervalModel":
        """Event order of closed intervals [left, right], one per vertex.

        At a shared coordinate left endpoints come first, so touching
        intervals intersect.
        """
        points = []
        for v, (lo, hi) in enumerate(intervals):
            if not lo < hi:
                raise InvalidModelError(f"vertex {v}: interval [{lo}, {hi}] is empty")
            points.append((lo, 0, v, LEFT))
            points.append((hi, 1, v, RIGHT))
        return cls(len(intervals), tuple((v, side) for _, _, v, side in sorted(points)))

    def to_dict(self) -> dict:
        return {"n": self.n, "events": [[v, side] for v, side in self.events]}

    @classmethod
    def from_dict(cls, data: dict) -> "IntervalModel":
        return cls(int(data["n"]), tuple((int(v), str(side)) for v, side in data["events"]))


@dataclass(frozen=True)
class ImproprietyCertificate:
    graph: Graph
    p: int
    witness_model: IntervalModel
    lower_bound: int
    lower_bound_kind: str
    per_vertex: Tuple[int, ...]
    ordering: Optional[CliqueOrdering] = None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "lower_bound": self.lower_bound,
            "lower_bound_kind": self.lower_bound_kind,
            "per_vertex": list(self.per_vertex),
            "witness_model": self.witness_model.to_dict(),
        }


def impropriety_of_model(m: IntervalModel) -> Tuple[Tuple[int, ...], int]:
    counts = tuple(sum(1 for v in range(m.n) if v != z and m.contains(z, v)) for z in range(m.n))
    return counts, max(counts, default=0)


def _check_ordering(g: Graph, sigma: CliqueOrdering) -> None:
    if len(sigma.ranges) != g.n:
        raise InvalidModelError(f"ordering covers {len(sigma.ranges)} vertices, graph has {g.n}")
    if any(first < 0 for first, _ in sigma.ranges):
        raise InvalidModelError("ordering leaves a vertex outside every clique")


def nesting_counts(sigma: CliqueOrdering) -> Tuple[int, ...]:
    # count[v] = #u with range(u) strictly inside range(v) on both sides
    r = sigma.ranges
    return tuple(sum(1 for fu, lu in r if fv < fu and lu < lv) for fv, lv in r)


def imp_of_clique_order(g: Graph, sigma: CliqueOrdering) -> int:
    _check_ordering(g, sigma)
    return max(nesting_counts(sigma), default=0)


def model_from_clique_order(g: Graph, sigma: CliqueOrdering) -> IntervalModel:
    """Concrete model realising sigma with only the forced containments.

    Gap i sits before clique i: first the right endpoints of vertices whose
    last clique is i-1 (ascending first index), then the left endpoints of
    vertices whose first clique is i (ascending last index); ties by vertex id.
    """
    _check_ordering(g, sigma)
    k = len(sigma.cliques)
    events = []
    for i in range(k + 1):
        closing = sorted((v for v, (_, last) in enumerate(sigma.ranges) if last == i - 1),
                         key=lambda v: (sigma.ranges[v][0], v))
        opening = sorted((v for v, (first, _) in enumerate(sigma.ranges) if first == i),
                         key=lambda v: (sigma.ranges[v][1], v))
        events.extend((v, RIGHT) for v in closing)
        events.extend((v, LEFT) for v in opening)
    return IntervalModel(g.n, tuple(events))


def _min_over_orderings(g: Graph, cliques: List[frozenset], stop_at: int) -> Tuple[int, Optional[List[int]]]:
    """Branch and bound over consecutive clique orderings.

    A vertex that leaves the open set while an earlier-started vertex stays
    open is strictly nested in it, so partial counts only grow; a prefix whose
    count reaches the incumbent is cut. Stops once the incumbent <= stop_at.
    """
    masks = [mask_of(c) for c in cliques]
    total = [0] * g.n
    for c in cliques:
        for v in c:
            total[v] += 1
    placed = [0] * g.n
    first = [-1] * g.n
    counts = [0] * g.n
    used = [False] * len(cliques)
    sequence: List[int] = []
    best = [len(cliques) + g.n + 1, None]

    def extend(closed: int, last: int) -> bool:
        # Returns True when the search may stop
        if len(sequence) == len(cliques):
            value = max(counts, default=0)
            if value < best[0]:
                best[0], best[1] = value, list(sequence)
            return best[0] <= stop_at
        step = len(sequence)
        for i, m in enumerate(masks):
            if used[i] or m & closed:
                continue
            leaving = last & ~m
            if any(placed[v] < total[v] for v in iter_bits(leaving)):
                continue
            staying = last & m
            bumped = []
            for u in iter_bits(leaving):
                for v in iter_bits(staying):
                    if first[v] < first[u]:
                        counts[v] += 1
                        bumped.append(v)
            if bumped and max(counts) >= best[0]:
                for v in bumped:
                    counts[v] -= 1
                continue
            used[i] = True
            sequence.append(i)
            opened = []
            for v in iter_bits(m):
                placed[v] += 1
                if first[v] < 0:
                    first[v] = step
                    opened.append(v)
            done = extend(closed | leaving, m)
            for v in opened:
                first[v] = -1
            for v in iter_bits(m):
                placed[v] -= 1
            sequence.pop()
            used[i] = False
            for v in bumped:
                counts[v] -= 1
            if done:
                return True
        return False

    extend(0, 0)
    return best[0], best[1]


def _component_certificate(g: Graph) -> ImproprietyCertificate:
    # g connected and interval
    cliques = maximal_cliques(g)
    lower = weight_of_graph(g)
    value, sequence = _min_over_orderings(g, cliques, lower)
    sigma = CliqueOrdering.from_cliques(g.n, [cliques[i] for i in sequence])
    model = model_from_clique_order(g, sigma)
    per_vertex, p = impropriety_of_model(model)
    if p != value:
        raise RuntimeError(f"witness model has impropriety {p}, ordering search gave {value}")
    kind = KIND_WEIGHT if p == lower else KIND_EXHAUSTIVE
    return ImproprietyCertificate(g, p, model, p, kind, per_vertex, sigma)


def _combine(g: Graph, parts: Sequence[Tuple[Dict[int, int], ImproprietyCertificate]]) -> ImproprietyCertificate:
    # Components are laid out left to right, so their models just concatenate
    events = []
    per_vertex = [0] * g.n
    for relabel, cert in parts:
        back = {new: old for old, new in relabel.items()}
        events.extend((back[v], side) for v, side in cert.witness_model.events)
        for new, count in enumerate(cert.per_vertex):
            per_vertex[back[new]] = count
    model = IntervalModel(g.n, tuple(events))
    p = max((cert.p for _, cert in parts), default=0)
    lower = max((cert.lower_bound for _, cert in parts), default=0)
    kind = KIND_WEIGHT if all(c.lower_bound_kind == KIND_WEIGHT for _, c in parts) else KIND_EXHAUSTIVE
    return ImproprietyCertificate(g, p, model, lower, kind, tuple(per_vertex))


def impropriety(g: Graph) -> ImproprietyCertificate:
    """Exact impropriety with a witness model; max over components when disconnected."""
    require_interval(g)
    components = g.components()
    if len(components) == 1:
        return _component_certificate(g)
    parts = []
    for comp in components:
        h, relabel = induced_subgraph(g, iter_bits(comp))
        parts.append((relabel, _component_certificate(h)))
    return _combine(g, parts)


def is_p_improper(g: Graph, p: int) -> bool:
    # imp(g) <= p, stopping at the first ordering that proves it
    require_interval(g)
    for comp in g.components():
        h, _ = induced_subgraph(g, iter_bits(comp))
        if weight_of_graph(h) > p:
            return False
        value, _ = _min_over_orderings(h, maximal_cliques(h), p)
        if value > p:
            return False
    return True


def impropriety_bruteforce(g: Graph, guard: Optional[int] = BRUTEFORCE_MAX_N) -> int:
    """Minimum impropriety over all endpoint-event orders realising g.

    Opening u needs every open interval to be a neighbour of u; closing v
    needs every neighbour of v to be open already. Closing v while an
    earlier-opened z is still open puts I_v inside I_z.
    """
    if guard is not None and g.n > guard:
        raise GuardExceededError("brute-force impropriety order", guard, g.n)
    require_interval(g)
    if g.n == 0:
        return 0
    opened_at = [-1] * g.n
    counts = [0] * g.n
    best = [g.n]

    def step(opened: int, open_: int, clock: int) -> bool:
        if opened == g.all_mask and not open_:
            best[0] = min(best[0], max(counts))
            return best[0] == 0
        for u in range(g.n):
            bit = 1 << u
            if open_ & bit:
                if g.adj[u] & ~opened:
                    continue
                outer = [z for z in iter_bits(open_ & ~bit) if opened_at[z] < opened_at[u]]
                for z in outer:
                    counts[z] += 1
                if not outer or max(counts[z] for z in outer) < best[0]:
                    if step(opened, open_ & ~bit, clock):
                        return True
                for z in outer:
                    counts[z] -= 1
            elif not opened & bit:
                if open_ & ~g.adj[u]:
                    continue
                opened_at[u] = clock
                if step(opened | bit, open_ | bit, clock + 1):
                    return True
                opened_at[u] = -1
        return False

    step(0, 0, 0)
    return best[0]


def side_components(m: IntervalModel, g: Graph, z: int) -> Dict[str, List[frozenset]]:
    """Local components at z ordered by support in the model, split into side and inner."""
    profile = local_components(g, z)
    ordered = sorted(profile.components, key=lambda c: min(m.left[v] for v in c.vertices))
    if len(ordered) <= 2:
        return {"side": [c.vertices for c in ordered], "inner": []}
    return {
        "side": [ordered[0].vertices, ordered[-1].vertices],
        "inner": [c.vertices for c in ordered[1:-1]],
    }


def ascii_diagram(m: IntervalModel, labels: Optional[Sequence[str]] = None) -> str:
    # One interval per line, columns aligned to event positions, sorted by left endpoint
    names = [str(v) if labels is None else labels[v] for v in range(m.n)]
    width = max((len(s) for s in names), default=1)
    lines = []
    for v in sorted(range(m.n), key=lambda v: (m.left[v], v)):
        row = [" "] * (2 * len(m.events))
        a, b = 2 * m.left[v], 2 * m.right[v]
        row[a] = "["
        for col in range(a + 1, b):
            row[col] = "="
        row[b] = "]"
        lines.append(f"{names[v]:>{width}} |{''.join(row).rstrip()}")
    return "\n".join(lines)
