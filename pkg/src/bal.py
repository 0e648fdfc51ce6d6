# BAL_k construction, recognition and forward verification of the balanced-critical characterization
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.balance import CheckResult, balance_report
from src.canon import canonical_graph
from src.codec import graph6_decode, graph6_encode, parse_graph
from src.config import BAL_VERIFY_MAX_ORDER, SCHEMA_VERSION, STATUS_FAIL, STATUS_PASS
from src.errors import GuardExceededError, PreconditionError, SpecError
from src.graph import Graph, complete_graph, induced_subgraph, local_components
from src.impropriety import impropriety
from src.recognition import NonIntervalWitness, is_interval

CLAUSES = {0: "a", 1: "b", 2: "c"}
# Maximum-order clique parts required by each clause
REQUIRED_TOP_CLIQUES = {0: 3, 1: 2, 2: 0}


def _normal_part(h: Graph) -> Graph:
    # parts can exceed the canonical-form guard; a clique is its own canonical relabelling
    if h.is_clique(h.all_mask):
        return complete_graph(h.n)
    return canonical_graph(h, guard=None)


def _part_key(h: Graph) -> Tuple[int, bool, str]:
    # ascending order; among equal orders cliques last. h is already canonical
    return h.n, h.is_clique(h.all_mask), graph6_encode(h)


@dataclass(frozen=True)
class BalSpec:
    """k pendant P_3's plus parts H_1..H_n, stored canonically and sorted."""

    k: int
    parts: Tuple[Graph, ...]

    @classmethod
    def create(cls, k: int, parts: Sequence[Graph]) -> "BalSpec":
        if k not in (0, 1, 2):
            raise SpecError(f"k must be 0, 1 or 2, got {k}")
        if not parts:
            raise SpecError("a BAL spec needs at least one part")
        for h in parts:
            if h.n == 0 or not h.is_connected():
                raise SpecError("every part must be a nonempty connected graph")
            if isinstance(is_interval(h), NonIntervalWitness):
                raise SpecError("every part must be an interval graph")
        if k >= 1 and max(h.n for h in parts) < 2:
            raise SpecError("pendant P_3's need a part of order at least 2")
        normalized = sorted((_normal_part(h) for h in parts), key=_part_key)
        return cls(k, tuple(normalized))

    @property
    def orders(self) -> List[int]:
        return [h.n for h in self.parts]

    @property
    def total_order(self) -> int:
        # order of the built graph
        return 1 + sum(self.orders) + 2 * self.k

    @property
    def clause(self) -> str:
        return CLAUSES[self.k]

    def top_clique_parts(self) -> int:
        top = max(self.orders)
        return sum(1 for h in self.parts if h.n == top and h.is_clique(h.all_mask))

    def clause_holds(self) -> bool:
        return self.top_clique_parts() >= REQUIRED_TOP_CLIQUES[self.k]

    def to_dict(self) -> dict:
        return {"schema": SCHEMA_VERSION, "k": self.k, "parts": [graph6_encode(h) for h in self.parts]}

    @classmethod
    def from_dict(cls, data: dict) -> "BalSpec":
        return cls.create(int(data["k"]), [graph6_decode(s) for s in data["parts"]])

    @classmethod
    def from_text(cls, k: int, parts: str) -> "BalSpec":
        # "K2,K2" style part lists; graph6 parts are accepted too
        return cls.create(k, [parse_graph(token) for token in _split_parts(parts)])

    def describe(self) -> str:
        names = ",".join(_part_name(h) for h in self.parts)
        return f"BAL_{self.k}([{names}])"


def _split_parts(text: str) -> List[str]:
    # "K1,3" is one star, so a comma followed by a digit continues the token
    tokens: List[str] = []
    for piece in text.split(","):
        piece = piece.strip()
        if tokens and piece.isdigit():
            tokens[-1] += "," + piece
        elif piece:
            tokens.append(piece)
    return tokens


def _part_name(h: Graph) -> str:
    if h.is_clique(h.all_mask):
        return f"K{h.n}"
    return graph6_encode(h)


@dataclass(frozen=True)
class BalRejection:
    reason: str
    clause: Optional[str] = None
    center: Optional[int] = None

    def to_dict(self) -> dict:
        return {"bal": False, "reason": self.reason, "clause": self.clause, "center": self.center}


def bal_build(spec: BalSpec) -> Tuple[Graph, int]:
    """Join of z=0 with the parts, then k pendant paths x-y-z (y adjacent only to z and x)."""
    if spec.k >= 1 and max(spec.orders) < 2:
        raise SpecError("pendant P_3's need a part of order at least 2")
    edges = []
    nxt = 1
    for h in spec.parts:
        edges.extend((0, nxt + v) for v in range(h.n))
        edges.extend((nxt + u, nxt + v) for u, v in h.edges())
        nxt += h.n
    for _ in range(spec.k):
        y, x = nxt, nxt + 1
        edges.extend([(0, y), (y, x)])
        nxt += 2
    return Graph.from_edges(nxt, edges), 0


def predicted_imp(spec: BalSpec) -> int:
    orders = sorted(spec.orders)
    if spec.k == 2:
        return sum(orders)
    if spec.k == 1:
        return sum(orders[:-1])
    return sum(orders[:-2])


def _spec_at(g: Graph, z: int) -> Union[BalSpec, BalRejection]:
    profile = local_components(g, z)
    parts = []
    pendants = 0
    for comp in profile.components:
        if not comp.exterior:
            parts.append(induced_subgraph(g, comp.vertices)[0])
            continue
        if comp.order != 2:
            return BalRejection(f"exterior component of order {comp.order} at {z}", center=z)
        y, x = sorted(comp.vertices, key=lambda v: (not g.has_edge(z, v), v))
        if not g.has_edge(z, y) or g.has_edge(z, x) or g.degree(y) != 2 or g.degree(x) != 1:
            return BalRejection(f"exterior component at {z} is not a pendant P_3", center=z)
        pendants += 1
    if pendants > 2:
        return BalRejection(f"{pendants} pendant paths at {z}", center=z)
    if not parts:
        return BalRejection(f"no parts joined to {z}", center=z)
    try:
        spec = BalSpec.create(pendants, parts)
    except (SpecError, GuardExceededError) as e:
        return BalRejection(str(e), CLAUSES[pendants], z)
    if not spec.clause_holds():
        return BalRejection(
            f"clause ({spec.clause}) needs {REQUIRED_TOP_CLIQUES[spec.k]} maximum-order clique parts, "
            f"found {spec.top_clique_parts()}", spec.clause, z)
    return spec


def is_bal_form(g: Graph) -> Union[BalSpec, BalRejection]:
    """Recover the BAL spec of g, trying centres in increasing id order."""
    if g.n == 0 or not g.is_connected():
        return BalRejection("graph must be connected and nonempty")
    if isinstance(is_interval(g), NonIntervalWitness):
        return BalRejection("graph is not an interval graph")
    rejections = []
    for z in range(g.n):
        result = _spec_at(g, z)
        if isinstance(result, BalSpec):
            return result
        rejections.append((local_components(g, z).n_components, -z, result))
    # report the centre with the most local components
    return max(rejections, key=lambda r: (r[0], r[1]))[2]


def verify_bal_forward(spec: BalSpec, guard: Optional[int] = BAL_VERIFY_MAX_ORDER) -> CheckResult:
    # Forward direction: a clause-satisfying spec builds a balanced predicted_imp-critical graph
    if not spec.clause_holds():
        raise PreconditionError(f"{spec.describe()} does not satisfy clause ({spec.clause})")
    if guard is not None and spec.total_order > guard:
        raise GuardExceededError("BAL verification order", guard, spec.total_order)
    g, _ = bal_build(spec)
    report = balance_report(g)
    expected = predicted_imp(spec)
    g6 = graph6_encode(g)
    if report.balanced and report.critical and report.wt == report.imp == expected:
        return CheckResult("bal-forward", STATUS_PASS, g6, f"balanced, {expected}-critical")
    return CheckResult("bal-forward", STATUS_FAIL, g6,
                       f"wt {report.wt}, imp {report.imp}, predicted {expected}, "
                       f"balanced={report.balanced}, critical={report.critical}")


# Small connected interval graphs used as parts of random specs
PART_CATALOG: Dict[str, Graph] = {
    "K1": parse_graph("K1"),
    "K2": parse_graph("K2"),
    "K3": parse_graph("K3"),
    "K4": parse_graph("K4"),
    "P3": parse_graph("P3"),
    "P4": parse_graph("P4"),
    "K1,3": parse_graph("K1,3"),
    "paw": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "diamond": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
}


def random_valid_spec(rng: random.Random, max_total_order: int) -> BalSpec:
    """A random spec satisfying its clause whose built graph has at most max_total_order vertices."""
    if max_total_order < 4:
        raise ValueError("no valid spec fits in fewer than 4 vertices")
    while True:
        k = rng.choice([0, 1, 2])
        budget = max_total_order - 1 - 2 * k
        need = REQUIRED_TOP_CLIQUES[k]
        low = 2 if k >= 1 else 1
        sizes = [m for m in range(low, 5) if need * m <= budget and (need or m <= budget)]
        if not sizes:
            continue
        top = rng.choice(sizes)
        parts = [PART_CATALOG[f"K{top}"]] * max(need, 1)
        budget -= top * max(need, 1)
        smaller = [h for h in PART_CATALOG.values() if h.n <= top]
        for _ in range(rng.randint(0, 3)):
            fitting = [h for h in smaller if h.n <= budget]
            if not fitting:
                break
            h = rng.choice(fitting)
            parts.append(h)
            budget -= h.n
        return BalSpec.create(k, parts)


def find_instability(min_drop: int = 3, max_clique: int = 6) -> Optional[dict]:
    """Search BAL_2 graphs with one clique part for a vertex whose deletion
    drops the impropriety by at least min_drop. The centre itself is skipped."""
    for m in range(2, max_clique + 1):
        spec = BalSpec.create(2, [parse_graph(f"K{m}")])
        g, z = bal_build(spec)
        before = impropriety(g).p
        for v in range(g.n):
            if v == z:
                continue
            after = impropriety(g.delete_vertex(v)).p
            if before - after >= min_drop:
                return {
                    "spec": spec.describe(),
                    "graph6": graph6_encode(g),
                    "vertex": v,
                    "imp_before": before,
                    "imp_after": after,
                }
    return None
