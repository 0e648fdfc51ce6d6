# Balance, basepoints, p-criticality and executable theorem checks
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from src.codec import graph6_encode
from src.config import SCHEMA_VERSION, STATUS_FAIL, STATUS_PASS, STATUS_VACUOUS
from src.errors import PreconditionError
from src.graph import (
    Graph, induced_subgraph, local_components, positive_weight_vertices, vertex_type,
    weight_of_graph, weight_of_vertex,
)
from src.impropriety import ImproprietyCertificate, impropriety, is_p_improper
from src.recognition import require_interval


@dataclass(frozen=True)
class BalanceReport:
    wt: int
    imp: int
    balanced: bool
    basepoints: frozenset
    critical: bool
    p: int
    certificate: Optional[ImproprietyCertificate] = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {
            "wt": self.wt,
            "imp": self.imp,
            "balanced": self.balanced,
            "basepoints": sorted(self.basepoints),
            "critical": self.critical,
            "p": self.p,
        }


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one theorem check on one graph: pass, fail or vacuous."""

    theorem: str
    status: str
    graph6: str
    message: str = ""
    vertex_sets: Tuple[Tuple[int, ...], ...] = ()

    @property
    def passed(self) -> bool:
        return self.status != STATUS_FAIL

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "theorem": self.theorem,
            "status": self.status,
            "graph6": self.graph6,
            "message": self.message,
            "vertex_sets": [list(s) for s in self.vertex_sets],
        }


def _require_connected_interval(g: Graph) -> None:
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    require_interval(g)


def is_p_critical(g: Graph, p: Optional[int] = None) -> Tuple[bool, int]:
    """(critical?, imp(g)). Single deletions suffice because impropriety is hereditary."""
    _require_connected_interval(g)
    if p is None:
        p = impropriety(g).p
    if p == 0:
        return False, 0
    for v in range(g.n):
        if not is_p_improper(g.delete_vertex(v), p - 1):
            return False, p
    return True, p


def is_p_critical_exhaustive(g: Graph) -> Tuple[bool, int]:
    # Definitional check over every proper induced subgraph
    _require_connected_interval(g)
    p = impropriety(g).p
    if p == 0:
        return False, 0
    for size in range(g.n):
        for subset in combinations(range(g.n), size):
            h, _ = induced_subgraph(g, subset)
            if not is_p_improper(h, p - 1):
                return False, p
    return True, p


def balance_report(g: Graph) -> BalanceReport:
    _require_connected_interval(g)
    cert = impropriety(g)
    weights = [weight_of_vertex(g, v) for v in range(g.n)]
    wt = max(weights, default=0)
    balanced = wt == cert.p
    basepoints = frozenset(v for v, w in enumerate(weights) if w == cert.p) if balanced and wt > 0 else frozenset()
    critical, _ = is_p_critical(g, cert.p)
    return BalanceReport(wt, cert.p, balanced, basepoints, critical, cert.p, cert)


def _balanced_critical(g: Graph, report: Optional[BalanceReport]) -> BalanceReport:
    _require_connected_interval(g)
    return report if report is not None else balance_report(g)


def check_exterior_pair(g: Graph, report: Optional[BalanceReport] = None) -> CheckResult:
    # Exterior components at a maximum-weight vertex have exactly two vertices
    report = _balanced_critical(g, report)
    g6 = graph6_encode(g)
    if not (report.balanced and report.critical):
        return CheckResult("exterior-pair", STATUS_VACUOUS, g6, "not balanced and critical")
    vertex_sets = []
    for z in range(g.n):
        profile = local_components(g, z)
        if profile.weight != report.wt:
            continue
        vertex_sets.extend(tuple(sorted(c.vertices)) for c in profile.components if c.exterior and c.order != 2)
    if vertex_sets:
        return CheckResult("exterior-pair", STATUS_FAIL, g6, "exterior component without exactly 2 vertices",
                           tuple(vertex_sets))
    return CheckResult("exterior-pair", STATUS_PASS, g6)


def check_unique_basepoint(g: Graph, report: Optional[BalanceReport] = None) -> CheckResult:
    report = _balanced_critical(g, report)
    g6 = graph6_encode(g)
    if not (report.balanced and report.critical):
        return CheckResult("unique-basepoint", STATUS_VACUOUS, g6, "not balanced and critical")
    if len(report.basepoints) != 1:
        return CheckResult("unique-basepoint", STATUS_FAIL, g6, f"{len(report.basepoints)} basepoints",
                           (tuple(sorted(report.basepoints)),))
    return CheckResult("unique-basepoint", STATUS_PASS, g6)


def check_side_cliques(g: Graph, report: Optional[BalanceReport] = None) -> CheckResult:
    """At the basepoint: type 1 needs two, type 0 three, maximum-order clique components."""
    report = _balanced_critical(g, report)
    g6 = graph6_encode(g)
    if not (report.balanced and report.critical):
        return CheckResult("side-cliques", STATUS_VACUOUS, g6, "not balanced and critical")
    failures = []
    qualifying_all = []
    vacuous = True
    for z in sorted(report.basepoints):
        profile = local_components(g, z)
        if profile.n_exterior >= 2:
            continue
        vacuous = False
        required = 3 if profile.n_exterior == 0 else 2
        top = profile.max_order()
        qualifying = [tuple(sorted(c.vertices)) for c in profile.components
                      if not c.exterior and c.clique and c.order == top]
        qualifying_all.extend(qualifying)
        if len(qualifying) < required:
            failures.append((z, required, qualifying))
    if vacuous:
        return CheckResult("side-cliques", STATUS_VACUOUS, g6, "basepoint has two exterior components")
    if failures:
        z, required, qualifying = failures[0]
        return CheckResult("side-cliques", STATUS_FAIL, g6,
                           f"basepoint {z} has {len(qualifying)} maximum-order clique components, needs {required}",
                           tuple(qualifying))
    return CheckResult("side-cliques", STATUS_PASS, g6, vertex_sets=tuple(qualifying_all))


def check_positive_weight_paths(g: Graph) -> CheckResult:
    # Positive-weight vertices induce a disjoint union of paths
    _require_connected_interval(g)
    g6 = graph6_encode(g)
    positive = sorted(positive_weight_vertices(g))
    h, _ = induced_subgraph(g, positive)
    if h.n == 0:
        return CheckResult("positive-weight-paths", STATUS_PASS, g6, "no positive-weight vertices")
    max_degree = max(h.degree(v) for v in range(h.n))
    acyclic = h.n_edges() == h.n - len(h.components())
    if max_degree > 2 or not acyclic:
        return CheckResult("positive-weight-paths", STATUS_FAIL, g6,
                           f"positive-weight subgraph has max degree {max_degree}, acyclic={acyclic}",
                           (tuple(positive),))
    return CheckResult("positive-weight-paths", STATUS_PASS, g6)


def check_exterior_count(g: Graph) -> CheckResult:
    # Every vertex of an interval graph has at most two exterior components
    require_interval(g)
    g6 = graph6_encode(g)
    bad = tuple((v,) for v in range(g.n) if vertex_type(g, v) > 2)
    if bad:
        return CheckResult("exterior-count", STATUS_FAIL, g6, "vertex with three exterior components", bad)
    return CheckResult("exterior-count", STATUS_PASS, g6)


def check_weight_bound(g: Graph, report: Optional[BalanceReport] = None) -> CheckResult:
    # imp(G) >= wt(G)
    require_interval(g)
    g6 = graph6_encode(g)
    imp = report.imp if report is not None else impropriety(g).p
    wt = report.wt if report is not None else weight_of_graph(g)
    if imp < wt:
        return CheckResult("weight-bound", STATUS_FAIL, g6, f"imp {imp} < wt {wt}")
    return CheckResult("weight-bound", STATUS_PASS, g6)


def check_basepoint_components(g: Graph, report: Optional[BalanceReport] = None) -> CheckResult:
    # A basepoint has at least three local components
    report = _balanced_critical(g, report)
    g6 = graph6_encode(g)
    if not report.basepoints:
        return CheckResult("basepoint-components", STATUS_VACUOUS, g6, "no basepoints")
    bad = tuple((z,) for z in sorted(report.basepoints) if local_components(g, z).n_components < 3)
    if bad:
        return CheckResult("basepoint-components", STATUS_FAIL, g6, "basepoint with fewer than 3 components", bad)
    return CheckResult("basepoint-components", STATUS_PASS, g6)


def run_structure_checks(g: Graph, report: Optional[BalanceReport] = None) -> List[CheckResult]:
    report = _balanced_critical(g, report)
    return [
        check_exterior_count(g),
        check_weight_bound(g, report),
        check_positive_weight_paths(g),
        check_basepoint_components(g, report),
        check_exterior_pair(g, report),
        check_unique_basepoint(g, report),
        check_side_cliques(g, report),
    ]
