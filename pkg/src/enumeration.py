# Enumeration - isomorph-free connected graphs, interval filtering and MFISG search
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from src import config
from src.bal import is_bal_form, BalSpec
from src.balance import balance_report
from src.canon import canonical_form, canonical_graph
from src.codec import adjacency_decode, adjacency_encode, graph6_encode, graph6_stream_decode
from src.errors import GuardExceededError, ImpLabError
from src.graph import Graph, weight_of_graph
from src.impropriety import IntervalModel, impropriety, is_p_improper
from src.recognition import NonIntervalWitness, is_interval


def _check_guard(n: int, guard: Optional[int]) -> None:
    if guard is not None and n > guard:
        raise GuardExceededError("enumeration order", guard, n)


def _augment(parent: Graph, keep: Callable[[Graph], bool]) -> Iterator[Graph]:
    # Add one vertex joined to every nonempty subset of the parent's vertices
    m = parent.n
    for mask in range(1, 1 << m):
        rows = list(parent.adj)
        for v in range(m):
            if mask >> v & 1:
                rows[v] |= 1 << m
        child = Graph(m + 1, tuple(rows) + (mask,))
        if keep(child):
            yield child


# one entry per (order, mode) up to the default guard
@lru_cache(maxsize=2 * config.MAX_ENUM_N)
def _level(n: int, interval_only: bool) -> Tuple[Graph, ...]:
    """Canonical representatives of one isomorphism class each, sorted by label.

    Augment-and-deduplicate: every parent of the previous level gets one new
    vertex in every possible way and children are kept by canonical label.

    Every connected graph has a non-cut vertex whose deletion leaves it
    connected, and both connectivity and interval-ness are hereditary, so
    augmenting the previous level reaches every class.
    """
    if n <= 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    keep = (lambda h: not isinstance(is_interval(h), NonIntervalWitness)) if interval_only else (lambda h: True)
    seen: Dict[str, Graph] = {}
    for parent in _level(n - 1, interval_only):
        for child in _augment(parent, keep):
            label = canonical_form(child)
            if label not in seen:
                seen[label] = canonical_graph(child)
    return tuple(seen[label] for label in sorted(seen))


def enumerate_connected_graphs(n: int, guard: Optional[int] = config.MAX_ENUM_N) -> Iterator[Graph]:
    _check_guard(n, guard)
    yield from _level(n, False)


def enumerate_interval_graphs(n: int, guard: Optional[int] = config.MAX_ENUM_N) -> Iterator[Graph]:
    # Same classes as filtering enumerate_connected_graphs by recognition
    _check_guard(n, guard)
    yield from _level(n, True)


def labeled_connected_classes(n: int) -> set:
    """Oracle: canonical labels of all connected labelled graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    labels = set()
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))
        if n > 0 and g.is_connected():
            labels.add(canonical_form(g))
    return labels


@dataclass(frozen=True)
class MfisgRecord:
    graph: Graph
    p: int
    imp: int
    n: int
    classification: str
    name: str = ""

    @property
    def label(self) -> str:
        return graph6_encode(self.graph)

    def to_dict(self) -> dict:
        data = {
            "schema": config.SCHEMA_VERSION,
            "graph6": self.label,
            "p": self.p,
            "imp": self.imp,
            "n": self.n,
            "classification": self.classification,
        }
        if self.name:
            data["name"] = self.name
        return data


def _has_cut_vertex(g: Graph) -> bool:
    return any(len(g.delete_vertex(v).components()) > 1 for v in range(g.n)) if g.n > 2 else False


def mfisg_classification(g: Graph, balanced: bool) -> str:
    if balanced:
        return config.CLASS_BALANCED
    if _has_cut_vertex(g):
        return config.CLASS_SKEW
    return config.CLASS_OTHER


def is_mfisg(g: Graph, p: int) -> bool:
    # imp(g) > p and every single deletion is p-improper
    if is_p_improper(g, p):
        return False
    return all(is_p_improper(g.delete_vertex(v), p) for v in range(g.n))


def _mfisg_record(args: Tuple[Graph, int]) -> Optional[MfisgRecord]:
    g, p = args
    if not is_mfisg(g, p):
        return None
    imp = impropriety(g).p
    balanced = weight_of_graph(g) == imp
    return MfisgRecord(g, p, imp, g.n, mfisg_classification(g, balanced))


def parallel_map(fn: Callable, items: Sequence, jobs: int = 1) -> List:
    # Results in input order whatever the schedule
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def mfisg_enumerate(p: int, n_max: int, guard: Optional[int] = config.MAX_ENUM_N, jobs: int = 1,
                    on_level: Optional[Callable[[int, int, int], None]] = None) -> List[MfisgRecord]:
    """All minimal forbidden interval subgraphs for the p-improper class with at most n_max vertices.

    on_level(n, graphs_checked, found) is called after each order.
    """
    _check_guard(n_max, guard)
    records: Dict[str, MfisgRecord] = {}
    for n in range(1, n_max + 1):
        graphs = list(enumerate_interval_graphs(n, guard))
        found = [r for r in parallel_map(_mfisg_record, [(g, p) for g in graphs], jobs) if r is not None]
        for record in found:
            records.setdefault(canonical_form(record.graph), record)
        if on_level:
            on_level(n, len(graphs), len(found))
    return sorted(records.values(), key=lambda r: (r.n, r.label))


def classify(g: Graph) -> dict:
    """Everything known about g: interval-ness, witness, imp, wt, balance, criticality, BAL form."""
    record = {"schema": config.SCHEMA_VERSION, "graph6": graph6_encode(g), "adjacency": adjacency_encode(g),
              "n": g.n, "edges": g.n_edges()}
    result = is_interval(g)
    if isinstance(result, NonIntervalWitness):
        record.update(interval=False, witness=result.to_dict())
        return record
    record.update(interval=True, witness=None, clique_ordering=result.to_dict())
    cert = impropriety(g)
    record.update(imp=cert.p, wt=weight_of_graph(g), model=cert.witness_model.to_dict(),
                  lower_bound_kind=cert.lower_bound_kind)
    if g.n == 0 or not g.is_connected():
        record.update(connected=False, balanced=None, critical=None, basepoints=[], bal_form=None)
        return record
    report = balance_report(g)
    bal = is_bal_form(g)
    record.update(
        connected=True,
        balanced=report.balanced,
        critical=report.critical,
        p=report.p,
        basepoints=sorted(report.basepoints),
        bal_form={"bal": True, **bal.to_dict()} if isinstance(bal, BalSpec) else bal.to_dict(),
        bal_describe=bal.describe() if isinstance(bal, BalSpec) else None,
        classification=mfisg_classification(g, report.balanced),
    )
    return record


def fixture_path(name: str) -> Path:
    if name not in config.FIXTURE_FILES:
        raise ImpLabError(f"unknown fixture set {name!r} (known: {', '.join(config.FIXTURE_FILES)})")
    return Path(config.FIXTURE_DIR) / config.FIXTURE_FILES[name]


def load_fixtures(name: str) -> List[Tuple[str, Graph, dict]]:
    # [(name, graph, raw entry)] from a named fixture set, or from a graph6 file such as an earlier run's output
    if name not in config.FIXTURE_FILES and Path(name).is_file():
        path = Path(name)
        graphs = graph6_stream_decode(path.read_text(encoding="utf-8"))
        return [(f"{path.stem}:{i}", g, {"graph6": graph6_encode(g)}) for i, g in enumerate(graphs, 1)]
    data = json.loads(fixture_path(name).read_text(encoding="utf-8"))
    return [(entry["name"], adjacency_decode(entry["adjacency"]), entry) for entry in data["graphs"]]


def load_illustrations() -> List[Tuple[str, IntervalModel, dict]]:
    # [(name, model, expected labels)] from the balance and criticality examples
    path = Path(config.FIXTURE_DIR) / config.ILLUSTRATION_FILE
    data = json.loads(path.read_text(encoding="utf-8"))
    return [(entry["name"], IntervalModel.from_intervals(entry["intervals"]), entry["expected"])
            for entry in data["models"]]


def compare_with_fixtures(records: Iterable[MfisgRecord], fixtures: Sequence[Tuple[str, Graph, dict]]) -> dict:
    """Set comparison up to isomorphism: matched names, missing fixtures, extra records."""
    by_label = {canonical_form(r.graph): r for r in records}
    fixture_labels = {canonical_form(g): name for name, g, _ in fixtures}
    matched = sorted(name for label, name in fixture_labels.items() if label in by_label)
    missing = sorted(name for label, name in fixture_labels.items() if label not in by_label)
    extra = sorted(by_label[label].label for label in by_label if label not in fixture_labels)
    return {"matched": matched, "missing": missing, "extra": extra, "total": len(fixture_labels),
            "ok": not missing and not extra}


def name_records(records: Sequence[MfisgRecord], fixtures: Sequence[Tuple[str, Graph, dict]]) -> List[MfisgRecord]:
    # Attach fixture names to records that match one
    names = {canonical_form(g): name for name, g, _ in fixtures}
    return [MfisgRecord(r.graph, r.p, r.imp, r.n, r.classification, names.get(canonical_form(r.graph), ""))
            for r in records]
