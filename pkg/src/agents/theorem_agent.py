# TheoremAgent - runs every structure check over the exhaustive interval catalog
import random
import pandas as pd
from typing import Dict, List, Optional

from src import config
from src.bal import BalSpec, is_bal_form, random_valid_spec, verify_bal_forward
from src.balance import CheckResult, balance_report, run_structure_checks
from src.codec import graph6_encode
from src.enumeration import enumerate_interval_graphs, parallel_map
from src.graph import Graph

BAL_REVERSE = "bal-reverse"
BAL_FORWARD = "bal-forward"


def check_bal_reverse(g: Graph, report=None) -> CheckResult:
    # Every balanced critical graph is a BAL graph
    report = report if report is not None else balance_report(g)
    g6 = graph6_encode(g)
    if not (report.balanced and report.critical):
        return CheckResult(BAL_REVERSE, config.STATUS_VACUOUS, g6, "not balanced and critical")
    result = is_bal_form(g)
    if isinstance(result, BalSpec):
        return CheckResult(BAL_REVERSE, config.STATUS_PASS, g6, result.describe())
    return CheckResult(BAL_REVERSE, config.STATUS_FAIL, g6, result.reason)


def check_graph(g: Graph) -> List[CheckResult]:
    report = balance_report(g)
    return run_structure_checks(g, report) + [check_bal_reverse(g, report)]


class TheoremAgent:
    """Verifies the structure theorems on every connected interval graph up to max_n vertices.

    Each check is pass, fail or vacuous per graph; summary() counts them per
    theorem and failures() lists the offending graphs.
    """

    def __init__(self, max_n: int, jobs: int = config.DEFAULT_JOBS,
                 guard: Optional[int] = config.MAX_ENUM_N):
        self.max_n = max_n
        self.jobs = jobs
        self.guard = guard
        self.status_callback = None
        self.results: List[CheckResult] = []

    def set_status_callback(self, callback):
        self.status_callback = callback

    def _update_status(self, message: str):
        if self.status_callback:
            self.status_callback(message)

    def run(self, forward_samples: int = 0, forward_max_order: int = 9, seed: int = 0) -> pd.DataFrame:
        """
        Check every claim on all connected interval graphs up to max_n vertices.

        Args:
            forward_samples: number of random BAL specs to verify afterwards (0 skips)
            forward_max_order: vertex limit for those random specs
            seed: random seed for the spec sampler

        Returns:
            DataFrame with one row per claim: theorem, pass, fail, vacuous
        """
        self.results = []
        for n in range(1, self.max_n + 1):
            graphs = list(enumerate_interval_graphs(n, self.guard))
            self._update_status(f"🔬 n={n}: checking {len(graphs)} connected interval graphs...")
            for checks in parallel_map(check_graph, graphs, self.jobs):
                self.results.extend(checks)
        if forward_samples:
            self._run_forward(forward_samples, forward_max_order, seed)
        summary = self.summary()
        failed = int(summary["fail"].sum()) if len(summary) else 0
        icon = "✅" if failed == 0 else "❌"
        self._update_status(f"{icon} Theorem verification complete: {failed} failures")
        return summary

    def _run_forward(self, samples: int, max_order: int, seed: int):
        rng = random.Random(seed)
        self._update_status(f"🎲 Forward BAL check on {samples} random specs...")
        for _ in range(samples):
            self.results.append(verify_bal_forward(random_valid_spec(rng, max_order), guard=None))

    def summary(self) -> pd.DataFrame:
        counts: Dict[str, Dict[str, int]] = {}
        for r in self.results:
            row = counts.setdefault(r.theorem, {config.STATUS_PASS: 0, config.STATUS_FAIL: 0,
                                                config.STATUS_VACUOUS: 0})
            row[r.status] += 1
        rows = [{"theorem": name, **row} for name, row in counts.items()]
        return pd.DataFrame(rows, columns=["theorem", config.STATUS_PASS, config.STATUS_FAIL,
                                           config.STATUS_VACUOUS])

    def failures(self) -> pd.DataFrame:
        """Failed checks as rows, with the offending graph in graph6."""
        rows = [r.to_dict() for r in self.results if r.status == config.STATUS_FAIL]
        return pd.DataFrame(rows, columns=["schema", "theorem", "status", "graph6", "message", "vertex_sets"])
