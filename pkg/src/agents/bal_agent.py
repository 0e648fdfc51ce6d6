# BalAgent - builds, recognizes and verifies BAL_k graphs
import random
import pandas as pd
from typing import List, Optional, Tuple, Union

from src import config
from src.bal import BalRejection, BalSpec, bal_build, is_bal_form, predicted_imp, random_valid_spec, verify_bal_forward
from src.balance import CheckResult
from src.errors import ImpLabError
from src.graph import Graph


class BalAgent:
    # Wraps the BAL workflows for the CLI and the app

    def __init__(self, guard: Optional[int] = config.BAL_VERIFY_MAX_ORDER):
        self.guard = guard
        self.status_callback = None

    def set_status_callback(self, callback):
        self.status_callback = callback

    def _update_status(self, message: str):
        if self.status_callback:
            self.status_callback(message)

    def build(self, spec: BalSpec) -> Tuple[Graph, int]:
        """Build the graph for `spec`; returns the graph and its center vertex."""
        self._update_status(f"🏗️ Building {spec.describe()} ({spec.total_order} vertices)")
        g, z = bal_build(spec)
        self._update_status(f"✅ Built; predicted impropriety {predicted_imp(spec)}")
        return g, z

    def check(self, g: Graph) -> Union[BalSpec, BalRejection]:
        """
        Recognize whether `g` is a BAL graph.

        Args:
            g: a connected graph

        Returns:
            The recovered BalSpec, or a BalRejection naming the failed condition
        """
        result = is_bal_form(g)
        if isinstance(result, BalSpec):
            self._update_status(f"✅ Recognized {result.describe()}")
        else:
            self._update_status(f"🚫 Not a BAL graph: {result.reason}")
        return result

    def verify(self, spec: BalSpec) -> CheckResult:
        """Check that the built graph is balanced and (k+2)-critical."""
        self._update_status(f"🔬 Verifying {spec.describe()}...")
        result = verify_bal_forward(spec, guard=self.guard)
        icon = "✅" if result.passed else "❌"
        self._update_status(f"{icon} {result.message}")
        return result

    def verify_random(self, count: int, max_total_order: int, seed: int = 0) -> pd.DataFrame:
        """Forward check on `count` random clause-satisfying specs, plus the build/recognize round trip."""
        rng = random.Random(seed)
        rows: List[dict] = []
        self._update_status(f"🎲 Verifying {count} random specs of order <= {max_total_order}...")
        for i in range(count):
            spec = random_valid_spec(rng, max_total_order)
            try:
                result = verify_bal_forward(spec, guard=self.guard)
            except ImpLabError as e:
                self._update_status(f"⚠️ {spec.describe()}: {e}")
                continue
            g, _ = bal_build(spec)
            recovered = is_bal_form(g)
            rows.append({
                "spec": spec.describe(),
                "order": spec.total_order,
                "predicted_imp": predicted_imp(spec),
                "status": result.status,
                "round_trip": recovered == spec,
                "message": result.message,
            })
            if (i + 1) % 25 == 0:
                self._update_status(f"📊 {i + 1}/{count} specs checked")
        df = pd.DataFrame(rows, columns=["spec", "order", "predicted_imp", "status", "round_trip", "message"])
        failed = int((df["status"] == config.STATUS_FAIL).sum() + (~df["round_trip"].astype(bool)).sum()) if len(df) else 0
        self._update_status(f"✅ Random verification complete: {failed} failures")
        return df
