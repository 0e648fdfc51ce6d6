# ClassificationAgent - classifies a batch of graphs and tabulates the results
import pandas as pd
from typing import Dict, List, Optional, Tuple

from src.enumeration import classify
from src.errors import ImpLabError
from src.graph import Graph


class ClassificationAgent:
    # Runs classify() over named graphs, one row per graph

    COLUMNS = ["name", "graph6", "n", "edges", "interval", "imp", "wt", "balanced",
               "critical", "basepoints", "classification", "bal_describe", "error"]

    def __init__(self):
        self.status_callback = None
        self.records: Dict[str, dict] = {}
        self.errors: Dict[str, str] = {}
        self.df = None

    def set_status_callback(self, callback):
        self.status_callback = callback

    def _update_status(self, message: str):
        if self.status_callback:
            self.status_callback(message)

    def classify_one(self, name: str, g: Graph, strict: bool = False) -> Optional[dict]:
        """Classify one graph and keep its record.

        Args:
            name: Row label, usually the input text.
            g: The graph.
            strict: Re-raise library errors instead of reporting them.

        Returns:
            The classify() record, or None when it failed and strict is off.
        """
        try:
            record = classify(g)
        except ImpLabError as e:
            self._update_status(f"⚠️ {name}: {e}")
            if strict:
                raise
            self.errors[name] = str(e)
            return None
        self.records[name] = record
        if record["interval"]:
            self._update_status(f"✅ {name}: interval, imp {record['imp']}, wt {record['wt']}")
        else:
            self._update_status(f"🚫 {name}: not interval ({record['witness']['kind']})")
        return record

    def classify_all(self, graphs: List[Tuple[str, Graph]]) -> pd.DataFrame:
        if not graphs:
            self._update_status("⚠️ No graphs to classify")
            return pd.DataFrame(columns=self.COLUMNS)

        self._update_status(f"🔬 Classifying {len(graphs)} graphs...")
        rows = []
        for name, g in graphs:
            record = self.classify_one(name, g)
            if record is None:
                rows.append({"name": name, "n": g.n, "edges": g.n_edges(), "error": self.errors[name]})
                continue
            row = {col: record.get(col) for col in self.COLUMNS if col not in ("name", "error")}
            row["basepoints"] = ",".join(str(v) for v in record.get("basepoints", []))
            rows.append({"name": name, **row, "error": ""})

        self.df = pd.DataFrame(rows, columns=self.COLUMNS)
        self._update_status(f"✅ Classification complete: {int(self.df['interval'].eq(True).sum())} interval graphs")
        return self.df
