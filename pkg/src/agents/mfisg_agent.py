# MfisgAgent - searches minimal forbidden interval subgraphs and diffs them against fixtures
import pandas as pd
from typing import List, Optional

from src import config
from src.enumeration import (
    MfisgRecord, compare_with_fixtures, load_fixtures, mfisg_enumerate, name_records,
)


class MfisgAgent:
    """Enumerates the MFISGs of the p-improper class up to a vertex bound.

    Results are kept on the agent (records, comparison) and returned as a
    DataFrame sorted by order then graph6, so the table never depends on
    the number of worker processes.
    """

    COLUMNS = ["name", "graph6", "n", "imp", "classification"]

    def __init__(self, p: int, max_n: int, jobs: int = config.DEFAULT_JOBS,
                 guard: Optional[int] = config.MAX_ENUM_N):
        self.p = p
        self.max_n = max_n
        self.jobs = jobs
        self.guard = guard
        self.status_callback = None
        self.records: List[MfisgRecord] = []
        self.comparison: Optional[dict] = None

    def set_status_callback(self, callback):
        self.status_callback = callback

    def _update_status(self, message: str):
        if self.status_callback:
            self.status_callback(message)

    def _on_level(self, n: int, checked: int, found: int):
        self._update_status(f"🔎 n={n}: {checked} interval graphs checked, {found} MFISGs")

    def run(self, fixtures: Optional[str] = None) -> pd.DataFrame:
        """
        Enumerate the MFISGs for this agent's p and vertex limit.

        Args:
            fixtures: optional fixture set name or graph6 file to compare against

        Returns:
            DataFrame with columns: name, graph6, n, imp, classification
        """
        self._update_status(f"🚀 Searching MFISGs for p={self.p} up to {self.max_n} vertices...")
        self.records = mfisg_enumerate(self.p, self.max_n, guard=self.guard, jobs=self.jobs,
                                       on_level=self._on_level)
        self.comparison = None
        if fixtures:
            self.compare(fixtures)
        self._update_status(f"✅ Found {len(self.records)} MFISGs")
        return self.to_dataframe()

    def compare(self, fixtures: str) -> dict:
        """
        Name the current records after matching fixture graphs.

        Returns:
            Dict with keys: ok, total, matched, missing, extra
        """
        loaded = load_fixtures(fixtures)
        self.records = name_records(self.records, loaded)
        self.comparison = compare_with_fixtures(self.records, loaded)
        c = self.comparison
        self._update_status(f"📋 {len(c['matched'])}/{c['total']} matched against '{fixtures}'")
        for name in c["missing"]:
            self._update_status(f"⚠️ missing fixture graph {name}")
        for label in c["extra"]:
            self._update_status(f"⚠️ extra graph {label}")
        return c

    def to_dataframe(self) -> pd.DataFrame:
        rows = [{"name": r.name, "graph6": r.label, "n": r.n, "imp": r.imp, "classification": r.classification}
                for r in self.records]
        return pd.DataFrame(rows, columns=self.COLUMNS)
