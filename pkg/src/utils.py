# Utility functions
import json
import re
from pathlib import Path
from typing import Iterable, Optional

from src.config import DATA_DIR


def safe_name(text: str) -> str:
    # Filesystem-friendly stem: letters, digits, dash and underscore
    cleaned = re.sub(r"[^A-Za-z0-9_-]+", "_", text.strip()).strip("_")
    return cleaned[:50] or "result"


def save_results(data, name: str, output_dir: Optional[Path] = None) -> Path:
    # Save any JSON-serializable result under data/implab_<name>.json
    out = Path(output_dir) if output_dir is not None else DATA_DIR
    out.mkdir(parents=True, exist_ok=True)
    filepath = out / f"implab_{safe_name(name)}.json"
    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False, sort_keys=True)
    return filepath


def to_ndjson(records: Iterable[dict]) -> str:
    # One compact JSON object per line, keys sorted
    return "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in records)
