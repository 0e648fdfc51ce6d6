# Configuration for ImpLab
import os
from pathlib import Path

# Data directory (JSON results, SVG diagrams)
DATA_DIR = Path(__file__).parent.parent / "data"

# Fixture directory, overridable for out-of-tree fixture sets
FIXTURE_DIR = Path(os.environ.get("IMPLAB_FIXTURE_DIR", Path(__file__).parent.parent / "fixtures"))

# Named fixture sets understood by `mfisg --fixtures <name>`
FIXTURE_FILES = {
    "p1-mfisgs": "p1_mfisgs.json",
}

# Interval-coordinate examples of balance and criticality
ILLUSTRATION_FILE = "balance_illustrations.json"

# Size guards (lifted with --guard-override)
MAX_ENUM_N = 8
BRUTEFORCE_MAX_N = 7
BAL_VERIFY_MAX_ORDER = 14
CANON_MAX_N = 12

# Version of every JSON document we emit
SCHEMA_VERSION = 1

# Parallelism
DEFAULT_JOBS = 1

# Chart colours, one per role in an interval diagram
ROLE_COLORS = {
    "center": "#764ba2",
    "inner": "#667eea",
    "side": "#f0a35e",
    "other": "#9aa5b1",
}

# Check result statuses
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_VACUOUS = "vacuous"

# MFISG classifications
CLASS_BALANCED = "balanced"
CLASS_SKEW = "skew"
CLASS_OTHER = "other"


def ensure_data_dir() -> Path:
    # Create the data directory on first use
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    return DATA_DIR
