"""
linkage-lab Configuration
Exact workbench for links of ideals, Rees algebras and multiplicities.
"""
import os

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.environ.get("LINKAGE_LAB_DATA_DIR", os.path.join(BASE_DIR, "data"))
CORPUS_DIR = os.path.join(BASE_DIR, "corpus")
DB_PATH = os.environ.get("LINKAGE_LAB_DB", os.path.join(DATA_DIR, "linkage_lab.db"))

# ── Engine ──────────────────────────────────────────────
ENGINE_VERSION = "1.0.0"
REPORT_SCHEMA = "linkage-lab.report.v1"

# ── Logging ─────────────────────────────────────────────
LOG_LEVEL = os.environ.get("LINKAGE_LAB_LOG_LEVEL", "WARNING")
LOG_TO_FILE = os.environ.get("LINKAGE_LAB_LOG_FILE", "1") == "1"
LOG_FILE = os.path.join(DATA_DIR, "linkage_lab.log")

# ── Rings ───────────────────────────────────────────────
DEFAULT_FIELD = "QQ"        # QQ | FF(p)
DEFAULT_ORDER = "grevlex"   # grevlex | lex
MAX_PRIME = 2 ** 31

# ── Budgets ─────────────────────────────────────────────
DEFAULT_NMAX = int(os.environ.get("LINKAGE_LAB_NMAX", "5"))     # reduction-number search
DEFAULT_SMAX = int(os.environ.get("LINKAGE_LAB_SMAX", "40"))    # Hilbert–Samuel table
STABILIZATION_RUNS = 3      # equal d-th differences needed to accept a multiplicity
DEFAULT_JDEPTH = None       # canonical colon truncation; None means g + 2
DEFAULT_KMAX = None         # canonical components computed; None means g + 2

# ── Algorithms ──────────────────────────────────────────
MONOMIAL_FAST_PATH = os.environ.get("LINKAGE_LAB_MONOMIAL_FAST_PATH", "1") == "1"
SATURATION_METHOD = "rabinowitsch"  # rabinowitsch | iterated

# ── Corpus ──────────────────────────────────────────────
SCRIPT_SUFFIX = ".lnk"
