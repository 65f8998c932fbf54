"""Default configuration values for polyaccess."""

from pathlib import Path

# General settings
DEBUG = False
BASE_DIR = Path(__file__).resolve().parent.parent
SYSTEMS_DIR = BASE_DIR / "systems"

# Polynomial arithmetic
MONOMIAL_ORDER = "degrevlex"  # degrevlex | lex | deglex

# Bracket chains; None means 2n for an n-variable system
MAX_DEPTH = None

# Sampling oracle
SEED = 0
SAMPLE_POINTS = 50
SAMPLE_RANGE = 1000
GENERIC_RANK_SAMPLES = 3

# Restricted real radical: largest m tried in r^(2m) + sum s_j^2 in I
REAL_RADICAL_MAX_POWER = 3

# Reports
OUTPUT_FORMAT = "text"  # text | structured
SCHEMA_VERSION = 1
STRICT = False

# Logging
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
