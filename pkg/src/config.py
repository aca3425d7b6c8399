"""
Configuration defaults for the active-set constructions.

Every value can be overridden through the environment or a ``.env`` file;
command-line flags override both.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = os.getenv("LOG_FORMAT", "%(asctime)s - %(levelname)s - %(message)s")

# Enumeration guards
DEFAULT_L_MAX = int(os.getenv("MDM_L_MAX", "64"))

# Tail bounds
SLACK_FRACTION = float(os.getenv("MDM_SLACK_FRACTION", "1e-3"))
POWER_SUM_S = int(os.getenv("MDM_POWER_SUM_S", str(2**20)))
S_CEILING = int(os.getenv("MDM_S_CEILING", str(2**31)))
CHUNK_SIZE = int(os.getenv("MDM_CHUNK_SIZE", str(2**20)))

# Oracle
ORACLE_MAX_SUBSETS = int(os.getenv("MDM_ORACLE_MAX_SUBSETS", str(10**7)))

# Output
DEFAULT_OUTPUT_FILE = os.getenv("DEFAULT_OUTPUT_FILE", "active_set.json")
