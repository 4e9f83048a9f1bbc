# Configuration settings for the application
import json
import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SETTINGS_PATH = os.getenv('PFRAME_SETTINGS', os.path.join(PROJECT_ROOT, 'config', 'settings.json'))


def load_settings(path: str = SETTINGS_PATH) -> dict:
    """Read the JSON settings file; a missing file means built-in defaults."""
    if not os.path.exists(path):
        return {}
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


_settings = load_settings()


def _setting(section: str, key: str, env_var: str, default):
    value = os.getenv(env_var)
    if value is None:
        value = _settings.get(section, {}).get(key, default)
    return type(default)(value)


class Config:
    """
    Central configuration: capacity bounds, oracle limits, paths and logging.
    Values come from config/settings.json and may be overridden through the
    environment (or a .env file).
    """
    # A bitset over the carrier must fit one machine word
    MAX_CARRIER = _setting('capacity', 'max_carrier', 'PFRAME_MAX_CARRIER', 64)

    # Upper bound on enumerated S-ideals
    CAPACITY = _setting('capacity', 'max_ideals', 'PFRAME_CAPACITY', 4096)

    # Upper bound on enumerated congruences
    CONGRUENCE_CAPACITY = _setting('capacity', 'max_congruences', 'PFRAME_CONGRUENCE_CAPACITY', 4096)

    # Brute-force partition filter runs on carriers up to this size
    ORACLE_MAX_CARRIER = _setting('oracle', 'max_carrier', 'PFRAME_ORACLE_MAX', 6)

    # Witness search bound (carrier size)
    SEARCH_MAX_SIZE = _setting('search', 'max_size', 'PFRAME_SEARCH_MAX', 7)

    # Explicit subset scans (SFin, S-Lindelof) refuse carriers beyond this
    MAX_SUBSET_SCAN = 16

    # Exhaustive adjoint-preservation checks in the verify suite
    PRESERVATION_MAX_CARRIER = _setting('oracle', 'max_preservation', 'PFRAME_PRESERVATION_MAX', 10)

    CATALOG_DIR = _setting('catalog', 'directory', 'PFRAME_CATALOG_DIR', 'catalog')

    LOG_FILE = _setting('logging', 'log_file', 'PFRAME_LOG_FILE', '')
    LOG_LEVEL = _setting('logging', 'log_level', 'PFRAME_LOG_LEVEL', 'INFO')
