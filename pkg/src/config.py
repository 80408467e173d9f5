"""Configuration management - loads settings from environment variables"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _float_env(name: str, default: str) -> float:
    value = os.getenv(name, default)
    try:
        return float(value)
    except ValueError:
        raise ValueError(f"{name} must be a number, got '{value}'")


def _int_env(name: str, default: str) -> int:
    value = os.getenv(name, default)
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{value}'")


PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Bundled resources
DATA_DIR = os.getenv("DATA_DIR", os.path.join(PROJECT_ROOT, "data"))
EXCEPTIONS_DIR = os.getenv("EXCEPTIONS_DIR", os.path.join(DATA_DIR, "exceptions"))
GAZETTEER_PATH = os.getenv("GAZETTEER_PATH", os.path.join(DATA_DIR, "gazetteer.tsv"))
PROFESSION_PAIRS_PATH = os.getenv(
    "PROFESSION_PAIRS_PATH", os.path.join(DATA_DIR, "profession_pairs.tsv")
)
FIXTURE_PROFILES_PATH = os.path.join(DATA_DIR, "fixtures", "synthetic_profiles.jsonl")

# Model used by `predict` and the HTTP service
MODEL_PATH = os.getenv("MODEL_PATH", os.path.join(DATA_DIR, "models", "usernames.bin"))

# Optional online geocoder (gazetteer fallback)
GEOCODER_URL = os.getenv("GEOCODER_URL", "https://nominatim.openstreetmap.org/search")
GEOCODER_USER_AGENT = os.getenv("GEOCODER_USER_AGENT", "arab-gender-profiler/1.0")
GEOCODER_CACHE_DB = os.getenv(
    "GEOCODER_CACHE_DB", os.path.join(DATA_DIR, "geocoder_cache.db")
)

# Server Configuration
SERVICE_HOST = os.getenv("SERVICE_HOST", "0.0.0.0")
SERVICE_PORT = _int_env("SERVICE_PORT", "8001")

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Pipeline defaults
DEFAULT_SEED = _int_env("DEFAULT_SEED", "42")
DEFAULT_TAU = _float_env("DEFAULT_TAU", "0.8")
FRIEND_THRESHOLD = _float_env("FRIEND_THRESHOLD", str(1 / 3))
MIN_COUNT = _int_env("MIN_COUNT", "2")

# Secret for screen-name pseudonyms; empty means a fresh secret per run
ANON_SECRET = os.getenv("ANON_SECRET", "")
