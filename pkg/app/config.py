import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_FIXTURE_DIR = Path(__file__).resolve().parent / "catalog" / "data"

# trees beyond order 3^11 are out of desk scale
MAX_LO_CEILING = 11


@dataclass(frozen=True)
class Settings:
    fixture_dir: Path
    max_lo: int
    iso_limit: int
    log_level: str
    classgroup_bound: int


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer value {raw!r} for {name}, using {default}")
        return default


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    env_path = PROJECT_ROOT / ".env"
    if env_path.exists():
        load_dotenv(env_path)
        logger.info(f"Loaded environment from {env_path}")

    max_lo = _int_env("ARTIN_MAX_LO", 8)
    if max_lo > MAX_LO_CEILING:
        logger.warning(f"ARTIN_MAX_LO={max_lo} exceeds {MAX_LO_CEILING}, capping")
        max_lo = MAX_LO_CEILING

    settings = Settings(
        fixture_dir=Path(os.getenv("ARTIN_FIXTURE_DIR") or DEFAULT_FIXTURE_DIR),
        max_lo=max_lo,
        iso_limit=_int_env("ARTIN_ISO_LIMIT", 200000),
        log_level=os.getenv("ARTIN_LOG_LEVEL", "INFO").upper(),
        classgroup_bound=_int_env("ARTIN_CLASSGROUP_BOUND", 10**7),
    )
    logger.debug(f"Settings resolved: {settings}")
    return settings
