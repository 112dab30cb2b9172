import json
import logging
import os
from dataclasses import dataclass, fields

logger = logging.getLogger(__name__)

ENV_INT_OVERRIDES = {
    "QECSA_ENUM_CAP": "enum_cap",
    "QECSA_WORKERS": "workers",
}


@dataclass
class QecsaConfig:
    enum_cap: int = 10**7  # colspan / noise enumeration ceiling (states)
    mds_exhaustive_max_n: int = 16  # above this N the MDS sweep samples row subsets
    mds_samples: int = 2000
    delta_exhaustive_cap: int = 10**4  # enumerate all deltas while q**(2|S|) stays below
    delta_samples: int = 100
    noise_seeds: int = 20
    swt_samples: int = 20000  # sampled swt check when enumeration exceeds enum_cap
    workers: int = 1


def _apply_env(config: QecsaConfig) -> None:
    for var, key in ENV_INT_OVERRIDES.items():
        raw = os.environ.get(var)
        if raw is None or not raw.strip():
            continue
        try:
            value = int(raw.strip())
        except ValueError:
            logger.warning("⚠️  ignoring %s=%r (not an integer)", var, raw)
            continue
        if value < 1:
            logger.warning("⚠️  ignoring %s=%r (must be >= 1)", var, raw)
            continue
        setattr(config, key, value)
        logger.debug("⚙️  %s overrides %s=%s", var, key, value)


def load_config(path: str = "config.json") -> QecsaConfig:
    """Defaults, then config.json keys, then QECSA_* environment overrides."""
    config = QecsaConfig()
    known = {f.name for f in fields(QecsaConfig)}
    if not os.path.exists(path):
        logger.info("config file %s not found, using defaults", path)
    else:
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError("top-level JSON must be an object")
            for key, value in data.items():
                if key in known:
                    setattr(config, key, value)
                    logger.debug("⚙️  config override %s=%s", key, value)
                else:
                    logger.debug("ignoring unknown config key %s", key)
        except (OSError, ValueError) as e:
            logger.warning("⚠️  cannot read config file %s: %s", path, e)
    _apply_env(config)
    return config
