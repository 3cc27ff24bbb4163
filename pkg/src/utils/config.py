import json
import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Mapping, Optional

CONFIG_PATH = "~/.w6lab/config.json"

_ENV = {
    "workers": "W6LAB_WORKERS",
    "seed": "W6LAB_SEED",
    "cache_dir": "W6LAB_CACHE_DIR",
    "log_level": "W6LAB_LOG_LEVEL",
}


@dataclass(frozen=True)
class Settings:
    workers: int = 1
    seed: int = 20240601
    cache_dir: str = "graph_cache"
    log_level: str = "WARNING"


def _coerce(name: str, value):
    kind = {f.name: f.type for f in fields(Settings)}[name]
    if kind in (int, "int"):
        return int(value)
    return str(value)


def _read_config_file(path: str) -> dict:
    config_path = os.path.expanduser(path)
    if not os.path.exists(config_path):
        return {}
    try:
        with open(config_path, 'r') as fp:
            data = json.load(fp)
    except (OSError, json.JSONDecodeError) as e:
        logging.error(f"Error reading config {config_path}: {e}")
        return {}
    return {k: v for k, v in data.items() if k in _ENV}


def load_settings(config_path: Optional[str] = CONFIG_PATH,
                  environ: Optional[Mapping[str, str]] = None, **overrides) -> Settings:
    """
    Defaults, then the JSON config file, then W6LAB_* environment variables,
    then explicit overrides (CLI flags). None overrides are ignored.
    """
    environ = os.environ if environ is None else environ
    values = {}
    if config_path:
        values.update(_read_config_file(config_path))
    for name, var in _ENV.items():
        if environ.get(var):
            values[name] = environ[var]
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return replace(Settings(), **{k: _coerce(k, v) for k, v in values.items()})
    except ValueError as e:
        raise ValueError(f"bad configuration value: {e}") from None
