"""
Environment Management Module for CoinvKit

Uses python-dotenv for environment variable management and PyYAML for
the shipped defaults in config/limits.yaml.

Usage:
    from core.env import env, Caps, setup_logging

    print(env.cap_degree)
    print(env.logs_dir)
    caps = Caps.from_env()
"""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv


# Global constants
COINVKIT_VERSION = '0.1.0'
COINVKIT_AUTHOR = 'CoinvKit Development Team'
ENV_PREFIX = 'COINVKIT_'

# Find CoinvKit root and load main .env file
current_file = Path(__file__).resolve()
coinvkit_root = current_file.parent.parent
env_file = coinvkit_root / 'data' / '.env'
limits_file = coinvkit_root / 'config' / 'limits.yaml'

# Load environment variables
if env_file.exists():
    load_dotenv(env_file)

_BUILTIN_LIMITS = {
    'caps': {'degree': 40, 'slice': 200000, 'symmetric': 8},
    'seed': 20240601,
}


def load_limits(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load default limits from YAML, falling back to built-in values

    Args:
        path: Optional path to a limits file (defaults to config/limits.yaml)

    Returns:
        Dictionary with 'caps' and 'seed' keys
    """
    path = path or limits_file
    limits = {'caps': dict(_BUILTIN_LIMITS['caps']), 'seed': _BUILTIN_LIMITS['seed']}
    if not path.exists():
        return limits
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    limits['caps'].update(data.get('caps') or {})
    if 'seed' in data:
        limits['seed'] = data['seed']
    return limits


def _env_int(key: str, default: int) -> int:
    value = os.getenv(ENV_PREFIX + key)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger(__name__).warning(
            "Ignoring non-integer %s%s=%r", ENV_PREFIX, key, value)
        return default


class EnvConfig:
    """Environment configuration object"""

    def __init__(self, limits: Optional[Dict[str, Any]] = None):
        self._limits = limits or load_limits()

    @property
    def cap_degree(self) -> int:
        return _env_int('CAPS_DEGREE', int(self._limits['caps']['degree']))

    @property
    def cap_slice(self) -> int:
        return _env_int('CAPS_SLICE', int(self._limits['caps']['slice']))

    @property
    def sym_bound(self) -> int:
        return _env_int('CAPS_SYMMETRIC', int(self._limits['caps']['symmetric']))

    @property
    def seed(self) -> int:
        return _env_int('SEED', int(self._limits['seed']))

    @property
    def log_level(self) -> str:
        return os.getenv('COINVKIT_LOGGING_CONSOLE_LEVEL', 'WARNING').upper()

    @property
    def file_logging(self) -> bool:
        value = os.getenv('COINVKIT_LOGGING_FILE_ENABLED', 'false')
        return value.lower() in ('true', '1', 'yes', 'on')

    @property
    def logs_dir(self) -> str:
        logs_dir = os.getenv('COINVKIT_PATHS_LOGS_DIR', 'logs')
        if not os.path.isabs(logs_dir):
            logs_dir = str(coinvkit_root / logs_dir)
        return logs_dir

    @property
    def version(self) -> str:
        return COINVKIT_VERSION

    @property
    def author(self) -> str:
        return COINVKIT_AUTHOR


# Global env object
env = EnvConfig()


@dataclass(frozen=True)
class Caps:
    """Resource guardrails for oracle and symmetric-function work"""

    degree: int = 40
    slice: int = 200000
    symmetric: int = 8

    @classmethod
    def from_env(cls, config: Optional[EnvConfig] = None) -> 'Caps':
        config = config or env
        return cls(degree=config.cap_degree, slice=config.cap_slice,
                   symmetric=config.sym_bound)

    def override(self, degree: Optional[int] = None,
                 slice: Optional[int] = None) -> 'Caps':
        changes = {}
        if degree is not None:
            changes['degree'] = degree
        if slice is not None:
            changes['slice'] = slice
        return replace(self, **changes)


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configure root logging once for CLI runs

    Args:
        level: Console level name; defaults to COINVKIT_LOGGING_CONSOLE_LEVEL
    """
    level_name = (level or env.log_level).upper()
    handlers = [logging.StreamHandler()]
    if env.file_logging:
        logs_dir = Path(env.logs_dir)
        logs_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(logs_dir / 'coinvkit.log', encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format='[%(levelname)s] %(message)s',
        handlers=handlers,
        force=True,
    )


def get_config_summary() -> dict:
    """Get configuration summary"""
    coinvkit_vars = {k: v for k, v in os.environ.items() if k.startswith(ENV_PREFIX)}
    return {
        'main_config_exists': env_file.exists(),
        'overrides_count': len(coinvkit_vars),
        'caps': {
            'degree': env.cap_degree,
            'slice': env.cap_slice,
            'symmetric': env.sym_bound,
        },
        'seed': env.seed,
        'paths': {'logs_dir': env.logs_dir},
    }
