"""Engine configuration loader for abaplus."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path

from ..constants import (
    DEFAULT_ARGUMENT_CAP,
    DEFAULT_ASSUMPTION_CAP,
    DEFAULT_ORACLE_NODE_BUDGET,
    DEFAULT_SUPPORT_CAP,
)

try:  # Python 3.11+
    import tomllib  # type: ignore[attr-defined]
except ModuleNotFoundError:  # pragma: no cover - exercised on Python <3.11
    tomllib = None

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class EngineConfig:
    """Enumeration and capacity limits."""

    assumption_cap: int = DEFAULT_ASSUMPTION_CAP
    support_cap: int = DEFAULT_SUPPORT_CAP
    oracle_node_budget: int = DEFAULT_ORACLE_NODE_BUDGET
    argument_cap: int = DEFAULT_ARGUMENT_CAP

    def with_overrides(self, **overrides) -> "EngineConfig":
        """Return a copy with every non-None override applied."""
        values = {key: value for key, value in overrides.items() if value is not None}
        for key, value in values.items():
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ValueError(f"{key} must be a positive integer, got {value!r}")
        return replace(self, **values) if values else self


DEFAULT_CONFIG = EngineConfig()


def default_config_path() -> Path:
    """Return default config path (~/.config/abaplus/config.toml)."""
    return Path.home() / ".config" / "abaplus" / "config.toml"


def _parse_scalar(token):
    token = token.strip()
    if not token:
        return ""
    if token.startswith('"') and token.endswith('"') and len(token) >= 2:
        return token[1:-1]
    lower = token.lower()
    if lower == "true":
        return True
    if lower == "false":
        return False
    try:
        return int(token.replace("_", ""))
    except ValueError:
        return token


def _fallback_parse_toml(text: str) -> dict:
    """Minimal parser for the flat key/value TOML used by abaplus config."""
    data = {}
    section = None
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section:
                data.setdefault(section, {})
            continue
        if "=" not in line:
            continue
        key, value = line.split("=", 1)
        key = key.strip()
        parsed = _parse_scalar(value)
        if section:
            data.setdefault(section, {})[key] = parsed
        else:
            data[key] = parsed
    return data


def _parse_toml(text: str) -> dict:
    if tomllib is not None:
        try:
            return tomllib.loads(text)
        except Exception:
            LOGGER.debug("tomllib rejected config, using fallback parser", exc_info=True)
            return _fallback_parse_toml(text)
    return _fallback_parse_toml(text)


def _coerce_positive(raw: dict, key: str, default: int) -> int:
    value = raw.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        LOGGER.warning("Invalid %s in config: %r (using %d)", key, value, default)
        return default
    return value


def _normalize_config(raw: dict) -> EngineConfig:
    engine = raw.get("engine", raw)
    if not isinstance(engine, dict):
        engine = {}
    return EngineConfig(
        assumption_cap=_coerce_positive(engine, "assumption_cap", DEFAULT_ASSUMPTION_CAP),
        support_cap=_coerce_positive(engine, "support_cap", DEFAULT_SUPPORT_CAP),
        oracle_node_budget=_coerce_positive(engine, "oracle_node_budget", DEFAULT_ORACLE_NODE_BUDGET),
        argument_cap=_coerce_positive(engine, "argument_cap", DEFAULT_ARGUMENT_CAP),
    )


def load_config(path: str | Path | None = None) -> EngineConfig:
    """Load config from TOML file; return defaults when missing/invalid."""
    cfg_path = Path(path) if path is not None else default_config_path()
    try:
        text = cfg_path.read_text(encoding="utf-8")
    except OSError:
        LOGGER.debug("No config at %s, using defaults", cfg_path)
        return EngineConfig()
    return _normalize_config(_parse_toml(text))
