"""
Typed run contract shared by the argument parser and the dispatcher.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Subcommand(str, Enum):
    """Supported CLI subcommands."""

    CHECK = "check"
    SEMANTICS = "semantics"
    ATTACKS = "attacks"
    AXIOMS = "axioms"
    PRINCIPLES = "principles"
    TRANSLATE_PAF = "translate-paf"
    COMPARE = "compare"
    DOT = "dot"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


class Scope(str, Enum):
    SUPPORTS = "supports"
    ALL = "all"


@dataclass(frozen=True)
class RunConfig:
    subcommand: Subcommand
    inputs: tuple[str, ...]
    semantics: tuple[str, ...] = ("all",)
    mode: str = "plus"
    assumption_cap: int | None = None
    support_cap: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: str | None = None
    config_path: str | None = None
    principle: str = "all"
    scope: Scope = Scope.SUPPORTS
    include_trivial: bool = False

    def __post_init__(self):
        for name in ("assumption_cap", "support_cap"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name.replace('_', '-')} must be positive")


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    output: str = ""
    error: str = ""
