"""Dispatch of CLI subcommands to the engine."""

from __future__ import annotations

import logging
from pathlib import Path

from ..compliance import (
    Principle,
    check_axiom_consistency,
    check_axiom_negation,
    check_contraposition,
    check_principle,
    check_wcp,
)
from ..constants import EXIT_CAPACITY, EXIT_OK, EXIT_PARSE, EXIT_USAGE
from ..core.attacks import Mode
from ..core.config import EngineConfig, load_config
from ..core.deduction import is_flat, support_families
from ..core.errors import CapacityError, FlatnessError, FrameworkParseError, NameCollisionError
from ..core.framework import Framework, render_framework
from ..core.parser import parse_framework
from ..core.semantics import ALL_SEMANTICS, Enumerator, SemanticsName
from ..related.paf import paf_to_abaplus, parse_paf
from ..related.views import compare_views
from .actions import OutputFormat, RunConfig, RunResult, Subcommand
from .dot import attack_edges, export_dot
from .rendering import (
    export_json,
    render_check_text,
    render_edges_text,
    render_report_text,
    render_verdict_text,
    render_views_text,
)

LOGGER = logging.getLogger(__name__)


class UsageError(ValueError):
    """Bad invocation: unreadable input, unknown names, wrong arity."""


def _read_text(path: str) -> str:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise FrameworkParseError(
            f"invalid UTF-8 (byte 0x{data[exc.start]:02x})", line=line, source=path
        ) from None


def _single_input(config: RunConfig) -> str:
    if len(config.inputs) != 1:
        raise UsageError(f"{config.subcommand.value} expects exactly one input file")
    return config.inputs[0]


def _load_framework(config: RunConfig) -> Framework:
    path = _single_input(config)
    return parse_framework(_read_text(path), source=path)


def _semantics_list(selection: tuple[str, ...], default: tuple[SemanticsName, ...]) -> list[SemanticsName]:
    if not selection:
        return list(default)
    if any(item.strip().lower() == "all" for item in selection):
        return list(ALL_SEMANTICS)
    try:
        return [SemanticsName.parse(item) for item in selection]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _mode(config: RunConfig) -> Mode:
    try:
        return Mode.parse(config.mode)
    except ValueError:
        raise UsageError(f"unknown mode: {config.mode}") from None


def _run_check(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    family = support_families(f, engine)
    stats = {
        "source": config.inputs[0],
        "assumptions": len(f.assumptions),
        "rules": len(f.rules),
        "sentences": len(f.sentences),
        "flat": is_flat(f),
        "strict_preferences": len(f.pref.strict),
        "language_preference": f.lpref is not None,
        "support_rounds": family.rounds,
        "max_supports": max((len(family.masks(s)) for s in f.sentences), default=0),
    }
    if len(f.assumptions) <= engine.assumption_cap:
        stats["closed_sets"] = len(Enumerator(f, Mode.PLAIN, engine).table.closed_masks)
    else:
        stats["closed_sets"] = "skipped (over assumption cap)"
    if config.output_format is OutputFormat.JSON:
        return export_json(stats)
    return render_check_text(stats)


def _run_semantics(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    enumerator = Enumerator(f, _mode(config), engine)
    reports = [enumerator.report(sem) for sem in _semantics_list(config.semantics, ALL_SEMANTICS)]
    if config.output_format is OutputFormat.JSON:
        return export_json(reports[0] if len(reports) == 1 else reports)
    return "".join(render_report_text(report) for report in reports)


def _run_attacks(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    _, edges = attack_edges(f, config.scope, config.include_trivial, engine)
    if config.output_format is OutputFormat.JSON:
        return export_json(edges)
    return render_edges_text(edges)


def _run_axioms(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    verdicts = [
        check_wcp(f, engine),
        check_contraposition(f, engine),
        check_axiom_consistency(f, config=engine),
        check_axiom_negation(f, config=engine),
    ]
    if config.output_format is OutputFormat.JSON:
        return export_json(verdicts)
    return "".join(render_verdict_text(v) for v in verdicts)


def _run_principles(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    try:
        principles = (
            list(Principle) if config.principle.strip().lower() == "all"
            else [Principle.parse(config.principle)]
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results = []
    for sem in _semantics_list(config.semantics, ALL_SEMANTICS):
        for principle in principles:
            verdict = check_principle(f, principle, sem, engine)
            results.append({"semantics": sem.value, "verdict": verdict})
    if config.output_format is OutputFormat.JSON:
        return export_json(results)
    return "".join(
        f"[{item['semantics']}] " + render_verdict_text(item["verdict"]) for item in results
    )


def _run_translate_paf(config: RunConfig, engine: EngineConfig) -> str:
    path = _single_input(config)
    framework = paf_to_abaplus(parse_paf(_read_text(path), source=path))
    text = render_framework(framework)
    if config.output_format is OutputFormat.JSON:
        return export_json({"source": path, "framework": text})
    return text


def _run_compare(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    selection = _semantics_list(config.semantics, (SemanticsName.COMPLETE,))
    tables = [(sem, compare_views(f, sem, engine)) for sem in selection]
    if config.output_format is OutputFormat.JSON:
        docs = [{"semantics": sem.value, "columns": views} for sem, views in tables]
        return export_json(docs[0] if len(docs) == 1 else docs)
    return "".join(render_views_text(views, sem.value) for sem, views in tables)


def _run_dot(config: RunConfig, engine: EngineConfig) -> str:
    f = _load_framework(config)
    return export_dot(f, config.scope, config.include_trivial, engine)


_HANDLERS = {
    Subcommand.CHECK: _run_check,
    Subcommand.SEMANTICS: _run_semantics,
    Subcommand.ATTACKS: _run_attacks,
    Subcommand.AXIOMS: _run_axioms,
    Subcommand.PRINCIPLES: _run_principles,
    Subcommand.TRANSLATE_PAF: _run_translate_paf,
    Subcommand.COMPARE: _run_compare,
    Subcommand.DOT: _run_dot,
}


def engine_config_for(config: RunConfig) -> EngineConfig:
    """Defaults < config file < command-line caps."""
    base = load_config(config.config_path)
    return base.with_overrides(
        assumption_cap=config.assumption_cap,
        support_cap=config.support_cap,
    )


def run(config: RunConfig) -> RunResult:
    """Execute one subcommand and return its exit code and rendered output."""
    handler = _HANDLERS.get(config.subcommand)
    if handler is None:
        LOGGER.warning("Unknown subcommand received: %s", config.subcommand)
        return RunResult(EXIT_USAGE, error=f"unknown subcommand: {config.subcommand}")
    try:
        engine = engine_config_for(config)
        output = handler(config, engine)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, (FrameworkParseError, NameCollisionError, FlatnessError)):
            return RunResult(EXIT_PARSE, error=f"error: {exc}")
        return RunResult(EXIT_USAGE, error=f"usage error: {exc}")
    except CapacityError as exc:
        source = ", ".join(config.inputs)
        return RunResult(EXIT_CAPACITY, error=f"{source}: {exc}")
    LOGGER.debug("%s finished", config.subcommand.value)
    return RunResult(EXIT_OK, output=output)
