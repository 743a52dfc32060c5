"""Text and JSON renderers for analysis results."""

from __future__ import annotations

import json
from typing import Any, Iterable

from ..compliance.verdict import Verdict
from ..core.attacks import AttackEdge
from ..core.semantics import ExtensionReport
from ..related.views import ARGUMENT_COLUMNS, ViewResult
from .dot import set_label


def report_doc(report: ExtensionReport) -> dict:
    doc = {
        "semantics": report.name or report.semantics.value,
        "mode": report.mode,
        "exists": report.exists,
        "extensions": [list(ext) for ext in report.extensions],
        "conclusions": [list(c) for c in report.conclusions_per_extension],
    }
    if report.flags:
        doc["flags"] = dict(report.flags)
    return doc


def view_doc(view: ViewResult) -> dict:
    if not view.applicable:
        return {"column": view.column, "status": "not_applicable", "note": view.note}
    return {
        "column": view.column,
        "status": "ok",
        "extensions": [list(ext) for ext in view.extensions],
        "conclusions": [list(c) for c in view.conclusions],
    }


def edge_doc(edge: AttackEdge) -> dict:
    return {
        "attacker": list(edge.attacker),
        "target": list(edge.target),
        "plain": edge.plain,
        "normal": edge.normal,
        "reverse": edge.reverse,
    }


def to_doc(value: Any) -> Any:
    """Convert any analysis output into JSON-ready data."""
    if isinstance(value, ExtensionReport):
        return report_doc(value)
    if isinstance(value, Verdict):
        return value.to_dict()
    if isinstance(value, ViewResult):
        return view_doc(value)
    if isinstance(value, AttackEdge):
        return edge_doc(value)
    if isinstance(value, dict):
        return {key: to_doc(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_doc(item) for item in value]
    return value


def export_json(report: Any) -> str:
    return json.dumps(to_doc(report), indent=2, ensure_ascii=False) + "\n"


def render_report_text(report: ExtensionReport) -> str:
    header = f"{report.name or report.semantics.value} ({report.mode})"
    if not report.exists:
        return f"{header}: no extensions\n"
    lines = [f"{header}: {len(report.extensions)} extension(s)"]
    for ext, derived in zip(report.extensions, report.conclusions_per_extension):
        lines.append(f"  {set_label(ext)}  conclusions {set_label(derived)}")
    for key, value in report.flags.items():
        lines.append(f"  {key}: {'yes' if value else 'no'}")
    return "\n".join(lines) + "\n"


def _witness_text(witness: dict) -> str:
    parts = []
    for key, value in witness.items():
        if isinstance(value, list):
            value = set_label(value)
        parts.append(f"{key}={value}")
    return ", ".join(parts)


def render_verdict_text(verdict: Verdict) -> str:
    lines = [f"{verdict.subject}: {verdict.status.value}"]
    if verdict.notes:
        lines.append(f"  note: {verdict.notes}")
    lines.extend(f"  witness: {_witness_text(w)}" for w in verdict.witnesses)
    return "\n".join(lines) + "\n"


def render_views_text(views: Iterable[ViewResult], semantics: str) -> str:
    lines = [f"compare ({semantics})"]
    for view in views:
        if not view.applicable:
            lines.append(f"  {view.column:<12} not applicable ({view.note})")
            continue
        separator = "; " if view.column in ARGUMENT_COLUMNS else ","
        extensions = ", ".join(set_label(ext, separator) for ext in view.extensions) or "none"
        lines.append(f"  {view.column:<12} {extensions}")
    return "\n".join(lines) + "\n"


def render_edges_text(edges: Iterable[AttackEdge]) -> str:
    lines = [
        f"{set_label(edge.attacker)} -> {set_label(edge.target)}  [{edge.kind}"
        f"{', plain' if edge.plain and edge.kind != 'plain' else ''}]"
        for edge in edges
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def render_check_text(stats: dict) -> str:
    lines = [f"{key}: {value}" for key, value in stats.items()]
    return "\n".join(lines) + "\n"
