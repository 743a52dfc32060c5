"""Side-by-side extension views of one framework under related formalisms."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.abstract import AAGraph, AbstractEnumerator
from ..core.attacks import Mode
from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.deduction import is_flat
from ..core.errors import LimitError
from ..core.framework import Framework
from ..core.semantics import Enumerator, SemanticsName
from ..utils import iter_bits
from .arguments import (
    OrderingPrinciple,
    StructuredArgument,
    argument_preorder,
    build_arguments,
    defeat_graph,
    dung_normal_graph,
)
from .p_aba import p_aba_extensions
from .paf import Paf, repair_paf

LOGGER = logging.getLogger(__name__)

COMPARE_COLUMNS = (
    "aba",
    "abaplus",
    "paf-eli",
    "paf-dem",
    "paf-deli",
    "aspic-eli",
    "aspic-dem",
    "aspic-deli",
    "dung-normal",
    "p-aba",
)

# Columns whose extensions are sets of argument ids rather than assumptions.
ARGUMENT_COLUMNS = COMPARE_COLUMNS[2:-1]

_PRINCIPLE_SUFFIX = {
    "eli": OrderingPrinciple.ELITIST,
    "dem": OrderingPrinciple.DEMOCRATIC,
    "deli": OrderingPrinciple.DISJOINT_ELITIST,
}


@dataclass(frozen=True)
class ViewResult:
    column: str
    applicable: bool
    extensions: tuple[tuple[str, ...], ...] = ()
    conclusions: tuple[tuple[str, ...], ...] = ()
    note: str = ""


def _not_applicable(column: str, note: str) -> ViewResult:
    return ViewResult(column=column, applicable=False, note=note)


def _argument_view(
    f: Framework,
    column: str,
    graph: AAGraph,
    args: tuple[StructuredArgument, ...],
    sem: SemanticsName,
    config: EngineConfig,
) -> ViewResult:
    by_id = {a.id: a for a in args}
    try:
        enumerator = AbstractEnumerator(graph, config)
    except LimitError as exc:
        return _not_applicable(column, str(exc))
    extensions = []
    conclusions = []
    for mask in enumerator.masks(sem):
        ids = tuple(graph.nodes[i] for i in iter_bits(mask))
        extensions.append(ids)
        conclusions.append(f.ordered(by_id[i].conclusion for i in ids))
    return ViewResult(column=column, applicable=True, extensions=tuple(extensions), conclusions=tuple(conclusions))


def argument_graphs(f: Framework, config: EngineConfig = DEFAULT_CONFIG) -> tuple[tuple[StructuredArgument, ...], dict]:
    """Arguments of a flat framework and every argument-level graph by column name."""
    args, attacks = build_arguments(f, config)
    graphs: dict = {}
    for suffix, principle in _PRINCIPLE_SUFFIX.items():
        lifted = argument_preorder(args, principle, f.pref)
        graphs[f"paf-{suffix}"] = repair_paf(Paf(args=attacks.nodes, attacks=attacks.edges, pref=lifted))
        graphs[f"aspic-{suffix}"] = defeat_graph(args, attacks, principle, f.pref)
    graphs["dung-normal"] = dung_normal_graph(args, f.pref)
    graphs["attacks"] = attacks
    return args, graphs


def compare_views(
    f: Framework,
    sem: SemanticsName | str,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[ViewResult]:
    """One :class:`ViewResult` per entry of :data:`COMPARE_COLUMNS`."""
    sem = SemanticsName.parse(sem)
    results = []
    for column, mode in (("aba", Mode.PLAIN), ("abaplus", Mode.PLUS)):
        report = Enumerator(f, mode, config).report(sem)
        results.append(ViewResult(
            column=column,
            applicable=True,
            extensions=report.extensions,
            conclusions=report.conclusions_per_extension,
        ))
    if not is_flat(f):
        note = "framework is not flat"
        results.extend(_not_applicable(column, note) for column in COMPARE_COLUMNS[2:])
        return results
    args, graphs = argument_graphs(f, config)
    for column in ARGUMENT_COLUMNS:
        results.append(_argument_view(f, column, graphs[column], args, sem, config))
    report = p_aba_extensions(f, f.lpref, sem, config)
    results.append(ViewResult(
        column="p-aba",
        applicable=True,
        extensions=report.extensions,
        conclusions=report.conclusions_per_extension,
    ))
    LOGGER.debug("Compared %d views under %s", len(results), sem.value)
    return results
