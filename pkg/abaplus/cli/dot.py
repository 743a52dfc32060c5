"""Attack-graph export between assumption sets."""

from __future__ import annotations

import logging

from ..core.attacks import AttackEdge, AttackTable, Mode
from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.deduction import support_families
from ..core.framework import Framework
from ..utils import bit, popcount
from .actions import Scope

LOGGER = logging.getLogger(__name__)

_EDGE_STYLE = {
    "normal": 'kind="normal", style="solid"',
    "reverse": 'kind="reverse", style="dashed"',
    "both": 'kind="both", style="solid", arrowhead="normalnormal"',
}


def graph_nodes(
    f: Framework,
    scope: Scope | str = Scope.SUPPORTS,
    include_trivial: bool = False,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[int]:
    """Assumption-set masks shown in the graph, ordered by size then bitmask."""
    scope = Scope(scope)
    full = f.full_mask
    if scope is Scope.ALL:
        masks = set(range(full + 1))
    else:
        family = support_families(f, config)
        masks = {bit(i) for i in range(len(f.assumptions))}
        for sentence in f.sentences:
            masks.update(family.masks(sentence))
    if not include_trivial:
        masks.discard(0)
        masks.discard(full)
    return sorted(masks, key=lambda m: (popcount(m), m))


def attack_edges(
    f: Framework,
    scope: Scope | str = Scope.SUPPORTS,
    include_trivial: bool = False,
    config: EngineConfig = DEFAULT_CONFIG,
) -> tuple[list[int], list[AttackEdge]]:
    """Nodes and the <-attacks among them, with plain/normal/reverse flags."""
    nodes = graph_nodes(f, scope, include_trivial, config)
    plus = AttackTable(f, Mode.PLUS, config)
    plain = AttackTable(f, Mode.PLAIN, config)
    edges = []
    for src in nodes:
        for dst in nodes:
            flags = plus.flags(src, dst)
            is_plain = plain.attacks(src, dst)
            if flags or is_plain:
                edges.append(AttackEdge(
                    attacker=f.names_of(src),
                    target=f.names_of(dst),
                    plain=is_plain,
                    normal=flags.normal,
                    reverse=flags.reverse,
                ))
    LOGGER.debug("Attack graph: %d nodes, %d edges", len(nodes), len(edges))
    return nodes, edges


def set_label(names, separator: str = ",") -> str:
    return "{" + separator.join(names) + "}"


def export_dot(
    f: Framework,
    scope: Scope | str = Scope.SUPPORTS,
    include_trivial: bool = False,
    config: EngineConfig = DEFAULT_CONFIG,
) -> str:
    """DOT text: solid edges are normal attacks, dashed are reverse, ``both`` marks double-tipped ones."""
    nodes, edges = attack_edges(f, scope, include_trivial, config)
    dot = "digraph abaplus {\n"
    dot += "    rankdir=LR;\n"
    dot += "    node [shape=ellipse];\n"
    for mask in nodes:
        dot += f'    "{set_label(f.names_of(mask))}";\n'
    for edge in edges:
        if not edge.plus:
            continue
        dot += (
            f'    "{set_label(edge.attacker)}" -> "{set_label(edge.target)}"'
            f" [{_EDGE_STYLE[edge.kind]}];\n"
        )
    dot += "}\n"
    return dot
