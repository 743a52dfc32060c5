"""Finite abstract argumentation (Dung) frameworks."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from ..utils import bit, is_subset, iter_bits, maximal_masks
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import LimitError
from .semantics import SemanticsName

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class AAGraph:
    """Arguments with an attack (or defeat) relation; node order is canonical."""

    nodes: tuple[str, ...]
    edges: frozenset = frozenset()

    @classmethod
    def build(cls, nodes: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> "AAGraph":
        nodes = tuple(dict.fromkeys(nodes))
        known = set(nodes)
        edges = frozenset(edges)
        for src, dst in edges:
            if src not in known or dst not in known:
                raise ValueError(f"edge ({src}, {dst}) mentions an unknown node")
        return cls(nodes=nodes, edges=edges)

    def attackers_of(self, node: str) -> tuple[str, ...]:
        return tuple(src for src in self.nodes if (src, node) in self.edges)

    def sorted_edges(self) -> list[tuple[str, str]]:
        rank = {name: i for i, name in enumerate(self.nodes)}
        return sorted(self.edges, key=lambda e: (rank[e[0]], rank[e[1]]))


class AbstractEnumerator:
    """Exact Dung semantics over every subset of the nodes."""

    def __init__(self, g: AAGraph, config: EngineConfig = DEFAULT_CONFIG):
        size = len(g.nodes)
        if size > config.argument_cap:
            raise LimitError("argument cap", config.argument_cap, f"{size} arguments")
        self.graph = g
        self.size = size
        index = {name: i for i, name in enumerate(g.nodes)}
        out_single = [0] * size
        self.in_single = [0] * size
        for src, dst in g.edges:
            out_single[index[src]] |= bit(index[dst])
            self.in_single[index[dst]] |= bit(index[src])
        self.full = (1 << size) - 1
        count = 1 << size
        self.out = [0] * count
        for mask in range(1, count):
            low = mask & -mask
            self.out[mask] = self.out[mask ^ low] | out_single[low.bit_length() - 1]
        self._cache: dict = {}

    def defended(self, mask: int) -> int:
        attacked = self.out[mask]
        result = 0
        for i, attackers in enumerate(self.in_single):
            if is_subset(attackers, attacked):
                result |= bit(i)
        return result

    def grounded(self) -> int:
        current = 0
        while True:
            nxt = self.defended(current)
            if nxt == current:
                return current
            current = nxt

    def masks(self, sem: SemanticsName | str) -> list[int]:
        sem = SemanticsName.parse(sem)
        if sem in self._cache:
            return self._cache[sem]
        out = self.out
        if sem is SemanticsName.ADMISSIBLE:
            masks = [
                m for m in range(len(out))
                if not out[m] & m and is_subset(m, self.defended(m))
            ]
        elif sem is SemanticsName.PREFERRED:
            masks = maximal_masks(self.masks(SemanticsName.ADMISSIBLE))
        elif sem is SemanticsName.COMPLETE:
            masks = [m for m in self.masks(SemanticsName.ADMISSIBLE) if self.defended(m) == m]
        elif sem is SemanticsName.STABLE:
            masks = [m for m in range(len(out)) if not out[m] & m and out[m] == self.full & ~m]
        elif sem is SemanticsName.WELL_FOUNDED:
            masks = [self.grounded()]
        else:
            meet = self.full
            for m in self.masks(SemanticsName.PREFERRED):
                meet &= m
            masks = maximal_masks(m for m in self.masks(SemanticsName.ADMISSIBLE) if is_subset(m, meet))
        masks = sorted(masks)
        self._cache[sem] = masks
        LOGGER.debug("AA %s over %d nodes: %d extensions", sem.value, self.size, len(masks))
        return masks

    def extensions(self, sem: SemanticsName | str) -> list[frozenset]:
        nodes = self.graph.nodes
        return [frozenset(nodes[i] for i in iter_bits(m)) for m in self.masks(sem)]


def aa_extensions(
    g: AAGraph,
    sem: SemanticsName | str,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[frozenset]:
    """Dung extensions of ``g``, sorted by node-order bitmask."""
    return AbstractEnumerator(g, config).extensions(sem)
