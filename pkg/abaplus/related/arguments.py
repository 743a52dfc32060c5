"""Argument-level view of flat frameworks.

Each argument pairs an exact support with a conclusion. Argument A attacks
B when A concludes the contrary of an assumption in B's support. Attacks
turn into defeats by comparing the attacker against the attacked premise,
lifting the assumption preference with the Elitist, Disjoint Elitist or
Democratic principle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from ..constants import ARGUMENT_TURNSTILE
from ..core.abstract import AAGraph
from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.deduction import is_flat, support_families
from ..core.errors import FlatnessError
from ..core.framework import AssumptionSet, Framework, Preorder

LOGGER = logging.getLogger(__name__)


class OrderingPrinciple(str, Enum):
    ELITIST = "eli"
    DISJOINT_ELITIST = "deli"
    DEMOCRATIC = "dem"

    @classmethod
    def parse(cls, value: "OrderingPrinciple | str") -> "OrderingPrinciple":
        if isinstance(value, OrderingPrinciple):
            return value
        return cls(str(value).strip().lower())


@dataclass(frozen=True)
class StructuredArgument:
    """``support |- conclusion``; ``undermines`` lists assumptions whose contrary is the conclusion."""

    id: str
    support: AssumptionSet
    conclusion: str
    undermines: AssumptionSet = ()


@dataclass(frozen=True)
class OrderFlags:
    strictly_less: bool
    leq: bool


def argument_id(support: Sequence[str], conclusion: str) -> str:
    if not support:
        return f"{ARGUMENT_TURNSTILE} {conclusion}"
    return f"{','.join(support)} {ARGUMENT_TURNSTILE} {conclusion}"


def build_arguments(
    f: Framework,
    config: EngineConfig = DEFAULT_CONFIG,
) -> tuple[tuple[StructuredArgument, ...], AAGraph]:
    """All arguments of a flat framework and their attack graph."""
    if not is_flat(f):
        raise FlatnessError("arguments are only built for flat frameworks")
    family = support_families(f, config)
    undermined: dict = {}
    for assumption, contrary in zip(f.assumptions, f.contraries):
        undermined.setdefault(contrary, []).append(assumption)
    args = []
    for sentence in f.sentences:
        for support in family.supports(sentence):
            args.append(StructuredArgument(
                id=argument_id(support, sentence),
                support=support,
                conclusion=sentence,
                undermines=tuple(undermined.get(sentence, ())),
            ))
    edges = {
        (a.id, b.id)
        for a in args
        for b in args
        if set(a.undermines) & set(b.support)
    }
    LOGGER.debug("Built %d arguments, %d attacks", len(args), len(edges))
    return tuple(args), AAGraph.build((a.id for a in args), edges)


def _elitist_less(left: Iterable[str], right: Iterable[str], pref: Preorder) -> bool:
    right = tuple(right)
    return any(all(pref.less(x, y) for y in right) for x in left)


def _democratic_leq(left: Iterable[str], right: Iterable[str], pref: Preorder) -> bool:
    right = tuple(right)
    return all(any(pref.less_equal(x, y) for y in right) for x in left)


def compare_supports(
    principle: OrderingPrinciple | str,
    left: Sequence[str],
    right: Sequence[str],
    pref: Preorder,
) -> OrderFlags:
    principle = OrderingPrinciple.parse(principle)
    if principle is OrderingPrinciple.DEMOCRATIC:
        leq = _democratic_leq(left, right, pref)
        return OrderFlags(strictly_less=leq and not _democratic_leq(right, left, pref), leq=leq)
    if principle is OrderingPrinciple.DISJOINT_ELITIST:
        left_only = [x for x in left if x not in right]
        right_only = [y for y in right if y not in left]
        less = _elitist_less(left_only, right_only, pref)
    else:
        less = _elitist_less(left, right, pref)
    return OrderFlags(strictly_less=less, leq=less or set(left) == set(right))


def argument_order(
    principle: OrderingPrinciple | str,
    a: StructuredArgument,
    b: StructuredArgument,
    pref: Preorder,
) -> OrderFlags:
    return compare_supports(principle, a.support, b.support, pref)


def argument_preorder(
    args: Sequence[StructuredArgument],
    principle: OrderingPrinciple | str,
    pref: Preorder,
) -> Preorder:
    """Lift ``pref`` to a preorder over argument ids (Eli/DEli use their strict pairs)."""
    principle = OrderingPrinciple.parse(principle)
    pairs = []
    for a in args:
        for b in args:
            if a.id == b.id:
                continue
            flags = argument_order(principle, a, b, pref)
            if (flags.leq if principle is OrderingPrinciple.DEMOCRATIC else flags.strictly_less):
                pairs.append((a.id, b.id))
    return Preorder.from_pairs((a.id for a in args), pairs)


def defeat_graph(
    args: Sequence[StructuredArgument],
    attacks: AAGraph,
    principle: OrderingPrinciple | str,
    pref: Preorder,
) -> AAGraph:
    """Keep A -> B when A is not strictly below the premise of B it undermines."""
    principle = OrderingPrinciple.parse(principle)
    by_id = {a.id: a for a in args}
    defeats = set()
    for src, dst in attacks.edges:
        attacker, target = by_id[src], by_id[dst]
        premises = [beta for beta in attacker.undermines if beta in target.support]
        if any(
            not compare_supports(principle, attacker.support, (beta,), pref).strictly_less
            for beta in premises
        ):
            defeats.add((src, dst))
    return AAGraph.build(attacks.nodes, defeats)


def dung_normal_graph(args: Sequence[StructuredArgument], pref: Preorder) -> AAGraph:
    """A normal-attacks B on premise β when A concludes contrary(β) and no premise of A is below β."""
    edges = set()
    for a in args:
        for b in args:
            for beta in a.undermines:
                if beta in b.support and not any(pref.less(x, beta) for x in a.support):
                    edges.add((a.id, b.id))
                    break
    return AAGraph.build((a.id for a in args), edges)
