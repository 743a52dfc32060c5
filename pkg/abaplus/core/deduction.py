"""Deduction engine: Cn, Cl, flatness, exact support families.

A support is the exact set of assumption-labelled leaves of a deduction
tree. Supports are handled as bitmasks over ``Framework.assumptions``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .config import DEFAULT_CONFIG, EngineConfig
from .errors import CapacityError
from .framework import AssumptionSet, Framework

LOGGER = logging.getLogger(__name__)


def conclusions(f: Framework, e: Iterable[str]) -> frozenset:
    """Cn(e): least set containing ``e`` and closed under the rules."""
    watchers, sizes = f.body_index
    derived = set(e)
    missing = list(sizes)
    agenda = []
    for i, size in enumerate(sizes):
        if size == 0:
            agenda.append(f.rules[i].head)
    for token in derived:
        for i in watchers.get(token, ()):
            missing[i] -= 1
            if missing[i] == 0:
                agenda.append(f.rules[i].head)
    while agenda:
        head = agenda.pop()
        if head in derived:
            continue
        derived.add(head)
        for i in watchers.get(head, ()):
            missing[i] -= 1
            if missing[i] == 0:
                agenda.append(f.rules[i].head)
    return frozenset(derived)


def conclusions_of_mask(f: Framework, mask: int) -> frozenset:
    return conclusions(f, f.names_of(mask))


def closure_mask(f: Framework, mask: int) -> int:
    derived = conclusions_of_mask(f, mask)
    return f.mask_of(a for a in f.assumptions if a in derived)


def closure(f: Framework, e: Iterable[str]) -> AssumptionSet:
    """Cl(e) = Cn(e) ∩ A, in declaration order."""
    return f.names_of(closure_mask(f, f.mask_of(e)))


def is_closed(f: Framework, e: Iterable[str]) -> bool:
    mask = f.mask_of(e)
    return closure_mask(f, mask) == mask


def is_flat(f: Framework) -> bool:
    """True iff no assumption heads a rule.

    This implies every assumption set is closed. The converse fails only for
    idle rules such as ``α <- α``, which still count as non-flat.
    """
    return not any(f.is_assumption(rule.head) for rule in f.rules)


def every_set_closed(f: Framework) -> bool:
    """Subset definition of flatness: no ``α`` is deducible from ``A - {α}``.

    Cn is monotone, so checking the co-singletons decides all subsets.
    """
    full = f.full_mask
    return all(
        f.assumptions[i] not in conclusions_of_mask(f, full & ~(1 << i))
        for i in range(len(f.assumptions))
    )


@dataclass(frozen=True)
class SupportFamily:
    """Exact supports per sentence, plus the number of rounds to the fixed point."""

    framework: Framework
    families: Mapping[str, frozenset]
    rounds: int

    def masks(self, sentence: str) -> frozenset:
        return self.families.get(sentence, frozenset())

    def supports(self, sentence: str) -> tuple[AssumptionSet, ...]:
        return tuple(self.framework.names_of(m) for m in sorted(self.masks(sentence)))

    def derivable(self, sentence: str) -> bool:
        return bool(self.masks(sentence))

    def __getitem__(self, sentence: str) -> frozenset:
        return frozenset(frozenset(s) for s in self.supports(sentence))


def _rule_unions(body_families: list[frozenset], cap: int, head: str) -> set:
    unions = {0}
    for family in body_families:
        unions = {u | s for u in unions for s in family}
        if len(unions) > cap:
            raise CapacityError("support cap", cap, f"supports of {head}")
    return unions


def support_families(f: Framework, config: EngineConfig = DEFAULT_CONFIG) -> SupportFamily:
    """Least fixed point over (sentence, support) pairs, computed in rounds.

    Round k holds the supports of deduction trees with at most k levels of
    rule applications; each round reads only the previous one.
    """
    return _support_families(f, config.support_cap)


@lru_cache(maxsize=64)
def _support_families(f: Framework, cap: int) -> SupportFamily:
    leaves = {a: frozenset({1 << i}) for i, a in enumerate(f.assumptions)}
    current: dict = dict(leaves)
    rounds = 0
    while True:
        nxt: dict = {key: set(value) for key, value in leaves.items()}
        for rule in f.rules:
            body_families = [current.get(token, frozenset()) for token in rule.body]
            if any(not fam for fam in body_families):
                continue
            target = nxt.setdefault(rule.head, set())
            target |= _rule_unions(body_families, cap, rule.head)
            if len(target) > cap:
                raise CapacityError("support cap", cap, f"supports of {rule.head}")
        frozen = {key: frozenset(value) for key, value in nxt.items() if value}
        rounds += 1
        if frozen == current:
            break
        current = frozen
    LOGGER.debug("Support families stable after %d rounds (%d sentences)", rounds, len(current))
    return SupportFamily(framework=f, families=current, rounds=max(rounds - 1, 0))


def tainted_derivable(
    f: Framework,
    base: Iterable[str],
    taint: Iterable[str],
    phi: str,
) -> bool:
    """True iff some deduction of ``phi`` uses only ``base`` leaves and at least one ``taint`` leaf."""
    return tainted_derivable_mask(f, f.mask_of(base), f.mask_of(taint), phi)


def tainted_derivable_mask(f: Framework, base: int, taint: int, phi: str) -> bool:
    taint &= base
    if not taint:
        return False
    plain = conclusions_of_mask(f, base)
    if phi not in plain:
        return False
    tainted = set(f.names_of(taint))
    changed = True
    while changed and phi not in tainted:
        changed = False
        for rule in f.rules:
            if rule.head in tainted or not rule.body:
                continue
            if all(token in plain for token in rule.body) and any(token in tainted for token in rule.body):
                tainted.add(rule.head)
                changed = True
    return phi in tainted


def derivation_oracle(
    f: Framework,
    phi: str,
    depth_cap: int,
    config: EngineConfig = DEFAULT_CONFIG,
) -> frozenset:
    """Leaf-assumption sets of every deduction tree for ``phi`` up to ``depth_cap`` rule levels.

    Brute-force tree expansion, independent of :func:`support_families`;
    meant as a test oracle.
    """
    if depth_cap < 1:
        raise ValueError("depth_cap must be >= 1")
    budget = config.oracle_node_budget
    expanded = 0
    memo: dict = {}

    def trees(sentence: str, depth: int) -> frozenset:
        nonlocal expanded
        key = (sentence, depth)
        if key in memo:
            return memo[key]
        found: set = set()
        if f.is_assumption(sentence):
            found.add(f.mask_of((sentence,)))
        if depth > 0:
            for rule in f.rules_by_head.get(sentence, ()):
                children = [trees(token, depth - 1) for token in rule.body]
                for combo in itertools.product(*children):
                    expanded += 1
                    if expanded > budget:
                        raise CapacityError("oracle node budget", budget, f"expanding {phi}")
                    leaves = 0
                    for mask in combo:
                        leaves |= mask
                    found.add(leaves)
        memo[key] = frozenset(found)
        return memo[key]

    return frozenset(frozenset(f.names_of(m)) for m in trees(phi, depth_cap))
