"""Extension enumeration for plain ABA and ABA+ frameworks.

Extensions are found by exact enumeration over closed subsets, in bitmask
order, against a precomputed :class:`AttackTable`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from ..utils import bit, is_subset, maximal_masks
from .attacks import AttackTable, Mode, aba_attacks, plus_attacks
from .config import DEFAULT_CONFIG, EngineConfig
from .deduction import conclusions_of_mask, is_flat
from .errors import FlatnessError
from .framework import AssumptionSet, Framework

LOGGER = logging.getLogger(__name__)


class SemanticsName(str, Enum):
    ADMISSIBLE = "admissible"
    PREFERRED = "preferred"
    COMPLETE = "complete"
    STABLE = "stable"
    WELL_FOUNDED = "well_founded"
    IDEAL = "ideal"

    @classmethod
    def parse(cls, value: "SemanticsName | str") -> "SemanticsName":
        if isinstance(value, SemanticsName):
            return value
        lowered = str(value).strip().lower().replace("-", "_")
        if lowered in ("grounded", "wellfounded"):
            return cls.WELL_FOUNDED
        try:
            return cls(lowered)
        except ValueError:
            raise ValueError(f"unknown semantics: {value}") from None


ALL_SEMANTICS = tuple(SemanticsName)


def display_name(sem: SemanticsName, flat: bool) -> str:
    """``grounded`` for flat frameworks, the enum value otherwise."""
    if sem is SemanticsName.WELL_FOUNDED and flat:
        return "grounded"
    return sem.value


@dataclass(frozen=True)
class ExtensionReport:
    semantics: SemanticsName
    mode: str
    extensions: tuple[AssumptionSet, ...]
    conclusions_per_extension: tuple[tuple[str, ...], ...]
    name: str = ""
    flags: dict = field(default_factory=dict)

    @property
    def exists(self) -> bool:
        return bool(self.extensions)

    def as_sets(self) -> list[frozenset]:
        return [frozenset(ext) for ext in self.extensions]


class Enumerator:
    """Semantics over one framework and attack mode, sharing one attack table."""

    def __init__(self, f: Framework, mode: Mode | str = Mode.PLUS, config: EngineConfig = DEFAULT_CONFIG):
        self.framework = f
        self.mode = Mode.parse(mode)
        self.table = AttackTable(f, self.mode, config)
        self._singleton_attackers: list[list[int]] | None = None
        self._cache: dict = {}

    # -- predicates over masks --------------------------------------------

    def conflict_free(self, mask: int) -> bool:
        return not self.table.attacks(mask, mask)

    def defends(self, defender: int, target: int) -> bool:
        table = self.table
        for attacker in table.closed_masks:
            if table.attacks(attacker, target) and not table.attacks(defender, attacker):
                return False
        return True

    @property
    def singleton_attackers(self) -> list[list[int]]:
        if self._singleton_attackers is None:
            table = self.table
            self._singleton_attackers = [
                [b for b in table.closed_masks if table.attacks(b, bit(i))]
                for i in range(len(self.framework.assumptions))
            ]
        return self._singleton_attackers

    def defended_assumptions(self, defender: int) -> int:
        """Mask of assumptions whose singleton ``defender`` defends."""
        table = self.table
        result = 0
        for i, attackers in enumerate(self.singleton_attackers):
            if all(table.attacks(defender, b) for b in attackers):
                result |= bit(i)
        return result

    def admissible(self, mask: int) -> bool:
        return self.table.is_closed(mask) and self.conflict_free(mask) and self.defends(mask, mask)

    # -- extension families ----------------------------------------------

    def _family(self, sem: SemanticsName) -> list[int]:
        if sem in self._cache:
            return self._cache[sem]
        table = self.table
        full = self.framework.full_mask
        if sem is SemanticsName.ADMISSIBLE:
            result = [m for m in table.closed_masks if self.admissible(m)]
        elif sem is SemanticsName.PREFERRED:
            result = maximal_masks(self._family(SemanticsName.ADMISSIBLE))
        elif sem is SemanticsName.COMPLETE:
            result = [
                m for m in self._family(SemanticsName.ADMISSIBLE)
                if is_subset(self.defended_assumptions(m), m)
            ]
        elif sem is SemanticsName.STABLE:
            result = [
                m for m in table.closed_masks
                if self.conflict_free(m) and is_subset(full & ~m, self._attacked_singletons(m))
            ]
        elif sem is SemanticsName.WELL_FOUNDED:
            complete = self._family(SemanticsName.COMPLETE)
            if complete:
                meet = full
                for m in complete:
                    meet &= m
                result = [meet]
            else:
                result = []
        else:
            preferred = self._family(SemanticsName.PREFERRED)
            meet = full
            for m in preferred:
                meet &= m
            result = maximal_masks(
                m for m in self._family(SemanticsName.ADMISSIBLE) if is_subset(m, meet)
            ) if preferred else []
        result = sorted(result)
        self._cache[sem] = result
        LOGGER.debug("%s/%s: %d extensions", sem.value, self.mode.value, len(result))
        return result

    def _attacked_singletons(self, mask: int) -> int:
        table = self.table
        attacked = table.normal[mask]
        if mask:
            for i in range(len(self.framework.assumptions)):
                if mask & table.exposed[bit(i)]:
                    attacked |= bit(i)
        return attacked

    def masks(self, sem: SemanticsName | str) -> list[int]:
        return list(self._family(SemanticsName.parse(sem)))

    def report(self, sem: SemanticsName | str) -> ExtensionReport:
        sem = SemanticsName.parse(sem)
        f = self.framework
        masks = self._family(sem)
        flags: dict = {}
        if sem is SemanticsName.WELL_FOUNDED and masks:
            flags = {"closed": self.table.is_closed(masks[0]), "admissible": self.admissible(masks[0])}
        return ExtensionReport(
            semantics=sem,
            mode=self.mode.value,
            extensions=tuple(f.names_of(m) for m in masks),
            conclusions_per_extension=tuple(
                f.ordered(conclusions_of_mask(f, m)) for m in masks
            ),
            name=display_name(sem, is_flat(f)),
            flags=flags,
        )


def is_conflict_free(f: Framework, e: Iterable[str], mode: Mode | str = Mode.PLUS) -> bool:
    """True iff ``e`` does not attack itself under ``mode``."""
    e = tuple(e)
    if Mode.parse(mode) is Mode.PLAIN:
        return not aba_attacks(f, e, e)
    return not plus_attacks(f, e, e)


def defends(
    f: Framework,
    e: Iterable[str],
    a: Iterable[str],
    mode: Mode | str = Mode.PLUS,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """True iff every closed attacker of ``a`` is attacked by ``e``."""
    enumerator = Enumerator(f, mode, config)
    return enumerator.defends(f.mask_of(e), f.mask_of(a))


def extensions(
    f: Framework,
    sem: SemanticsName | str,
    mode: Mode | str = Mode.PLUS,
    config: EngineConfig = DEFAULT_CONFIG,
) -> ExtensionReport:
    return Enumerator(f, mode, config).report(sem)


def grounded_fixpoint(f: Framework, config: EngineConfig = DEFAULT_CONFIG) -> AssumptionSet:
    """Least fixed point of ``S -> {α : S <-defends {α}}`` from the empty set."""
    if not is_flat(f):
        raise FlatnessError("grounded_fixpoint requires a flat framework")
    enumerator = Enumerator(f, Mode.PLUS, config)
    current = 0
    rounds = 0
    while True:
        nxt = enumerator.defended_assumptions(current)
        rounds += 1
        if nxt == current:
            break
        current = nxt
    LOGGER.debug("Grounded fixpoint after %d rounds", rounds)
    return f.names_of(current)
