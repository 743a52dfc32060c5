"""The ABA attack relation and the preference-aware ABA+ attack relation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from ..utils import bit, iter_bits
from .config import DEFAULT_CONFIG, EngineConfig
from .deduction import closure_mask, conclusions, conclusions_of_mask, tainted_derivable_mask
from .errors import LimitError
from .framework import AssumptionSet, Framework

LOGGER = logging.getLogger(__name__)


class Mode(str, Enum):
    PLAIN = "plain"
    PLUS = "plus"

    @classmethod
    def parse(cls, value: "Mode | str") -> "Mode":
        if isinstance(value, Mode):
            return value
        lowered = str(value).strip().lower()
        if lowered == "preference_aware":
            return cls.PLUS
        return cls(lowered)


@dataclass(frozen=True)
class AttackFlags:
    normal: bool = False
    reverse: bool = False

    def __bool__(self) -> bool:
        return self.normal or self.reverse


@dataclass(frozen=True)
class AttackEdge:
    attacker: AssumptionSet
    target: AssumptionSet
    plain: bool
    normal: bool
    reverse: bool

    @property
    def plus(self) -> bool:
        return self.normal or self.reverse

    @property
    def kind(self) -> str:
        if self.normal and self.reverse:
            return "both"
        if self.normal:
            return "normal"
        if self.reverse:
            return "reverse"
        return "plain" if self.plain else "none"


def aba_attacks(f: Framework, a: Iterable[str], b: Iterable[str]) -> bool:
    """A attacks B iff A deduces the contrary of some member of B."""
    derived = conclusions(f, a)
    return any(f.contrary_of(beta) in derived for beta in b)


def plus_attacks(f: Framework, a: Iterable[str], b: Iterable[str]) -> AttackFlags:
    """Normal and reverse <-attack flags of ``a`` against ``b``."""
    a_mask, b_mask = f.mask_of(a), f.mask_of(b)
    below = f.strictly_below_masks
    normal = any(
        f.contrary_of(f.assumptions[i]) in conclusions_of_mask(f, a_mask & ~below[i])
        for i in iter_bits(b_mask)
    )
    reverse = any(
        tainted_derivable_mask(f, b_mask, b_mask & below[i], f.contrary_of(f.assumptions[i]))
        for i in iter_bits(a_mask)
    )
    return AttackFlags(normal=normal, reverse=reverse)


def attack_edge(f: Framework, a: Iterable[str], b: Iterable[str]) -> AttackEdge:
    a, b = tuple(a), tuple(b)
    flags = plus_attacks(f, a, b)
    return AttackEdge(
        attacker=f.names_of(f.mask_of(a)),
        target=f.names_of(f.mask_of(b)),
        plain=aba_attacks(f, a, b),
        normal=flags.normal,
        reverse=flags.reverse,
    )


def check_assumption_cap(f: Framework, config: EngineConfig) -> None:
    if len(f.assumptions) > config.assumption_cap:
        raise LimitError(
            "assumption cap",
            config.assumption_cap,
            f"{len(f.assumptions)} assumptions would need {2 ** len(f.assumptions)} subsets",
        )


class AttackTable:
    """Attack relation over all subsets, precomputed per subset.

    ``normal[M]`` is the mask of assumptions whose contrary ``M`` deduces
    (ignoring members of ``M`` strictly below each target in plus mode);
    ``exposed[M]`` is the mask of assumptions ``α`` whose contrary ``M``
    deduces through some member strictly below ``α``. Then
    ``B`` attacks ``A`` iff ``normal[B] & A`` or ``B & exposed[A]``.
    """

    def __init__(self, f: Framework, mode: Mode | str = Mode.PLUS, config: EngineConfig = DEFAULT_CONFIG):
        check_assumption_cap(f, config)
        self.framework = f
        self.mode = Mode.parse(mode)
        size = 1 << len(f.assumptions)
        self.normal = [0] * size
        self.exposed = [0] * size
        self.closure = [0] * size
        contraries = f.contraries
        below = f.strictly_below_masks
        preference_aware = self.mode is Mode.PLUS and not f.pref.is_empty
        for mask in range(size):
            self.closure[mask] = closure_mask(f, mask)
            derived = conclusions_of_mask(f, mask)
            targets = 0
            for i, contrary in enumerate(contraries):
                if contrary not in derived:
                    continue
                if preference_aware and mask & below[i]:
                    if contrary in conclusions_of_mask(f, mask & ~below[i]):
                        targets |= bit(i)
                    continue
                targets |= bit(i)
            self.normal[mask] = targets
            if preference_aware:
                exposed = 0
                for i, contrary in enumerate(contraries):
                    if contrary in derived and mask & below[i]:
                        if tainted_derivable_mask(f, mask, mask & below[i], contrary):
                            exposed |= bit(i)
                self.exposed[mask] = exposed
        self.closed_masks = [m for m in range(size) if self.closure[m] == m]
        LOGGER.debug(
            "Attack table (%s): %d subsets, %d closed", self.mode.value, size, len(self.closed_masks)
        )

    @property
    def size(self) -> int:
        return len(self.normal)

    def attacks(self, attacker: int, target: int) -> bool:
        return bool(self.normal[attacker] & target) or bool(attacker & self.exposed[target])

    def flags(self, attacker: int, target: int) -> AttackFlags:
        return AttackFlags(
            normal=bool(self.normal[attacker] & target),
            reverse=bool(attacker & self.exposed[target]),
        )

    def is_closed(self, mask: int) -> bool:
        return self.closure[mask] == mask
