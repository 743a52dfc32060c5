"""Principles over the extensions of a framework, and the rationality postulates."""

from __future__ import annotations

import logging
from enum import Enum
from typing import Iterable

from ..core.attacks import Mode
from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.deduction import conclusions
from ..core.framework import Framework
from ..core.semantics import Enumerator, SemanticsName
from ..utils import bit, iter_bits
from .verdict import Complement, Verdict, VerdictStatus

LOGGER = logging.getLogger(__name__)


class Principle(Enum):
    CONFLICT_PRESERVATION = 1
    EMPTY_PREFERENCES = 2
    MAXIMAL_ELEMENTS = 3
    RATIONALITY = 4
    CLASSICAL_CONSISTENCY = 5

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value: "Principle | int | str") -> "Principle":
        if isinstance(value, Principle):
            return value
        text = str(value).strip()
        if text.isdigit():
            return cls(int(text))
        try:
            return cls[text.upper().replace("-", "_")]
        except KeyError:
            raise ValueError(f"unknown principle: {value}") from None


def is_directly_consistent(f: Framework, sentences: Iterable[str]) -> bool:
    """No assumption ``ψ`` in ``sentences`` has its contrary in ``sentences`` too."""
    present = set(sentences)
    return not any(a in present and c in present for a, c in zip(f.assumptions, f.contraries))


def is_indirectly_consistent(f: Framework, assumptions: Iterable[str]) -> bool:
    return is_directly_consistent(f, conclusions(f, assumptions))


def _extension_names(f: Framework, masks: list[int]) -> list[tuple[str, ...]]:
    return [f.names_of(m) for m in masks]


def check_postulates(
    f: Framework,
    sem: SemanticsName | str,
    config: EngineConfig = DEFAULT_CONFIG,
    enumerator: Enumerator | None = None,
    subject: str = "postulates",
) -> Verdict:
    """Closure, direct and indirect Consistency on every <-σ extension."""
    enumerator = enumerator or Enumerator(f, Mode.PLUS, config)
    witnesses = []
    for ext in _extension_names(f, enumerator.masks(sem)):
        derived = conclusions(f, ext)
        if conclusions(f, derived) != derived:
            witnesses.append({"postulate": "closure", "extension": list(ext)})
        if not is_directly_consistent(f, ext):
            witnesses.append({"postulate": "consistency", "extension": list(ext)})
        if not is_indirectly_consistent(f, ext):
            witnesses.append({"postulate": "indirect_consistency", "extension": list(ext)})
    return Verdict.from_witnesses(subject, witnesses)


def _conflict_preservation(f: Framework, masks: list[int], config: EngineConfig) -> list[dict]:
    plain = Enumerator(f, Mode.PLAIN, config).table
    witnesses = []
    for mask in masks:
        for i in iter_bits(mask):
            hit = plain.normal[bit(i)] & mask
            for j in iter_bits(hit):
                witnesses.append({
                    "extension": list(f.names_of(mask)),
                    "attacker": f.assumptions[i],
                    "target": f.assumptions[j],
                })
    return witnesses


def _empty_preferences(f: Framework, sem: SemanticsName, config: EngineConfig) -> list[dict]:
    stripped = Enumerator(f.without_preferences(), Mode.PLUS, config).masks(sem)
    plain = Enumerator(f, Mode.PLAIN, config).masks(sem)
    witnesses = [{"only_preference_aware": list(f.names_of(m))} for m in stripped if m not in plain]
    witnesses += [{"only_plain": list(f.names_of(m))} for m in plain if m not in stripped]
    return witnesses


def _maximal_elements(f: Framework, masks: list[int], enumerator: Enumerator) -> Verdict:
    subject = Principle.MAXIMAL_ELEMENTS.label
    incomparable = f.pref.incomparable_pair()
    if incomparable is not None:
        return Verdict(
            subject=subject,
            status=VerdictStatus.NOT_APPLICABLE,
            notes=f"preference is not total: {incomparable[0]} and {incomparable[1]} are incomparable",
        )
    maximal = f.mask_of(f.pref.maximal())
    if not enumerator.table.is_closed(maximal) or not enumerator.conflict_free(maximal):
        return Verdict(
            subject=subject,
            status=VerdictStatus.NOT_APPLICABLE,
            notes=f"maximal assumptions {list(f.names_of(maximal))} are not closed and <-conflict-free",
        )
    witnesses = [
        {
            "extension": list(f.names_of(mask)),
            "maximal": list(f.names_of(maximal)),
            "missing": list(f.names_of(maximal & ~mask)),
        }
        for mask in masks
        if maximal & ~mask
    ]
    return Verdict.from_witnesses(subject, witnesses)


def _classical_consistency(f: Framework, masks: list[int], c: Complement) -> list[dict]:
    witnesses = []
    for mask in masks:
        derived = conclusions(f, f.names_of(mask))
        reported: set = set()
        for sentence in f.ordered(derived):
            negation = c(sentence)
            if negation in derived and negation not in reported:
                reported.add(sentence)
                witnesses.append({"extension": list(f.names_of(mask)), "sentence": sentence})
    return witnesses


def check_principle(
    f: Framework,
    which: Principle | int | str,
    sem: SemanticsName | str,
    config: EngineConfig = DEFAULT_CONFIG,
    complement: Complement | None = None,
) -> Verdict:
    """Evaluate one principle against the <-σ extensions of ``f``."""
    which = Principle.parse(which)
    sem = SemanticsName.parse(sem)
    enumerator = Enumerator(f, Mode.PLUS, config)
    masks = enumerator.masks(sem)
    LOGGER.debug("Checking %s under %s over %d extensions", which.label, sem.value, len(masks))
    if which is Principle.CONFLICT_PRESERVATION:
        return Verdict.from_witnesses(which.label, _conflict_preservation(f, masks, config))
    if which is Principle.EMPTY_PREFERENCES:
        return Verdict.from_witnesses(which.label, _empty_preferences(f, sem, config))
    if which is Principle.MAXIMAL_ELEMENTS:
        return _maximal_elements(f, masks, enumerator)
    if which is Principle.RATIONALITY:
        return check_postulates(f, sem, config, enumerator=enumerator, subject=which.label)
    return Verdict.from_witnesses(
        which.label, _classical_consistency(f, masks, complement or Complement())
    )
