"""Axioms over deductions: (Weak) Contraposition, Consistency, Negation."""

from __future__ import annotations

import logging

from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.deduction import SupportFamily, support_families
from ..core.framework import Framework
from ..utils import bit, is_subset, iter_bits
from .verdict import Complement, Verdict

LOGGER = logging.getLogger(__name__)


def _has_support_within(family: SupportFamily, sentence: str, allowed: int) -> bool:
    return any(is_subset(s, allowed) for s in family.masks(sentence))


def _minimal_below(f: Framework, candidates: int) -> list[int]:
    """Indices in ``candidates`` with no other candidate strictly below them."""
    below = f.strictly_below_masks
    return [i for i in iter_bits(candidates) if not below[i] & candidates]


def check_wcp(f: Framework, config: EngineConfig = DEFAULT_CONFIG) -> Verdict:
    """Weak Contraposition.

    For a deduction ``S |- contrary(β)`` using some assumption below ``β``,
    some minimal such ``α`` must have ``contrary(α)`` deducible from
    ``(S - {α}) ∪ {β}``.
    """
    family = support_families(f, config)
    below = f.strictly_below_masks
    witnesses = []
    for j, beta in enumerate(f.assumptions):
        for support in sorted(family.masks(f.contrary_of(beta))):
            lesser = support & below[j]
            if not lesser:
                continue
            if not any(
                _has_support_within(family, f.contrary_of(f.assumptions[i]), (support & ~bit(i)) | bit(j))
                for i in _minimal_below(f, lesser)
            ):
                witnesses.append({"support": list(f.names_of(support)), "assumption": beta})
    LOGGER.debug("WCP: %d violations", len(witnesses))
    return Verdict.from_witnesses("weak_contraposition", witnesses)


def check_contraposition(f: Framework, config: EngineConfig = DEFAULT_CONFIG) -> Verdict:
    """Contraposition: every member of a support of ``contrary(β)`` can be swapped for ``β``."""
    family = support_families(f, config)
    witnesses = []
    for j, beta in enumerate(f.assumptions):
        for support in sorted(family.masks(f.contrary_of(beta))):
            for i in iter_bits(support):
                allowed = (support & ~bit(i)) | bit(j)
                if not _has_support_within(family, f.contrary_of(f.assumptions[i]), allowed):
                    witnesses.append({
                        "support": list(f.names_of(support)),
                        "assumption": beta,
                        "member": f.assumptions[i],
                    })
    return Verdict.from_witnesses("contraposition", witnesses)


def check_axiom_consistency(
    f: Framework,
    c: Complement | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Verdict:
    """No sentence and its complement are both deducible from the empty set."""
    c = c or Complement()
    family = support_families(f, config)
    witnesses = []
    reported: set = set()
    for sentence in f.sentences:
        negation = c(sentence)
        if sentence in reported or negation in reported:
            continue
        if 0 in family.masks(sentence) and 0 in family.masks(negation):
            reported.add(sentence)
            witnesses.append({"sentence": sentence, "complement": negation})
    return Verdict.from_witnesses("axiom_of_consistency", witnesses)


def check_axiom_negation(
    f: Framework,
    c: Complement | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Verdict:
    """Every non-empty support of ``φ`` holds some ``α`` whose contrary is ``-φ``."""
    c = c or Complement()
    family = support_families(f, config)
    witnesses = []
    for sentence in f.sentences:
        negation = c(sentence)
        for support in sorted(family.masks(sentence)):
            if not support:
                continue
            if not any(f.contraries[i] == negation for i in iter_bits(support)):
                witnesses.append({"sentence": sentence, "support": list(f.names_of(support))})
    return Verdict.from_witnesses("axiom_of_negation", witnesses)
