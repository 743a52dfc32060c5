"""p_ABA: preferences over the language select among plain extensions."""

from __future__ import annotations

import logging
from typing import Sequence

from ..core.attacks import Mode
from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.deduction import conclusions, is_flat
from ..core.errors import FlatnessError
from ..core.framework import Framework, Preorder
from ..core.semantics import Enumerator, ExtensionReport, SemanticsName, display_name
from ..utils import transitive_closure

LOGGER = logging.getLogger(__name__)

P_ABA_MODE = "p_aba"


def _prefers(f: Framework, lp: Preorder, low: Sequence[str], high: Sequence[str]) -> bool:
    low_cn, high_cn = conclusions(f, low), conclusions(f, high)
    gained = high_cn - low_cn
    lost = low_cn - high_cn
    for phi in gained:
        if any(lp.less_equal(psi, phi) for psi in lost) and not any(lp.less(phi, chi) for chi in lost):
            return True
    return False


def p_aba_relation(f: Framework, lp: Preorder, family: Sequence[Sequence[str]]) -> frozenset:
    """Index pairs ``(i, j)`` with ``family[i] ⊑ family[j]``, reflexively and transitively closed."""
    family = [tuple(ext) for ext in family]
    pairs = {(i, i) for i in range(len(family))}
    for i, low in enumerate(family):
        for j, high in enumerate(family):
            if i != j and _prefers(f, lp, low, high):
                pairs.add((i, j))
    return transitive_closure(pairs)


def p_aba_prefers(
    f: Framework,
    lp: Preorder,
    e1: Sequence[str],
    e2: Sequence[str],
    family: Sequence[Sequence[str]] | None = None,
) -> bool:
    """``e1 ⊑ e2`` over ``family`` (default: just the two extensions)."""
    family = [tuple(ext) for ext in (family if family is not None else (e1, e2))]
    keys = [frozenset(ext) for ext in family]
    i, j = keys.index(frozenset(e1)), keys.index(frozenset(e2))
    return (i, j) in p_aba_relation(f, lp, family)


def p_aba_extensions(
    f: Framework,
    lp: Preorder | None,
    sem: SemanticsName | str,
    config: EngineConfig = DEFAULT_CONFIG,
) -> ExtensionReport:
    """The ⊑-maximal plain σ extensions (P-extensions)."""
    if not is_flat(f):
        raise FlatnessError("p_ABA is defined over flat frameworks")
    sem = SemanticsName.parse(sem)
    lp = lp if lp is not None else Preorder(carrier=f.sentences)
    plain = Enumerator(f, Mode.PLAIN, config).report(sem)
    relation = p_aba_relation(f, lp, plain.extensions)
    count = len(plain.extensions)
    keep = [
        i for i in range(count)
        if all((j, i) in relation for j in range(count) if (i, j) in relation)
    ]
    LOGGER.debug("p_ABA %s: %d of %d extensions kept", sem.value, len(keep), count)
    return ExtensionReport(
        semantics=sem,
        mode=P_ABA_MODE,
        extensions=tuple(plain.extensions[i] for i in keep),
        conclusions_per_extension=tuple(plain.conclusions_per_extension[i] for i in keep),
        name=display_name(sem, True),
    )
