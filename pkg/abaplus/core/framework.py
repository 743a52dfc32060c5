"""Immutable framework model: rules, preorders and the ABA+ tuple."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from ..constants import CONTRARY_PREFIX, LEQ, RULE_ARROW
from ..utils import bit, iter_bits, transitive_closure

# An assumption set at the API surface: names in declaration order.
AssumptionSet = tuple


@dataclass(frozen=True)
class Rule:
    """A rule ``head <- body``; an empty body stands for ``head <- ⊤``."""

    head: str
    body: tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head} {RULE_ARROW}"
        return f"{self.head} {RULE_ARROW} {' '.join(self.body)}"


@dataclass(frozen=True)
class Preorder:
    """A transitive relation ``leq`` over ``carrier`` with derived strict part."""

    carrier: tuple[str, ...]
    leq: frozenset = frozenset()

    @classmethod
    def from_pairs(cls, carrier: Iterable[str], pairs: Iterable[tuple[str, str]] = ()) -> "Preorder":
        carrier = tuple(carrier)
        known = set(carrier)
        pairs = tuple(pairs)
        for a, b in pairs:
            if a not in known or b not in known:
                raise ValueError(f"preference pair ({a}, {b}) outside carrier")
        return cls(carrier=carrier, leq=transitive_closure(pairs))

    @cached_property
    def strict(self) -> frozenset:
        return frozenset((a, b) for a, b in self.leq if (b, a) not in self.leq)

    @property
    def is_empty(self) -> bool:
        return not self.leq

    def less_equal(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def less(self, a: str, b: str) -> bool:
        return (a, b) in self.strict

    @cached_property
    def _below(self) -> dict:
        below: dict = {item: set() for item in self.carrier}
        for a, b in self.strict:
            below[b].add(a)
        return {key: frozenset(value) for key, value in below.items()}

    def strictly_below(self, b: str) -> frozenset:
        """Elements ``a`` with ``a < b``."""
        return self._below.get(b, frozenset())

    def incomparable_pair(self) -> tuple[str, str] | None:
        """Return an incomparable pair of distinct elements, or None when total."""
        for i, a in enumerate(self.carrier):
            for b in self.carrier[i + 1:]:
                if (a, b) not in self.leq and (b, a) not in self.leq:
                    return (a, b)
        return None

    def maximal(self) -> tuple[str, ...]:
        """Elements with nothing strictly above them."""
        above = {a for a, _ in self.strict}
        return tuple(item for item in self.carrier if item not in above)


def synthesized_contrary(assumption: str) -> str:
    return f"{CONTRARY_PREFIX}{assumption}"


@dataclass(frozen=True)
class Framework:
    """An ABA+ framework (L, R, A, contrary, <=); plain ABA when ``pref`` is empty.

    ``sentences`` lists the language in canonical order: assumptions in
    declaration order first, then the other sentences by first appearance.
    """

    assumptions: tuple[str, ...]
    contraries: tuple[str, ...]
    rules: tuple[Rule, ...]
    pref: Preorder
    sentences: tuple[str, ...]
    lpref: Preorder | None = field(default=None)

    @classmethod
    def build(
        cls,
        assumptions: Iterable[str],
        contrary: Mapping[str, str] | None = None,
        rules: Iterable[Rule] = (),
        pref_pairs: Iterable[tuple[str, str]] = (),
        lpref_pairs: Iterable[tuple[str, str]] | None = None,
        extra_sentences: Iterable[str] = (),
    ) -> "Framework":
        """Validate inputs and assemble a framework.

        Assumptions lacking a contrary get ``_contrary_<name>``.
        """
        assumptions = tuple(assumptions)
        if not assumptions:
            raise ValueError("a framework needs at least one assumption")
        if len(set(assumptions)) != len(assumptions):
            raise ValueError("duplicate assumption declaration")
        contrary = dict(contrary or {})
        unknown = sorted(set(contrary) - set(assumptions))
        if unknown:
            raise ValueError(f"contrary given for non-assumption: {unknown[0]}")
        contraries = tuple(contrary.get(a, synthesized_contrary(a)) for a in assumptions)

        unique_rules: list[Rule] = []
        seen_rules: set = set()
        for rule in rules:
            if rule not in seen_rules:
                seen_rules.add(rule)
                unique_rules.append(rule)

        order: dict[str, None] = dict.fromkeys(assumptions)
        for token in contraries:
            order.setdefault(token, None)
        for rule in unique_rules:
            order.setdefault(rule.head, None)
            for token in rule.body:
                order.setdefault(token, None)
        for token in extra_sentences:
            order.setdefault(token, None)
        sentences = tuple(order)

        pref = Preorder.from_pairs(assumptions, pref_pairs)
        lpref = None
        if lpref_pairs is not None:
            lpref = Preorder.from_pairs(sentences, lpref_pairs)
        return cls(
            assumptions=assumptions,
            contraries=contraries,
            rules=tuple(unique_rules),
            pref=pref,
            sentences=sentences,
            lpref=lpref,
        )

    # -- lookups -----------------------------------------------------------

    @cached_property
    def language(self) -> frozenset:
        return frozenset(self.sentences)

    @cached_property
    def assumption_index(self) -> dict:
        return {name: i for i, name in enumerate(self.assumptions)}

    @cached_property
    def _contrary_map(self) -> dict:
        return dict(zip(self.assumptions, self.contraries))

    @cached_property
    def _sentence_rank(self) -> dict:
        return {name: i for i, name in enumerate(self.sentences)}

    @property
    def full_mask(self) -> int:
        return (1 << len(self.assumptions)) - 1

    def is_assumption(self, sentence: str) -> bool:
        return sentence in self.assumption_index

    def contrary_of(self, assumption: str) -> str:
        return self._contrary_map[assumption]

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            try:
                mask |= bit(self.assumption_index[name])
            except KeyError:
                raise ValueError(f"not an assumption: {name}") from None
        return mask

    def names_of(self, mask: int) -> AssumptionSet:
        return tuple(self.assumptions[i] for i in iter_bits(mask))

    def ordered(self, sentences: Iterable[str]) -> tuple[str, ...]:
        """Sort sentences into canonical order."""
        rank = self._sentence_rank
        return tuple(sorted(set(sentences), key=lambda s: (rank.get(s, len(rank)), s)))

    @cached_property
    def body_index(self) -> tuple[dict, tuple[int, ...]]:
        """Sentence -> indices of rules whose body mentions it, plus distinct body sizes."""
        watchers: dict = {}
        sizes = []
        for i, rule in enumerate(self.rules):
            distinct = set(rule.body)
            sizes.append(len(distinct))
            for token in distinct:
                watchers.setdefault(token, []).append(i)
        return watchers, tuple(sizes)

    @cached_property
    def rules_by_head(self) -> dict:
        index: dict = {}
        for rule in self.rules:
            index.setdefault(rule.head, []).append(rule)
        return index

    @cached_property
    def strictly_below_masks(self) -> tuple[int, ...]:
        """Per assumption index, the mask of assumptions strictly below it."""
        return tuple(self.mask_of(self.pref.strictly_below(a)) for a in self.assumptions)

    def without_preferences(self) -> "Framework":
        return Framework(
            assumptions=self.assumptions,
            contraries=self.contraries,
            rules=self.rules,
            pref=Preorder(carrier=self.assumptions),
            sentences=self.sentences,
            lpref=self.lpref,
        )

    def explicit_contraries(self) -> dict:
        return {
            a: c for a, c in zip(self.assumptions, self.contraries) if c != synthesized_contrary(a)
        }


def render_framework(f: Framework) -> str:
    """Render ``f`` in the canonical framework-file syntax."""
    lines = [f"assumption {name}" for name in f.assumptions]
    lines.extend(f"contrary {a} {c}" for a, c in f.explicit_contraries().items())
    lines.extend(f"rule {rule}" for rule in f.rules)
    rank = f.assumption_index
    for a, b in sorted(f.pref.leq, key=lambda pair: (rank[pair[0]], rank[pair[1]])):
        lines.append(f"pref {a} {LEQ} {b}")
    if f.lpref is not None:
        order = {name: i for i, name in enumerate(f.sentences)}
        for a, b in sorted(f.lpref.leq, key=lambda pair: (order[pair[0]], order[pair[1]])):
            lines.append(f"lpref {a} {LEQ} {b}")
    return "\n".join(lines) + "\n"
