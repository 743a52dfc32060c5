"""Preference-based argumentation frameworks (PAFs)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from ..constants import COMPLEMENT_PREFIX, CONTRARY_PREFIX, LEQ, LESS, PAF_DIRECTIVES, RULE_ARROW, TOP_MARKER
from ..core.abstract import AAGraph, aa_extensions
from ..core.config import DEFAULT_CONFIG, EngineConfig
from ..core.errors import FrameworkParseError, NameCollisionError
from ..core.framework import Framework, Preorder, Rule, synthesized_contrary
from ..core.parser import check_strictness, iter_directives, parse_preference_line
from ..core.semantics import SemanticsName

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Paf:
    """Arguments, attacks, and a preorder over arguments."""

    args: tuple[str, ...]
    attacks: frozenset
    pref: Preorder

    @classmethod
    def build(
        cls,
        args: Iterable[str],
        attacks: Iterable[tuple[str, str]] = (),
        pref_pairs: Iterable[tuple[str, str]] = (),
    ) -> "Paf":
        args = tuple(dict.fromkeys(args))
        known = set(args)
        attacks = frozenset(attacks)
        for src, dst in attacks:
            if src not in known or dst not in known:
                raise ValueError(f"attack ({src}, {dst}) mentions an unknown argument")
        return cls(args=args, attacks=attacks, pref=Preorder.from_pairs(args, pref_pairs))

    def attack_graph(self) -> AAGraph:
        return AAGraph.build(self.args, self.attacks)


def parse_paf(text: str, source: str = "<input>") -> Paf:
    """Parse ``arg`` / ``att`` / ``pref`` lines into a :class:`Paf`."""
    args: list[str] = []
    attacks: list[tuple[str, str, int]] = []
    prefs: list[tuple[str, str, int]] = []
    strict: list[tuple[str, str, int]] = []
    try:
        for line, tokens in iter_directives(text):
            keyword = tokens[0]
            if keyword == "arg":
                if len(tokens) != 2:
                    raise FrameworkParseError("expected 'arg <name>'", line=line)
                if tokens[1] in (TOP_MARKER, RULE_ARROW, LEQ, LESS):
                    raise FrameworkParseError(f"reserved token {tokens[1]} used as argument", line=line)
                if tokens[1] in args:
                    raise FrameworkParseError(f"argument {tokens[1]} declared twice", line=line)
                args.append(tokens[1])
            elif keyword == "att":
                if len(tokens) != 3:
                    raise FrameworkParseError("expected 'att <src> <dst>'", line=line)
                attacks.append((tokens[1], tokens[2], line))
            elif keyword == "pref":
                a, b, is_strict = parse_preference_line(tokens, line)
                prefs.append((a, b, line))
                if is_strict:
                    strict.append((a, b, line))
            else:
                raise FrameworkParseError(
                    f"unknown directive {keyword!r} (expected one of {', '.join(PAF_DIRECTIVES)})", line=line
                )
        known = set(args)
        for a, b, line in attacks + prefs:
            for name in (a, b):
                if name not in known:
                    raise FrameworkParseError(f"undeclared argument {name}", line=line)
        check_strictness([(a, b) for a, b, _ in prefs], strict, "pref")
    except FrameworkParseError as exc:
        raise exc.with_source(source) from None
    return Paf.build(args, [(a, b) for a, b, _ in attacks], [(a, b) for a, b, _ in prefs])


def repair_paf(p: Paf) -> AAGraph:
    """Defeats: A -> B iff (A attacks B and A is not below B) or (B attacks A and B is below A)."""
    defeats = set()
    for src, dst in p.attacks:
        if p.pref.less(src, dst):
            defeats.add((dst, src))
        else:
            defeats.add((src, dst))
    return AAGraph.build(p.args, defeats)


def paf_to_abaplus(p: Paf) -> Framework:
    """Arguments become assumptions; each attack A -> B becomes ``contrary(B) <- A``."""
    for name in p.args:
        if name.startswith(CONTRARY_PREFIX) or name.startswith(COMPLEMENT_PREFIX) or name == TOP_MARKER:
            raise NameCollisionError(f"argument id {name!r} clashes with a reserved token")
    rules = [
        Rule(head=synthesized_contrary(dst), body=(src,))
        for src, dst in sorted(p.attacks, key=lambda e: (p.args.index(e[0]), p.args.index(e[1])))
    ]
    return Framework.build(assumptions=p.args, rules=rules, pref_pairs=p.pref.leq)


def paf_extensions(
    p: Paf,
    sem: SemanticsName | str,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[frozenset]:
    """σ extensions of the repaired framework."""
    return aa_extensions(repair_paf(p), sem, config)
