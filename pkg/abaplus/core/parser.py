"""Line-oriented parser for framework files.

Grammar (one directive per line, ``#`` starts a comment)::

    assumption <name>
    contrary <assumption> <sentence>
    rule <head> <- [<body> ...]
    pref <a> <= <b>      |  pref <a> < <b>
    lpref <s> <= <t>     |  lpref <s> < <t>
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator

from ..constants import CONTRARY_PREFIX, FRAMEWORK_DIRECTIVES, LEQ, LESS, RULE_ARROW, TOP_MARKER
from .errors import FrameworkParseError
from .framework import Framework, Rule, synthesized_contrary
from ..utils import transitive_closure

LOGGER = logging.getLogger(__name__)


def iter_directives(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(line_number, tokens)`` for every non-blank line."""
    for number, raw_line in enumerate(text.splitlines(), start=1):
        tokens = raw_line.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def parse_preference_line(tokens: list[str], line: int) -> tuple[str, str, bool]:
    """Parse ``<kw> a <= b`` or ``<kw> a < b``; return (a, b, strict)."""
    if len(tokens) != 4 or tokens[2] not in (LEQ, LESS):
        raise FrameworkParseError(
            f"expected '{tokens[0]} <a> <= <b>' or '{tokens[0]} <a> < <b>'", line=line
        )
    return tokens[1], tokens[3], tokens[2] == LESS


def check_strictness(
    pairs: list[tuple[str, str]],
    obligations: list[tuple[str, str, int]],
    keyword: str,
) -> None:
    """Every declared ``a < b`` must stay strict after transitive closure."""
    closed = transitive_closure(pairs)
    for a, b, line in obligations:
        if (b, a) in closed:
            raise FrameworkParseError(
                f"{keyword} {a} < {b} is not strict after closure ({b} <= {a} follows)",
                line=line,
            )


@dataclass
class _FrameworkDraft:
    assumptions: list[str] = field(default_factory=list)
    assumption_lines: dict = field(default_factory=dict)
    contrary: dict = field(default_factory=dict)
    contrary_lines: dict = field(default_factory=dict)
    rules: list[Rule] = field(default_factory=list)
    rule_lines: list[int] = field(default_factory=list)
    pref: list[tuple[str, str, int]] = field(default_factory=list)
    pref_strict: list[tuple[str, str, int]] = field(default_factory=list)
    lpref: list[tuple[str, str, int]] = field(default_factory=list)
    lpref_strict: list[tuple[str, str, int]] = field(default_factory=list)


def _check_token(token: str, line: int) -> None:
    if token == TOP_MARKER:
        raise FrameworkParseError(f"reserved token {TOP_MARKER} used as a sentence", line=line)
    if token in (RULE_ARROW, LEQ, LESS):
        raise FrameworkParseError(f"operator {token!r} used as a sentence", line=line)


def _read_line(draft: _FrameworkDraft, tokens: list[str], line: int) -> None:
    keyword = tokens[0]
    if keyword == "assumption":
        if len(tokens) != 2:
            raise FrameworkParseError("expected 'assumption <name>'", line=line)
        name = tokens[1]
        _check_token(name, line)
        if name.startswith(CONTRARY_PREFIX):
            raise FrameworkParseError(f"assumption name {name!r} uses a reserved prefix", line=line)
        if name in draft.assumption_lines:
            raise FrameworkParseError(f"assumption {name} declared twice", line=line)
        draft.assumptions.append(name)
        draft.assumption_lines[name] = line
    elif keyword == "contrary":
        if len(tokens) != 3:
            raise FrameworkParseError("expected 'contrary <assumption> <sentence>'", line=line)
        name, value = tokens[1], tokens[2]
        _check_token(value, line)
        if name in draft.contrary:
            raise FrameworkParseError(f"duplicate contrary for {name}", line=line)
        draft.contrary[name] = value
        draft.contrary_lines[name] = line
    elif keyword == "rule":
        if len(tokens) < 3 or tokens[2] != RULE_ARROW:
            raise FrameworkParseError("expected 'rule <head> <- [<body> ...]'", line=line)
        head, body = tokens[1], tokens[3:]
        if body == [TOP_MARKER]:
            body = []
        for token in (head, *body):
            _check_token(token, line)
        draft.rules.append(Rule(head=head, body=tuple(body)))
        draft.rule_lines.append(line)
    elif keyword in ("pref", "lpref"):
        a, b, strict = parse_preference_line(tokens, line)
        target = draft.pref if keyword == "pref" else draft.lpref
        target.append((a, b, line))
        if strict:
            (draft.pref_strict if keyword == "pref" else draft.lpref_strict).append((a, b, line))
    else:
        raise FrameworkParseError(
            f"unknown directive {keyword!r} (expected one of {', '.join(FRAMEWORK_DIRECTIVES)})", line=line
        )


def _validate(draft: _FrameworkDraft) -> None:
    declared = set(draft.assumptions)
    if not declared:
        raise FrameworkParseError("no assumptions declared")
    for name, line in draft.contrary_lines.items():
        if name not in declared:
            raise FrameworkParseError(f"contrary for undeclared assumption {name}", line=line)
        value = draft.contrary[name]
        if value.startswith(CONTRARY_PREFIX) and value != synthesized_contrary(name):
            raise FrameworkParseError(f"reserved token {value} in contrary", line=line)
    for rule, line in zip(draft.rules, draft.rule_lines):
        for token in (rule.head, *rule.body):
            if not token.startswith(CONTRARY_PREFIX):
                continue
            owner = token[len(CONTRARY_PREFIX):]
            if owner not in declared or owner in draft.contrary:
                raise FrameworkParseError(f"undeclared reserved token {token}", line=line)
    for a, b, line in draft.pref:
        for name in (a, b):
            if name not in declared:
                raise FrameworkParseError(f"pref mentions non-assumption {name}", line=line)
    check_strictness([(a, b) for a, b, _ in draft.pref], draft.pref_strict, "pref")
    check_strictness([(a, b) for a, b, _ in draft.lpref], draft.lpref_strict, "lpref")


def parse_framework(text: str, source: str = "<input>") -> Framework:
    """Parse framework-file text into a validated :class:`Framework`."""
    draft = _FrameworkDraft()
    try:
        for line, tokens in iter_directives(text):
            _read_line(draft, tokens, line)
        _validate(draft)
        framework = Framework.build(
            assumptions=draft.assumptions,
            contrary=draft.contrary,
            rules=draft.rules,
            pref_pairs=[(a, b) for a, b, _ in draft.pref],
        )
        if draft.lpref:
            for a, b, line in draft.lpref:
                for name in (a, b):
                    if name not in framework.language:
                        raise FrameworkParseError(f"lpref mentions unknown sentence {name}", line=line)
            framework = Framework.build(
                assumptions=draft.assumptions,
                contrary=draft.contrary,
                rules=draft.rules,
                pref_pairs=[(a, b) for a, b, _ in draft.pref],
                lpref_pairs=[(a, b) for a, b, _ in draft.lpref],
            )
    except FrameworkParseError as exc:
        raise exc.with_source(source) from None
    LOGGER.debug(
        "Parsed %s: %d assumptions, %d rules, %d sentences",
        source, len(framework.assumptions), len(framework.rules), len(framework.sentences),
    )
    return framework
