"""Verdict and complement types."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..constants import COMPLEMENT_PREFIX


class VerdictStatus(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    subject: str
    status: VerdictStatus
    witnesses: tuple = ()
    notes: str = ""

    @classmethod
    def from_witnesses(cls, subject: str, witnesses, notes: str = "") -> "Verdict":
        witnesses = tuple(witnesses)
        status = VerdictStatus.VIOLATED if witnesses else VerdictStatus.HOLDS
        return cls(subject=subject, status=status, witnesses=witnesses, notes=notes)

    @property
    def holds(self) -> bool:
        return self.status is VerdictStatus.HOLDS

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "status": self.status.value,
            "witnesses": list(self.witnesses),
            "notes": self.notes,
        }


@dataclass(frozen=True)
class Complement:
    """Classical complement by token convention: -t = ~t and -(~t) = t."""

    prefix: str = field(default=COMPLEMENT_PREFIX)

    def __call__(self, sentence: str) -> str:
        if sentence.startswith(self.prefix) and len(sentence) > len(self.prefix):
            return sentence[len(self.prefix):]
        return f"{self.prefix}{sentence}"
