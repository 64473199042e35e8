"""Three-valued decision results."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any


class Outcome(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: Any = None
    method: str = ""
    note: str = ""

    @classmethod
    def true(cls, witness=None, method: str = "", note: str = "") -> "Verdict":
        return cls(Outcome.TRUE, witness, method, note)

    @classmethod
    def false(cls, note: str = "", method: str = "", witness=None) -> "Verdict":
        return cls(Outcome.FALSE, witness, method, note)

    @classmethod
    def unknown(cls, note: str, method: str = "") -> "Verdict":
        return cls(Outcome.UNKNOWN, None, method, note)

    @classmethod
    def of(cls, value: bool, witness=None, method: str = "", note: str = "") -> "Verdict":
        return cls(Outcome.TRUE if value else Outcome.FALSE, witness, method, note)

    @property
    def is_true(self) -> bool:
        return self.outcome is Outcome.TRUE

    @property
    def is_false(self) -> bool:
        return self.outcome is Outcome.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    def decided(self) -> bool:
        """The boolean value; raises if the verdict is Unknown."""
        if self.is_unknown:
            raise Undecided(self.note or "verdict is Unknown")
        return self.is_true

    def __bool__(self):
        raise TypeError("Verdict is three-valued; use .is_true / .decided()")

    def __str__(self) -> str:
        extra = f" [{self.method}]" if self.method else ""
        note = f": {self.note}" if self.note else ""
        return f"{self.outcome.value}{extra}{note}"


class Undecided(RuntimeError):
    """A predicate could not be settled over an infinite field."""
