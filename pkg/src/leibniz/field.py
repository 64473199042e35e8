"""Exact scalar arithmetic over the rationals and prime fields GF(p).

Internally every field element is a *raw value*: a ``Fraction`` over Q and a
plain ``int`` in ``[0, p)`` over GF(p).  The linear algebra layers work on raw
values directly for speed; :class:`Scalar` is the checked, operator-friendly
wrapper exposed at the API boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

Raw = Union[int, Fraction]

MAX_PRIME = 257

_SCALAR_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class FieldError(ValueError):
    """Invalid field construction or arithmetic (division by zero, mixed fields)."""


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "Q" or "GF"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise FieldError("the rationals take no modulus")
        elif self.kind == "GF":
            if self.p is None or not _is_prime(self.p):
                raise FieldError(f"GF(p) needs a prime modulus, got {self.p!r}")
            if self.p > MAX_PRIME:
                raise FieldError(f"prime fields are limited to p <= {MAX_PRIME}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- descriptors -----------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    @property
    def modulus(self) -> int:
        """p for GF(p), 0 for Q (handy as a flag in hot loops)."""
        return self.p or 0

    def characteristic(self) -> int:
        return self.modulus

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    # -- raw arithmetic --------------------------------------------------
    @property
    def zero(self) -> Raw:
        return 0 if self.p else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p else Fraction(1)

    def coerce(self, a) -> Raw:
        """Map an int or Fraction (or Scalar) into this field's raw form."""
        if isinstance(a, Scalar):
            if a.field != self:
                raise FieldError(f"scalar over {a.field} used in {self}")
            return a.value
        if self.p:
            if isinstance(a, Fraction):
                if a.denominator % self.p == 0:
                    raise FieldError(f"denominator of {a} vanishes in {self}")
                return a.numerator * pow(a.denominator, -1, self.p) % self.p
            return int(a) % self.p
        return Fraction(a)

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.p else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.p else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return (a * b) % self.p if self.p else a * b

    def neg(self, a: Raw) -> Raw:
        return (-a) % self.p if self.p else -a

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def reduce(self, a: Raw) -> Raw:
        """Bring an unreduced integer accumulator back into range."""
        return a % self.p if self.p else a

    def elements(self) -> Iterator[Raw]:
        if not self.p:
            raise FieldError("cannot enumerate the elements of Q")
        return iter(range(self.p))

    # -- text ------------------------------------------------------------
    def parse(self, text: str) -> Raw:
        m = _SCALAR_RE.match(text.strip())
        if not m:
            raise FieldError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise FieldError(f"zero denominator in {text!r}")
        if self.p:
            if den % self.p == 0:
                raise FieldError(f"denominator of {text!r} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return Fraction(num, den)

    def render(self, a: Raw) -> str:
        if self.p:
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


def field_from_text(text: str) -> FieldSpec:
    """Parse ``Q``, ``GF 5``, ``GF(5)`` or ``GF5``."""
    t = text.strip().replace("(", " ").replace(")", " ").split()
    if t == ["Q"]:
        return QQ
    if t and t[0].upper().startswith("GF"):
        rest = t[0][2:] or (t[1] if len(t) > 1 else "")
        try:
            return GF(int(rest))
        except ValueError:
            pass
    raise FieldError(f"unknown field {text!r}")


@dataclass(frozen=True)
class Scalar:
    """An immutable field element carrying its field."""

    field: FieldSpec
    value: Raw

    def __post_init__(self):
        v = self.value
        if self.field.p:
            if not isinstance(v, int) or not 0 <= v < self.field.p:
                raise FieldError(f"{v!r} is not a reduced residue mod {self.field.p}")
        elif not isinstance(v, Fraction):
            object.__setattr__(self, "value", Fraction(v))

    @classmethod
    def of(cls, field: FieldSpec, a) -> "Scalar":
        return cls(field, field.coerce(a))

    def _other(self, b) -> Raw:
        if isinstance(b, Scalar):
            if b.field != self.field:
                raise FieldError(f"mixed-field operands {self.field} and {b.field}")
            return b.value
        return self.field.coerce(b)

    def __add__(self, b):
        return Scalar(self.field, self.field.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return Scalar(self.field, self.field.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return Scalar(self.field, self.field.sub(self._other(b), self.value))

    def __mul__(self, b):
        return Scalar(self.field, self.field.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return Scalar(self.field, self.field.div(self.value, self._other(b)))

    def __rtruediv__(self, b):
        return Scalar(self.field, self.field.div(self._other(b), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.render(self.value)


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    return Scalar(field, field.parse(text))


def render_scalar(s: Scalar) -> str:
    return s.field.render(s.value)
