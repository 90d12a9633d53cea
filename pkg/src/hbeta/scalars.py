"""Exact scalars over the rationals or a prime field.

Both backends share one value type, :class:`Scalar`, tagged with the
:class:`FieldDescriptor` it lives in.  Scalars from different fields never
mix; integers are promoted into the field of the other operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import FieldMismatch

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

Coercible = Union["Scalar", int, Fraction, str]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.modulus, int) or not _is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldDescriptor":
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        """Inverse of ``str()``: ``"Q"`` or ``"Fp:<p>"``."""
        text = text.strip()
        if text == "Q":
            return cls.rationals()
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field descriptor {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field descriptor {text!r}")

    def __str__(self) -> str:
        return "Q" if self.kind == RATIONALS else f"Fp:{self.modulus}"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.modulus

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def __call__(self, value: Coercible) -> "Scalar":
        """Coerce an int, Fraction, string or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar in {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if self.kind == RATIONALS:
            return Scalar(self, Fraction(value))
        p = self.modulus
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError("division by zero")
            return Scalar(self, value.numerator * pow(den, -1, p) % p)
        return Scalar(self, value % p)

    def parse_scalar(self, text: str) -> "Scalar":
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                value = Fraction(int(num), int(den))
            else:
                value = int(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse {text!r} as an element of {self}") from None
        return self(value)


class Scalar:
    """Immutable element of a :class:`FieldDescriptor`.

    Rationals are held as a reduced :class:`~fractions.Fraction`, prime-field
    elements as the least nonnegative residue, so ``==`` is structural.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def _wrap(self, value) -> "Scalar":
        if self.field.kind == PRIME_FIELD:
            value %= self.field.modulus
        return Scalar(self.field, value)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return self._wrap(-self.value)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise ZeroDivisionError("division by zero")
        if self.field.kind == RATIONALS:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.modulus))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.kind == PRIME_FIELD:
            return Scalar(self.field, pow(self.value, n, self.field.modulus))
        return Scalar(self.field, self.value**n)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __str__(self) -> str:
        if self.field.kind == RATIONALS:
            v = self.value
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self})"


def scalar_arith(op: str, x: Scalar, y: Optional[Scalar] = None):
    """Dispatch ``add``, ``mul``, ``neg``, ``inv`` or ``eq`` on exact scalars."""
    if op in ("add", "mul", "eq"):
        if y is None:
            raise TypeError(f"{op} needs two operands")
        if x.field != y.field:
            raise FieldMismatch(f"cannot combine {x.field} with {y.field}")
        if op == "add":
            return x + y
        if op == "mul":
            return x * y
        return x == y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    raise ValueError(f"unknown scalar operation {op!r}")


def root_of_unity_check(omega: Scalar, n: int) -> bool:
    """True iff ``omega`` is a primitive ``n``-th root of unity."""
    if not omega:
        raise ZeroDivisionError("zero is not a root of unity")
    if n < 1:
        raise ValueError("order must be positive")
    one = omega.field.one
    power = one
    for k in range(1, n + 1):
        power = power * omega
        if power == one:
            return k == n
    return False
