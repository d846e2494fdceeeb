"""Exact scalar arithmetic over the rationals and over prime fields.

Coefficients are stored as plain Python values: ``fractions.Fraction`` for the
rationals (always in lowest terms with positive denominator, which Fraction
guarantees by construction) and ``int`` residues in ``0..p-1`` for a prime
field.  ``FieldSpec`` carries the arithmetic on those raw values; the
``FieldElement`` wrapper pairs a value with its field and overloads the usual
operators for code that wants scalars as objects.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

Coeff = int | Fraction


class FieldKind(enum.Enum):
    RATIONALS = "rationals"
    PRIME = "prime"


class FieldMismatchError(ValueError):
    """Raised when an operation mixes scalars from different fields."""


def is_prime(p: int) -> bool:
    """Trial-division primality check, sufficient for word-sized moduli."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient domain: the rationals, or integers modulo a prime."""

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if self.modulus is None or not is_prime(self.modulus):
                raise ValueError(f"modulus must be a prime, got {self.modulus!r}")
        else:
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")

    @property
    def is_rationals(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    def zero(self) -> Coeff:
        return Fraction(0) if self.modulus is None else 0

    def one(self) -> Coeff:
        return Fraction(1) if self.modulus is None else 1

    def canon(self, value) -> Coeff:
        """Coerce ``value`` into canonical form for this field.

        Rationals accept int, Fraction or a numeric string; prime fields
        accept any int (reduced into ``0..p-1``).
        """
        if self.modulus is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return value.numerator % self.modulus
            raise ValueError(f"cannot coerce non-integer {value} into GF({self.modulus})")
        return int(value) % self.modulus

    def add(self, a: Coeff, b: Coeff) -> Coeff:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a: Coeff, b: Coeff) -> Coeff:
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a: Coeff, b: Coeff) -> Coeff:
        return a * b if self.modulus is None else (a * b) % self.modulus

    def neg(self, a: Coeff) -> Coeff:
        return -a if self.modulus is None else (-a) % self.modulus

    def inv(self, a: Coeff) -> Coeff:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a: Coeff, b: Coeff) -> Coeff:
        return self.mul(a, self.inv(b))

    def pow(self, a: Coeff, e: int) -> Coeff:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.modulus is None:
            return a**e
        return pow(a, e, self.modulus)

    def sign_magnitude(self, a: Coeff) -> tuple[int, str]:
        """Split a nonzero value into (sign, magnitude string) for printing.

        Prime-field residues above p/2 print as their negative balanced
        representative, so 4 mod 7 shows up as ``-3``.
        """
        if self.modulus is None:
            mag = abs(a)
            text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            return (1 if a >= 0 else -1), text
        if a > self.modulus // 2:
            return -1, str(self.modulus - a)
        return 1, str(a)

    def render(self, a: Coeff) -> str:
        if not a:
            return "0"
        sign, mag = self.sign_magnitude(a)
        return mag if sign > 0 else "-" + mag

    def element(self, value) -> "FieldElement":
        return FieldElement(self, self.canon(value))

    def to_dict(self) -> dict:
        if self.modulus is None:
            return {"kind": "rationals"}
        return {"kind": "prime", "modulus": self.modulus}

    @staticmethod
    def from_dict(d: dict) -> "FieldSpec":
        if d["kind"] == "rationals":
            return RATIONALS
        return FieldSpec(FieldKind.PRIME, d["modulus"])

    def __str__(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"


RATIONALS = FieldSpec(FieldKind.RATIONALS)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(FieldKind.PRIME, p)


class FieldElement:
    """An exact scalar tagged with its field.

    Instances are treated as immutable.  Arithmetic between elements of
    different fields raises FieldMismatchError; plain ints (and Fractions,
    over the rationals) are coerced as a convenience.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: Coeff):
        self.spec = spec
        self.value = value

    def _coerce(self, other) -> Coeff:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} with {other.spec}")
            return other.value
        if isinstance(other, int) or (self.spec.modulus is None and isinstance(other, Fraction)):
            return self.spec.canon(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.div(v, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.spec.canon(other)
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self):
        return self.spec.render(self.value)

    def __repr__(self):
        return f"FieldElement({self.spec}, {self.value!r})"
