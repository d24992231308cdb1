"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain Python values (``Fraction`` for QQ, ``int`` in
``[0, p)`` for F_p); all arithmetic goes through the field object so the
two representations never mix silently.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, LiaisonError

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of rationals; elements are reduced ``Fraction`` values."""

    tag = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise LiaisonError(f"cannot coerce {value!r} into QQ")

    def from_pair(self, num: int, den: int):
        return Fraction(num, den)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero in QQ")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def is_zero(self, a) -> bool:
        return a == 0

    def render(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p for a prime p < 2^31; elements are ints in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not (1 < p < 2**31):
            raise LiaisonError(f"prime out of range: {p}")
        if not is_prime(p):
            raise LiaisonError(f"{p} is not prime")
        self.p = p
        self.tag = f"Fp({p})"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        raise LiaisonError(f"cannot coerce {value!r} into {self.tag}")

    def from_pair(self, num: int, den: int):
        return self.div(num % self.p, den % self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inversion of zero in {self.tag}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def render(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


QQ = RationalField()


def field_from_tag(tag: str):
    """Resolve a field tag: ``QQ``, ``Fp`` (default prime), or ``Fp(p)``."""
    text = tag.strip()
    if text == "QQ":
        return QQ
    if text == "Fp":
        return PrimeField(DEFAULT_PRIME)
    if text.startswith("Fp(") and text.endswith(")"):
        inner = text[3:-1]
        if not inner.isdigit():
            raise LiaisonError(f"bad prime in field tag {tag!r}")
        return PrimeField(int(inner))
    if text.isdigit():
        return PrimeField(int(text))
    raise LiaisonError(f"unknown field tag {tag!r} (expected QQ or Fp(p))")


def check_same_field(f1, f2) -> None:
    if f1 != f2:
        raise FieldMismatchError(f"mixed fields: {f1!r} vs {f2!r}")
