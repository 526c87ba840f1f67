"""Exact scalar fields: prime fields GF(p) and the rationals."""

from __future__ import annotations

from fractions import Fraction

from .errors import MalformedElementError, PreconditionError


def _is_prime(p: int) -> bool:
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


class Field:
    """Exact arithmetic in GF(p) (``modulus=p``) or in Q (``modulus=None``).

    GF(p) scalars are ints in ``range(p)``; rationals are ``Fraction``s, which
    are always kept in lowest terms.
    """

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None):
        if modulus is not None and not _is_prime(int(modulus)):
            raise PreconditionError(f"modulus {modulus} is not prime")
        self.modulus = None if modulus is None else int(modulus)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    def __eq__(self, other):
        return isinstance(other, Field) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Field", self.modulus))

    def __repr__(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    @property
    def zero(self):
        return 0 if self.modulus is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.modulus is not None else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into the field."""
        if isinstance(x, float):
            raise MalformedElementError("floating point scalars are not exact")
        if isinstance(x, str):
            x = Fraction(x)
        if self.modulus is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.modulus == 0:
                raise MalformedElementError(f"{x} has no image in {self!r}")
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def add(self, a, b):
        if self.modulus is None:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a, b):
        if self.modulus is None:
            return a - b
        return (a - b) % self.modulus

    def neg(self, a):
        if self.modulus is None:
            return -a
        return -a % self.modulus

    def mul(self, a, b):
        if self.modulus is None:
            return a * b
        return a * b % self.modulus

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.modulus)

    def to_json(self, a) -> str | int:
        if self.modulus is None:
            return str(a)
        return int(a)
