"""Exact arithmetic layer: p-adic valuations, F_p and F_{p^2}.

Everything here is immutable and pure; rationals are ``fractions.Fraction``
(always lowest terms, positive denominator), valuations are additive with
ord_p(p) = 1, and ord_p(0) is a distinguished infinity that sorts above
every rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import InconsistencyError

#: Value of ord_p(0); compares above every rational.
ORD_INFINITY = float("inf")

Rational = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs here are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _ord_int(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def ord_p(x: Rational, p: int):
    """Additive p-adic valuation of a rational; ORD_INFINITY for 0."""
    _require_prime(p)
    if x == 0:
        return ORD_INFINITY
    if isinstance(x, Fraction):
        return _ord_int(x.numerator, p) - _ord_int(x.denominator, p)
    return _ord_int(int(x), p)


# ---------------------------------------------------------------------------
# prime fields


@dataclass(frozen=True)
class FpElem:
    """An element of F_p, stored as the representative in [0, p)."""

    p: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "FpElem":
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        return FpElem(self.p, int(other))

    def __add__(self, other):
        other = self._coerce(other)
        return FpElem(self.p, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FpElem(self.p, self.value - other.value)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FpElem(self.p, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(self.p, -self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElem(self.p, pow(self.value, e, self.p))

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return FpElem(self.p, pow(self.value, self.p - 2, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# ---------------------------------------------------------------------------
# quadratic extensions


@lru_cache(maxsize=None)
def quadratic_modulus(p: int) -> tuple[int, int]:
    """Coefficients (b, c) of the modulus w^2 + b*w + c used for F_{p^2}.

    The first irreducible monic quadratic in lexicographic (b, c) order,
    so the model is deterministic across runs.
    """
    _require_prime(p)
    for b in range(p):
        for c in range(p):
            if all((x * x + b * x + c) % p for x in range(p)):
                return (b, c)
    raise AssertionError("no irreducible quadratic found")  # impossible


@dataclass(frozen=True)
class Fp2Elem:
    """c0 + c1*w in F_p[w]/(w^2 + b*w + c), the modulus fixed by the prime."""

    p: int
    c0: int
    c1: int

    def __post_init__(self):
        object.__setattr__(self, "c0", self.c0 % self.p)
        object.__setattr__(self, "c1", self.c1 % self.p)

    def _coerce(self, other) -> "Fp2Elem":
        if isinstance(other, Fp2Elem):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return Fp2Elem(self.p, other.value, 0)
        return Fp2Elem(self.p, int(other), 0)

    def __add__(self, other):
        other = self._coerce(other)
        return Fp2Elem(self.p, self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Fp2Elem(self.p, self.c0 - other.c0, self.c1 - other.c1)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        b, c = quadratic_modulus(self.p)
        # (x0 + x1 w)(y0 + y1 w) with w^2 = -b w - c
        hi = self.c1 * other.c1
        return Fp2Elem(
            self.p,
            self.c0 * other.c0 - hi * c,
            self.c0 * other.c1 + self.c1 * other.c0 - hi * b,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Fp2Elem(self.p, -self.c0, -self.c1)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Fp2Elem(self.p, 1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Fp2Elem":
        if not self:
            raise ZeroDivisionError("inverse of 0 in F_{p^2}")
        return self ** (self.p * self.p - 2)

    def frobenius(self) -> "Fp2Elem":
        """The field automorphism x -> x^p; an involution fixing F_p."""
        return self**self.p

    def in_prime_field(self) -> bool:
        return self.c1 == 0

    def __bool__(self):
        return self.c0 != 0 or self.c1 != 0

    def __repr__(self):
        return f"({self.c0} + {self.c1}*w mod {self.p})"


@dataclass(frozen=True)
class Fp2Model:
    """Description of the F_{p^2} in use: the prime and the quadratic modulus."""

    p: int
    modulus: tuple[int, int]  # (b, c) of w^2 + b*w + c

    def elem(self, c0: int, c1: int = 0) -> Fp2Elem:
        return Fp2Elem(self.p, c0, c1)

    def zero(self) -> Fp2Elem:
        return Fp2Elem(self.p, 0, 0)

    def one(self) -> Fp2Elem:
        return Fp2Elem(self.p, 1, 0)

    def gen(self) -> Fp2Elem:
        return Fp2Elem(self.p, 0, 1)

    def elements(self):
        for c0 in range(self.p):
            for c1 in range(self.p):
                yield Fp2Elem(self.p, c0, c1)

    def modulus_coeffs(self) -> list[int]:
        """Modulus as an ascending coefficient list [c, b, 1]."""
        b, c = self.modulus
        return [c, b, 1]


def fp2_make(p: int) -> Fp2Model:
    """Build the deterministic F_{p^2} model for a prime p."""
    return Fp2Model(p, quadratic_modulus(p))


def frobenius_conjugate(x: Fp2Elem) -> Fp2Elem:
    return x.frobenius()


def cube_root_of_unity(p: int):
    """A primitive cube root of unity mod p.

    Lives in F_p when 3 | p-1 (returned as FpElem), otherwise in F_{p^2}
    (returned as Fp2Elem).  Characteristic 3 has none.
    """
    _require_prime(p)
    if p == 3:
        raise InconsistencyError("no primitive cube root in characteristic 3")
    if (p - 1) % 3 == 0:
        for v in range(2, p):
            if pow(v, 3, p) == 1:
                return FpElem(p, v)
        raise AssertionError("unreachable: 3 | p-1 guarantees an order-3 element")
    model = fp2_make(p)
    one = model.one()
    for z in model.elements():
        if z != one and z * z + z + 1 == Fp2Elem(p, 0, 0):
            return z
    raise AssertionError("unreachable: F_{p^2}^* is cyclic of order divisible by 3")
