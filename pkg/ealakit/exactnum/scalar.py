"""Exact elements of cyclotomic fields Q(z_m), stored as rational polynomials reduced mod the m-th cyclotomic polynomial"""

import re
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, Iterable, Tuple, Union

import sympy

from ealakit.errors import DivisionByZero

_X = sympy.Symbol("x")
_TERM = re.compile(r"^(?P<coeff>.*?)z\((?P<order>\d+)\)\^(?P<power>-?\d+)$")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(order: int) -> Tuple[int, ...]:
    """Integer coefficients of the order-th cyclotomic polynomial, lowest degree first"""
    poly = sympy.Poly(sympy.cyclotomic_poly(order, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def reduction_table(order: int) -> Tuple[Tuple[int, ...], ...]:
    """Row k holds the reduced coefficients of x^k, 0 <= k < order"""
    phi = cyclotomic_coefficients(order)
    degree = len(phi) - 1
    row = [1] + [0] * (degree - 1)
    table = []
    for _ in range(order):
        table.append(tuple(row))
        # multiply by x, then fold x^degree back with the monic relation
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            row = [r - top * phi[j] for j, r in enumerate(row)]
    return tuple(table)


def _fold(order: int, raw: Dict[int, Fraction]) -> Tuple[Fraction, ...]:
    table = reduction_table(order)
    degree = len(table[0])
    out = [Fraction(0)] * degree
    for power, value in raw.items():
        if not value:
            continue
        row = table[power % order]
        for j, t in enumerate(row):
            if t:
                out[j] += t * value
    return tuple(out)


class Scalar:
    """Element of Q(z_order); `coeffs` maps exponent j < phi(order) to its rational coefficient"""

    __slots__ = ("order", "_c")

    def __init__(self, coefficients: Iterable = (0,), order: int = 1):
        c = tuple(Fraction(v) for v in coefficients)
        degree = len(cyclotomic_coefficients(order)) - 1
        if len(c) != degree:
            c = _fold(order, dict(enumerate(c)))
        # rational values always live at conductor 1
        if order != 1 and not any(c[1:]):
            order, c = 1, (c[0],)
        self.order = order
        self._c = c

    @classmethod
    def rational(cls, value: Union[int, Fraction, str]) -> "Scalar":
        return cls((Fraction(value),), 1)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Scalar":
        """The root of unity z_order^power"""
        if order < 1:
            raise ValueError(f"Conductor must be positive, got {order}")
        return cls._from_raw(order, {power % order: Fraction(1)})

    @classmethod
    def _from_raw(cls, order: int, raw: Dict[int, Fraction]) -> "Scalar":
        return cls(_fold(order, raw), order)

    @classmethod
    def parse(cls, text: Union[str, int, Fraction, "Scalar"]) -> "Scalar":
        """Inverse of `str`: accepts "p/q", "z(m)^j" and sums joined by " + " """
        if isinstance(text, Scalar):
            return text
        if isinstance(text, (int, Fraction)):
            return cls.rational(text)
        total = ZERO
        for term in str(text).strip().split(" + "):
            term = term.strip()
            match = _TERM.match(term)
            if match is None:
                total = total + cls.rational(Fraction(term))
                continue
            head = match.group("coeff").rstrip("*")
            coeff = {"": 1, "-": -1}.get(head)
            coeff = Fraction(head) if coeff is None else Fraction(coeff)
            root = cls.zeta(int(match.group("order")), int(match.group("power")))
            total = total + root * coeff
        return total

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return {j: c for j, c in enumerate(self._c) if c}

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def _lift(self, order: int) -> Tuple[Fraction, ...]:
        if order == self.order:
            return self._c
        if order % self.order:
            raise ValueError(f"Cannot embed conductor {self.order} into {order}")
        step = order // self.order
        return _fold(order, {j * step: c for j, c in enumerate(self._c) if c})

    def coerce(self, order: int) -> "Scalar":
        """Image under z_self.order -> z_order^(order / self.order), in canonical form"""
        return Scalar(self._lift(order), order)

    def _pair(self, other) -> Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        if not isinstance(other, Scalar):
            other = Scalar.rational(other)
        if other.order == self.order:
            return self.order, self._c, other._c
        order = lcm(self.order, other.order)
        return order, self._lift(order), other._lift(order)

    def __add__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)) and self.order == 1:
            return Scalar((self._c[0] + other,), 1)
        order, a, b = self._pair(other)
        return Scalar(tuple(x + y for x, y in zip(a, b)), order)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(tuple(-x for x in self._c), self.order)

    def __sub__(self, other) -> "Scalar":
        order, a, b = self._pair(other)
        return Scalar(tuple(x - y for x, y in zip(a, b)), order)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            if self.order == 1:
                return Scalar((self._c[0] * other,), 1)
            return Scalar(tuple(x * other for x in self._c), self.order)
        order, a, b = self._pair(other)
        if order == 1:
            return Scalar((a[0] * b[0],), 1)
        raw: Dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    raw[i + j] = raw.get(i + j, 0) + x * y
        return Scalar._from_raw(order, raw)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self:
            raise DivisionByZero("Division by zero in Q(z_m)", witness=str(self))
        if self.order == 1:
            return Scalar((1 / self._c[0],), 1)
        poly = sum(
            sympy.Rational(c.numerator, c.denominator) * _X**j
            for j, c in enumerate(self._c)
            if c
        )
        inverse = sympy.invert(poly, sympy.cyclotomic_poly(self.order, _X), _X)
        coeffs = sympy.Poly(inverse, _X, domain=sympy.QQ).all_coeffs()
        raw = {
            j: Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
            for j, c in enumerate(reversed(coeffs))
        }
        return Scalar._from_raw(self.order, raw)

    def __truediv__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            other = Scalar.rational(other)
        return self * other.inv()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.rational(other) * self.inv()

    def __pow__(self, exponent: int) -> "Scalar":
        base = self if exponent >= 0 else self.inv()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return any(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.order == 1 and self._c[0] == other
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.order == other.order:
            return self._c == other._c
        _, a, b = self._pair(other)
        return a == b

    def __hash__(self) -> int:
        if self.order == 1:
            return hash(self._c[0])
        # equal irrational values may sit at different conductors
        return hash("cyclotomic")

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self._c):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z({self.order})^{j}")
            elif c == -1:
                terms.append(f"-z({self.order})^{j}")
            else:
                terms.append(f"{c}*z({self.order})^{j}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"


ZERO = Scalar((0,), 1)
ONE = Scalar((1,), 1)


def as_scalar(value) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar.parse(value)


def field_ops(a: Scalar, b: Scalar) -> Dict[str, Scalar]:
    """The whole operation family on one pair; `div` is omitted when b is zero"""
    a, b = as_scalar(a), as_scalar(b)
    result = {"add": a + b, "sub": a - b, "mul": a * b, "neg": -a}
    if b:
        result["div"] = a / b
        result["inv"] = b.inv()
    return result
