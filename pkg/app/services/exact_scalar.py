"""
Exact arithmetic in Q(sqrt 5), enough for the H3 and H4 Cartan matrices
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

Number = Union[int, Fraction, "QSqrt5"]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QSqrt5:
    """a + b*sqrt(5) with rational a, b"""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x: Number) -> QSqrt5:
        if isinstance(x, QSqrt5):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot use {type(x).__name__} as QSqrt5")

    def __repr__(self) -> str:
        return f"QSqrt5({self._a}, {self._b})"

    def __str__(self) -> str:
        if not self._b:
            return str(self._a)
        if not self._a:
            return f"{self._b}√5"
        return f"{self._a}{'+' if self._b > 0 else '-'}{abs(self._b)}√5"

    def is_rational(self) -> bool:
        return self._b == 0

    def sign(self) -> int:
        sa, sb = _sign(self._a), _sign(self._b)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        diff = self._a * self._a - 5 * self._b * self._b
        return sa if diff > 0 else sb

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSqrt5(other)
        if isinstance(other, QSqrt5):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __lt__(self, other: Number) -> bool:
        return (self - QSqrt5.coerce(other)).sign() < 0

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> QSqrt5:
        return QSqrt5(-self._a, -self._b)

    def __add__(self, other: Number) -> QSqrt5:
        try:
            other = QSqrt5.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt5(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: Number) -> QSqrt5:
        try:
            other = QSqrt5.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt5(self._a - other._a, self._b - other._b)

    def __rsub__(self, other: Number) -> QSqrt5:
        return QSqrt5.coerce(other) - self

    def __mul__(self, other: Number) -> QSqrt5:
        try:
            other = QSqrt5.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt5(
            self._a * other._a + 5 * self._b * other._b,
            self._a * other._b + self._b * other._a,
        )

    __rmul__ = __mul__

    @property
    def conj(self) -> QSqrt5:
        return QSqrt5(self._a, -self._b)

    @property
    def norm(self) -> Fraction:
        return self._a * self._a - 5 * self._b * self._b

    def inverse(self) -> QSqrt5:
        norm = self.norm
        if norm == 0:
            raise ZeroDivisionError("QSqrt5 division by zero")
        return QSqrt5(self._a / norm, -self._b / norm)

    def __truediv__(self, other: Number) -> QSqrt5:
        return self * QSqrt5.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> QSqrt5:
        return QSqrt5.coerce(other) * self.inverse()


ZERO = QSqrt5(0)
ONE = QSqrt5(1)
# golden ratio (1 + sqrt 5)/2
PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))
