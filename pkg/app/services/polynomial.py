"""
Exact dense polynomials in one variable t with integer coefficients
"""
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

from ..core.exceptions import InvalidReflectionBoundError


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class IntPoly:
    """Immutable polynomial; coeffs[i] is the coefficient of t^i"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "_coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        return cls([0] * degree + [coefficient])

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial"""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def min_degree(self) -> int:
        """Lowest exponent with a nonzero coefficient, -1 for zero"""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return -1

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self._coeffs) if c]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _normalize((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * c for c in self._coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        """Horner evaluation at an integer"""
        value = 0
        for c in reversed(self._coeffs):
            value = value * t + c
        return value


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    """Coefficientwise sum"""
    longer, shorter = (a.coeffs, b.coeffs) if len(a.coeffs) >= len(b.coeffs) else (b.coeffs, a.coeffs)
    out = list(longer)
    for i, c in enumerate(shorter):
        out[i] += c
    return IntPoly(out)


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Convolution product"""
    if a.is_zero() or b.is_zero():
        return IntPoly()
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x == 0:
            continue
        for j, y in enumerate(bc):
            if y:
                out[i + j] += x * y
    return IntPoly(out)


def shift(a: IntPoly, k: int) -> IntPoly:
    """t^k * a(t)"""
    if k < 0:
        raise ValueError(f"shift must be nonnegative, got {k}")
    if a.is_zero():
        return a
    return IntPoly((0,) * k + a.coeffs)


def odd_geometric(k: int) -> IntPoly:
    """t + t^3 + ... + t^(2k-1), written out term by term"""
    if k < 1:
        raise ValueError(f"odd_geometric needs k >= 1, got {k}")
    coeffs = [0] * (2 * k)
    for i in range(1, 2 * k, 2):
        coeffs[i] = 1
    return IntPoly(coeffs)


def even_geometric(k: int) -> IntPoly:
    """1 + t^2 + ... + t^(2k-2), the expansion of (t^(2k) - 1)/(t^2 - 1)"""
    if k < 1:
        raise ValueError(f"even_geometric needs k >= 1, got {k}")
    coeffs = [0] * (2 * k - 1)
    for i in range(0, 2 * k - 1, 2):
        coeffs[i] = 1
    return IntPoly(coeffs)


def mul_odd_geometric(a: IntPoly, k: int) -> IntPoly:
    """a(t) * odd_geometric(k) using same-parity prefix sums"""
    if k < 1:
        raise ValueError(f"odd_geometric needs k >= 1, got {k}")
    if a.is_zero():
        return a
    ac = a.coeffs
    size = len(ac) + 2 * k - 1
    # prefix[x] = ac[x] + ac[x-2] + ...
    prefix = [0] * size
    for x in range(size):
        own = ac[x] if x < len(ac) else 0
        prefix[x] = own + (prefix[x - 2] if x >= 2 else 0)
    out = [0] * size
    for j in range(1, size):
        hi = prefix[j - 1]
        lo_index = j - 1 - 2 * k
        out[j] = hi - (prefix[lo_index] if lo_index >= 0 else 0)
    return IntPoly(out)


def evaluate_at_one(a: IntPoly) -> int:
    return sum(a.coeffs)


def reverse(a: IntPoly, top_degree: int) -> IntPoly:
    """Coefficient of t^i becomes the coefficient of t^(top_degree - i)"""
    if top_degree < 0 or top_degree < a.degree:
        raise InvalidReflectionBoundError(
            f"cannot reflect a degree {a.degree} polynomial about {top_degree}"
        )
    padded = list(a.coeffs) + [0] * (top_degree + 1 - len(a.coeffs))
    return IntPoly(reversed(padded))


def direct_product(polys: Sequence[IntPoly]) -> IntPoly:
    """Length polynomial of a direct product of groups (or of subsets of them)"""
    return reduce(mul, polys, IntPoly.one())


def is_palindromic(a: IntPoly) -> bool:
    """Symmetric about the midpoint of [min_degree, degree]"""
    if a.is_zero():
        return True
    core = a.coeffs[a.min_degree():]
    return core == core[::-1]


def format_poly(a: IntPoly, variable: str = "t") -> str:
    """Human readable form such as 1 + 2t + t^3"""
    if a.is_zero():
        return "0"
    parts: List[str] = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if i == 0:
            body = str(magnitude)
        else:
            power = variable if i == 1 else f"{variable}^{i}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
