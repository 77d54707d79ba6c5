"""
Polynomial-time recurrences for involution length polynomials of types A, B, D

Class polynomials:
    L_{n,m}   (type A, n letters, m transpositions)
    L_{n,m,e} (type B, m positive transpositions, e negative 1-cycles)
    D_{n,m,e} (the |Λ|-length polynomial; equals the type D class polynomial for even e)
and the aggregate polynomials of the whole involution sets.
"""
import logging
import threading
from enum import Enum
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Union

from ..core.config import settings
from ..core.exceptions import InvalidGroupError, SelfCheckError
from ..models.coxeter import Family, classical_family
from .polynomial import (
    IntPoly,
    direct_product,
    even_geometric,
    mul_odd_geometric,
    odd_geometric,
    shift,
)

logger = logging.getLogger(__name__)


class RecurrenceFamily(str, Enum):
    A_CLASS = "A-class"
    B_CLASS = "B-class"
    D_POLY = "D-poly"
    A_TOTAL = "A-total"
    B_TOTAL = "B-total"
    D_TOTAL = "D-total"
    BMD_TOTAL = "BminusD-total"
    FPF_PRODUCT = "fpf-product"


_FIELDS = {
    RecurrenceFamily.A_CLASS: ("m",),
    RecurrenceFamily.B_CLASS: ("m", "e"),
    RecurrenceFamily.D_POLY: ("m", "e"),
    RecurrenceFamily.A_TOTAL: (),
    RecurrenceFamily.B_TOTAL: (),
    RecurrenceFamily.D_TOTAL: (),
    RecurrenceFamily.BMD_TOTAL: (),
    RecurrenceFamily.FPF_PRODUCT: ("m", "group"),
}


class RecurrenceKey(NamedTuple):
    family: RecurrenceFamily
    n: int
    m: Optional[int] = None
    e: Optional[int] = None
    group: Optional[str] = None  # A, B or D for the fixed-point-free products


def make_key(family: RecurrenceFamily, n: int, m: Optional[int] = None,
             e: Optional[int] = None, group: Optional[str] = None) -> RecurrenceKey:
    """Key with exactly the fields its family uses"""
    wanted = _FIELDS[family]
    given = {"m": m, "e": e, "group": group}
    if any((name in wanted) != (value is not None) for name, value in given.items()):
        raise ValueError(f"{family.value} keys take fields {wanted}, got {given}")
    return RecurrenceKey(family, n, m, e, group)


class DClassPoly(NamedTuple):
    """Type D class polynomial; split marks the union of two classes at n = 2m, e = 0"""
    polynomial: IntPoly
    split: bool
    per_class: IntPoly


_memo: Dict[RecurrenceKey, IntPoly] = {}
_lock = threading.RLock()


def clear_cache() -> None:
    with _lock:
        _memo.clear()
        _alpha.cache_clear()
        _beta.cache_clear()
        _delta.cache_clear()


def cache_size() -> int:
    return len(_memo)


def _get(key: RecurrenceKey) -> IntPoly:
    return _memo.get(key, IntPoly())


def _in_range(n: int, m: int, e: int = 0, letters_only: bool = False) -> bool:
    if n < 0 or m < 0 or e < 0:
        return False
    if letters_only:
        return 2 * m <= n
    return 2 * m + e <= n


def class_poly_A(n: int, m: int) -> IntPoly:
    """L_{n,m}: involutions on n letters with m transpositions"""
    if not _in_range(n, m, letters_only=True):
        return IntPoly()
    key = make_key(RecurrenceFamily.A_CLASS, n, m)
    with _lock:
        if key in _memo:
            return _memo[key]
        for nn in range(n + 1):
            for mm in range(min(m, nn // 2) + 1):
                k = make_key(RecurrenceFamily.A_CLASS, nn, mm)
                if k in _memo:
                    continue
                if mm == 0:
                    _memo[k] = IntPoly.one()
                    continue
                value = _get(make_key(RecurrenceFamily.A_CLASS, nn - 1, mm))
                value = value + mul_odd_geometric(
                    _get(make_key(RecurrenceFamily.A_CLASS, nn - 2, mm - 1)), nn - 1)
                _memo[k] = value
        return _memo[key]


def class_poly_B(n: int, m: int, e: int) -> IntPoly:
    """L_{n,m,e} in W(B_n)"""
    if not _in_range(n, m, e):
        return IntPoly()
    key = make_key(RecurrenceFamily.B_CLASS, n, m, e)
    with _lock:
        if key in _memo:
            return _memo[key]
        for nn in range(n + 1):
            for mm in range(min(m, nn // 2) + 1):
                for ee in range(min(e, nn - 2 * mm) + 1):
                    k = make_key(RecurrenceFamily.B_CLASS, nn, mm, ee)
                    if k in _memo:
                        continue
                    if nn == 0:
                        _memo[k] = IntPoly.one()
                        continue
                    value = _get(make_key(RecurrenceFamily.B_CLASS, nn - 1, mm, ee))
                    if ee:
                        value = value + shift(
                            _get(make_key(RecurrenceFamily.B_CLASS, nn - 1, mm, ee - 1)), 2 * nn - 1)
                    if mm and nn >= 2:
                        value = value + mul_odd_geometric(
                            _get(make_key(RecurrenceFamily.B_CLASS, nn - 2, mm - 1, ee)), 2 * nn - 2)
                    _memo[k] = value
        return _memo[key]


def _d_third_term(prev: IntPoly, n: int) -> IntPoly:
    """(1 + t^(2n-4)) * odd_geometric(n-1) * prev"""
    core = mul_odd_geometric(prev, n - 1)
    return core + shift(core, 2 * n - 4)


def d_poly(n: int, m: int, e: int) -> IntPoly:
    """D_{n,m,e}: sum of t^|Λ(x)| over W(B_n) involutions of type (m, e)"""
    if not _in_range(n, m, e):
        return IntPoly()
    key = make_key(RecurrenceFamily.D_POLY, n, m, e)
    with _lock:
        if key in _memo:
            return _memo[key]
        for nn in range(n + 1):
            for mm in range(min(m, nn // 2) + 1):
                for ee in range(min(e, nn - 2 * mm) + 1):
                    k = make_key(RecurrenceFamily.D_POLY, nn, mm, ee)
                    if k in _memo:
                        continue
                    if nn == 0:
                        _memo[k] = IntPoly.one()
                        continue
                    value = _get(make_key(RecurrenceFamily.D_POLY, nn - 1, mm, ee))
                    if ee:
                        value = value + shift(
                            _get(make_key(RecurrenceFamily.D_POLY, nn - 1, mm, ee - 1)), 2 * nn - 2)
                    if mm and nn >= 2:
                        value = value + _d_third_term(
                            _get(make_key(RecurrenceFamily.D_POLY, nn - 2, mm - 1, ee)), nn)
                    _memo[k] = value
        return _memo[key]


def class_poly_D(n: int, m: int, e: int) -> DClassPoly:
    """Class polynomial in W(D_n); zero for odd e"""
    if n < 1:
        raise InvalidGroupError(f"W(D_n) needs n >= 1, got {n}")
    union = d_poly(n, m, e) if e % 2 == 0 else IntPoly()
    split = n == 2 * m and e == 0
    if not split:
        return DClassPoly(union, False, union)
    if any(c % 2 for c in union.coeffs):
        raise SelfCheckError(f"D_{{{n},{m},0}} has an odd coefficient and cannot be halved")
    return DClassPoly(union, True, IntPoly(c // 2 for c in union.coeffs))


def class_sum(family: Union[str, Family], n: int) -> IntPoly:
    """Involution polynomial as the sum of class polynomials (type A: rank n)"""
    fam = classical_family(family)
    total = IntPoly()
    if fam == Family.A:
        for m in range((n + 1) // 2 + 1):
            total = total + class_poly_A(n + 1, m)
        return total
    for m in range(n // 2 + 1):
        for e in range(n - 2 * m + 1):
            if fam == Family.B:
                total = total + class_poly_B(n, m, e)
            elif e % 2 == 0:
                total = total + d_poly(n, m, e)
    return total


def bd_class_sum(n: int) -> IntPoly:
    """Sum of D_{n,m,e} over odd e: the |Λ|-polynomial of W(B_n) involutions outside W(D_n)"""
    total = IntPoly()
    for m in range(n // 2 + 1):
        for e in range(1, n - 2 * m + 1, 2):
            total = total + d_poly(n, m, e)
    return total


def _fill_totals(fam: Family, n: int) -> None:
    if fam == Family.A:
        tag = RecurrenceFamily.A_TOTAL
        for nn in range(n + 1):
            k = make_key(tag, nn)
            if k in _memo:
                continue
            if nn == 0:
                _memo[k] = IntPoly.one()
            elif nn == 1:
                _memo[k] = IntPoly((1, 1))
            else:
                _memo[k] = _memo[make_key(tag, nn - 1)] + mul_odd_geometric(
                    _memo[make_key(tag, nn - 2)], nn)
    elif fam == Family.B:
        tag = RecurrenceFamily.B_TOTAL
        for nn in range(n + 1):
            k = make_key(tag, nn)
            if k in _memo:
                continue
            if nn == 0:
                _memo[k] = IntPoly.one()
            elif nn == 1:
                _memo[k] = IntPoly((1, 1))
            else:
                prev = _memo[make_key(tag, nn - 1)]
                _memo[k] = prev + shift(prev, 2 * nn - 1) + mul_odd_geometric(
                    _memo[make_key(tag, nn - 2)], 2 * nn - 2)
    else:
        d_tag, bd_tag = RecurrenceFamily.D_TOTAL, RecurrenceFamily.BMD_TOTAL
        for nn in range(n + 1):
            dk, bk = make_key(d_tag, nn), make_key(bd_tag, nn)
            if dk in _memo and bk in _memo:
                continue
            if nn == 0:
                _memo[dk], _memo[bk] = IntPoly.one(), IntPoly()
            elif nn == 1:
                _memo[dk], _memo[bk] = IntPoly.one(), IntPoly.one()
            else:
                d1, b1 = _memo[make_key(d_tag, nn - 1)], _memo[make_key(bd_tag, nn - 1)]
                d2, b2 = _memo[make_key(d_tag, nn - 2)], _memo[make_key(bd_tag, nn - 2)]
                _memo[dk] = d1 + shift(b1, 2 * nn - 2) + _d_third_term(d2, nn)
                _memo[bk] = b1 + shift(d1, 2 * nn - 2) + _d_third_term(b2, nn)


def _self_check(fam: Family, n: int, value: IntPoly) -> None:
    if not settings.SELF_CHECK_ENABLED or n > settings.SELF_CHECK_MAX_RANK:
        return
    summed = class_sum(fam, n)
    if summed != value:
        logger.error(f"❌ Aggregate recurrence and class sum disagree for {fam.value}{n}")
        raise SelfCheckError(f"{fam.value}{n}: aggregate {value} != class sum {summed}")
    if fam == Family.D:
        companion = _memo[make_key(RecurrenceFamily.BMD_TOTAL, n)]
        if bd_class_sum(n) != companion:
            raise SelfCheckError(f"D{n}: companion recurrence disagrees with the odd-e class sum")


def involution_poly(family: Union[str, Family], n: int) -> IntPoly:
    """Length polynomial of all involutions (identity included); n is the rank"""
    fam = classical_family(family)
    if n < 1:
        raise InvalidGroupError(f"rank must be positive, got {n}")
    tag = {Family.A: RecurrenceFamily.A_TOTAL, Family.B: RecurrenceFamily.B_TOTAL,
           Family.D: RecurrenceFamily.D_TOTAL}[fam]
    with _lock:
        _fill_totals(fam, n)
        value = _memo[make_key(tag, n)]
        _self_check(fam, n, value)
    return value


def bd_companion_poly(n: int) -> IntPoly:
    """L_{(B\\D)_n}: |Λ|-length polynomial of the B_n involutions with odd e"""
    if n < 1:
        raise InvalidGroupError(f"rank must be positive, got {n}")
    involution_poly(Family.D, n)
    return _memo[make_key(RecurrenceFamily.BMD_TOTAL, n)]


def fpf_product_poly(family: Union[str, Family], n: int) -> IntPoly:
    """Closed product for the involutions without 1-cycles (type A: n letters)"""
    fam = classical_family(family)
    if n < 2 or n % 2:
        raise InvalidGroupError(f"fixed-point-free involutions need even n >= 2, got {n}")
    half = n // 2
    key = make_key(RecurrenceFamily.FPF_PRODUCT, n, m=half, group=fam.value)
    with _lock:
        if key in _memo:
            return _memo[key]
        if fam == Family.A:
            factors: List[IntPoly] = [IntPoly.monomial(half)]
            factors += [even_geometric(2 * k - 1) for k in range(1, half + 1)]
        elif fam == Family.B:
            factors = [odd_geometric(4 * k - 2) for k in range(1, half + 1)]
        else:
            factors = []
            for k in range(1, half + 1):
                factors.append(IntPoly.one() + IntPoly.monomial(4 * k - 4))
                factors.append(odd_geometric(2 * k - 1))
        _memo[key] = direct_product(factors)
        return _memo[key]


@lru_cache(maxsize=None)
def _alpha(n: int, m: int, l: int) -> int:
    if n < 0 or m < 0 or l < 0 or 2 * m > n:
        return 0
    if m == 0:
        return 1 if l == 0 else 0
    total = _alpha(n - 1, m, l)
    for k in range(1, n):
        total += _alpha(n - 2, m - 1, l + 1 - 2 * k)
    return total


@lru_cache(maxsize=None)
def _beta(n: int, m: int, e: int, l: int) -> int:
    if n < 0 or m < 0 or e < 0 or l < 0 or 2 * m + e > n:
        return 0
    if n == 0:
        return 1 if l == 0 else 0
    total = _beta(n - 1, m, e, l) + _beta(n - 1, m, e - 1, l + 1 - 2 * n)
    for k in range(1, 2 * n - 1):
        total += _beta(n - 2, m - 1, e, l + 1 - 2 * k)
    return total


@lru_cache(maxsize=None)
def _delta(n: int, m: int, e: int, l: int) -> int:
    if n < 0 or m < 0 or e < 0 or l < 0 or 2 * m + e > n:
        return 0
    if n == 0:
        return 1 if l == 0 else 0
    total = _delta(n - 1, m, e, l) + _delta(n - 1, m, e - 1, l - (2 * n - 2))
    for k in range(1, n):
        total += _delta(n - 2, m - 1, e, l + 1 - 2 * k)
        total += _delta(n - 2, m - 1, e, l + 1 - 2 * k - (2 * n - 4))
    return total


def alpha_count(n: int, m: int, l: int) -> int:
    """Involutions on n letters with m transpositions and length l"""
    return _alpha(n, m, l)


def beta_count(n: int, m: int, e: int, l: int) -> int:
    """Involutions of type (m, e) and length l in W(B_n)"""
    return _beta(n, m, e, l)


def delta_count(n: int, m: int, e: int, l: int) -> int:
    """Involutions of type (m, e) and length l in W(D_n); zero for odd e"""
    if e % 2:
        return 0
    return _delta(n, m, e, l)
