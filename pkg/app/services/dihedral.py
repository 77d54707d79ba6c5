"""
Involution length polynomials of the dihedral groups I2(n)
"""
import logging
from collections import deque
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..core.exceptions import BudgetExceededError, InvalidGroupError
from .polynomial import IntPoly, odd_geometric

logger = logging.getLogger(__name__)

BFS_LIMIT = 10_000

# (k, f) stands for r^k s^f with r a rotation of order n and s a reflection
Element = Tuple[int, int]


class DihedralClass(NamedTuple):
    label: str
    polynomial: IntPoly


class DihedralClassSet(NamedTuple):
    n: int
    classes: List[DihedralClass]


def _check(n: int) -> None:
    if n < 3:
        raise InvalidGroupError(f"I2(n) needs n >= 3, got {n}")


def dihedral_classes(n: int) -> DihedralClassSet:
    """Involution classes other than the identity"""
    _check(n)
    if n % 2:
        poly = odd_geometric((n - 1) // 2) * 2 + IntPoly.monomial(n)
        return DihedralClassSet(n, [DihedralClass("reflections", poly)])
    half = odd_geometric(n // 2)
    return DihedralClassSet(n, [
        DihedralClass("reflections s", half),
        DihedralClass("reflections t", half),
        DihedralClass("central", IntPoly.monomial(n)),
    ])


def dihedral_involution_poly(n: int) -> IntPoly:
    """Identity plus every involution class"""
    total = IntPoly.one()
    for cls in dihedral_classes(n).classes:
        total = total + cls.polynomial
    return total


def literal_closed_form(n: int) -> Optional[IntPoly]:
    """1 + t^n + 2t(1 - t^n)/(1 - t^2) when that is a polynomial (n even), else None"""
    _check(n)
    if n % 2:
        return None
    return IntPoly.one() + IntPoly.monomial(n) + odd_geometric(n // 2) * 2


def corrected_closed_form(n: int) -> IntPoly:
    """1 + t^n + 2t(1 - t^(2*floor(n/2)))/(1 - t^2); for odd n the reflections stop at t^(n-2)"""
    _check(n)
    return IntPoly.one() + IntPoly.monomial(n) + odd_geometric(n // 2) * 2


def _multiply(a: Element, b: Element, n: int) -> Element:
    k1, f1 = a
    k2, f2 = b
    return ((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)


def dihedral_bfs_oracle(n: int) -> IntPoly:
    """Breadth-first search over words in the two generating reflections"""
    _check(n)
    if n > BFS_LIMIT:
        raise BudgetExceededError(f"dihedral search is limited to n <= {BFS_LIMIT}",
                                  required=n, budget=BFS_LIMIT, allow_override=False)
    generators = [(0, 1), (1, 1)]
    identity = (0, 0)
    dist: Dict[Element, int] = {identity: 0}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        for s in generators:
            nxt = _multiply(w, s, n)
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                queue.append(nxt)
    if len(dist) != 2 * n:
        raise RuntimeError(f"I2({n}) search reached {len(dist)} elements, expected {2 * n}")
    coeffs = [0] * (max(dist.values()) + 1)
    for w, d in dist.items():
        if _multiply(w, w, n) == identity:
            coeffs[d] += 1
    logger.debug(f"I2({n}) search: {len(dist)} elements")
    return IntPoly(coeffs)
