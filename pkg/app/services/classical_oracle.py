"""
Brute-force ground truth for types A, B and D

Elements of W(B_n) are signed permutations; lengths come from counting the
roots an element sends negative, never from a recurrence.
"""
import logging
import re
from collections import deque
from itertools import permutations, product
from math import factorial
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..core.config import settings
from ..core.exceptions import (
    BudgetExceededError,
    ElementOutsideGroupError,
    InvalidGroupError,
    NotAnInvolutionError,
)
from ..models.coxeter import Family, classical_family
from ..models.verification import ReductionReport
from .polynomial import IntPoly

logger = logging.getLogger(__name__)

# (j, i, s) stands for the long root e_j + s*e_i with i < j
LongRoot = Tuple[int, int, int]

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


class SignedPerm:
    """Signed permutation of {±1..±n}; images[i] = w(i+1)"""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        n = len(images)
        if n < 1:
            raise ValueError("a signed permutation needs rank >= 1")
        if sorted(abs(v) for v in images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a signed permutation")
        object.__setattr__(self, "_images", images)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPerm is immutable")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, k: int) -> int:
        """w(k) for k in ±1..±n, using w(-k) = -w(k)"""
        if k > 0:
            return self._images[k - 1]
        return -self._images[-k - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """(g * h)(k) = g(h(k))"""
        if not isinstance(other, SignedPerm):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return SignedPerm(self(v) for v in other._images)

    def inverse(self) -> "SignedPerm":
        out = [0] * self.n
        for i, v in enumerate(self._images, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm(out)

    def is_involution(self) -> bool:
        return all(self(v) == i for i, v in enumerate(self._images, start=1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SignedPerm):
            return self._images == other._images
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"SignedPerm({list(self._images)})"

    def __str__(self) -> str:
        return format_signed_cycles(self)


class CycleType(NamedTuple):
    m: int  # 2-cycles, (+r +s) or (-r -s)
    e: int  # negative 1-cycles


def parse_signed_cycles(text: str, n: int) -> SignedPerm:
    """Read cycle notation such as "(-1)(-2)(+3 +4)"

    In a cycle (s_1 a_1 ... s_k a_k) the letter a_i goes to s_i * a_{i+1}.
    Letters not mentioned are fixed.
    """
    images = list(range(1, n + 1))
    seen = set()
    for body in _CYCLE_PATTERN.findall(text):
        tokens = [int(tok) for tok in re.findall(r"[+-]?\d+", body)]
        if not tokens:
            continue
        for pos, tok in enumerate(tokens):
            letter = abs(tok)
            if letter < 1 or letter > n or letter in seen:
                raise ValueError(f"bad letter {tok} in {text!r} for rank {n}")
            seen.add(letter)
            target = abs(tokens[(pos + 1) % len(tokens)])
            images[letter - 1] = target if tok > 0 else -target
    return SignedPerm(images)


def format_signed_cycles(w: SignedPerm) -> str:
    """Inverse of parse_signed_cycles; the identity prints as ()"""
    seen = set()
    parts: List[str] = []
    for start in range(1, w.n + 1):
        if start in seen or w(start) == start:
            continue
        tokens = []
        letter = start
        while letter not in seen:
            seen.add(letter)
            image = w(letter)
            tokens.append(f"{'+' if image > 0 else '-'}{letter}")
            letter = abs(image)
        parts.append("(" + " ".join(tokens) + ")")
    return "".join(parts) or "()"


def _is_positive_image(w: SignedPerm, j: int, i: int, s: int) -> bool:
    """Whether w sends e_j + s*e_i to a positive root"""
    wj = w(j)
    wi = s * w(i)
    if abs(wj) > abs(wi):
        return wj > 0
    return wi > 0


def lambda_set(w: SignedPerm) -> FrozenSet[LongRoot]:
    """Positive long roots e_j ± e_i sent negative by w"""
    return frozenset(
        (j, i, s)
        for j in range(2, w.n + 1)
        for i in range(1, j)
        for s in (1, -1)
        if not _is_positive_image(w, j, i, s)
    )


def lambda_size(w: SignedPerm) -> int:
    count = 0
    for j in range(2, w.n + 1):
        for i in range(1, j):
            if not _is_positive_image(w, j, i, 1):
                count += 1
            if not _is_positive_image(w, j, i, -1):
                count += 1
    return count


def sigma_size(w: SignedPerm) -> int:
    """Short roots e_i sent negative, i.e. the number of minus signs"""
    return sum(1 for v in w.images if v < 0)


def length(w: SignedPerm, family: Union[str, Family]) -> int:
    """Coxeter length in W(A_{n-1}), W(B_n) or W(D_n)"""
    fam = classical_family(family)
    minus = sigma_size(w)
    if fam == Family.A and minus:
        raise ElementOutsideGroupError(f"{w} has sign changes, not in the symmetric group")
    if fam == Family.D and minus % 2:
        raise ElementOutsideGroupError(f"{w} has an odd number of sign changes, not in W(D_{w.n})")
    if fam == Family.B:
        return lambda_size(w) + minus
    return lambda_size(w)


def cycle_type(w: SignedPerm) -> CycleType:
    """(m, e) for an involution; raises NotAnInvolutionError otherwise"""
    if not w.is_involution():
        raise NotAnInvolutionError(f"{w} does not square to the identity")
    m = e = 0
    for i, v in enumerate(w.images, start=1):
        if v == -i:
            e += 1
        elif abs(v) > i:
            m += 1
    return CycleType(m, e)


def class_count(family: Union[str, Family], n: int, m: int, e: int) -> int:
    """Number of involutions of cycle type (m, e); for A, n is the letter count"""
    fam = classical_family(family)
    if m < 0 or e < 0 or 2 * m + e > n:
        return 0
    if fam == Family.A:
        return 0 if e else factorial(n) // (2 ** m * factorial(m) * factorial(n - 2 * m))
    if fam == Family.D and e % 2:
        return 0
    # each transposition comes as (+r +s) or (-r -s)
    return factorial(n) // (factorial(m) * factorial(e) * factorial(n - 2 * m - e))


def cycle_types(family: Union[str, Family], n: int) -> List[CycleType]:
    """Every (m, e) that occurs in the group, in (m, e) order"""
    fam = classical_family(family)
    out = []
    for m in range(n // 2 + 1):
        for e in range(n - 2 * m + 1):
            if fam == Family.A and e:
                continue
            if fam == Family.D and e % 2:
                continue
            out.append(CycleType(m, e))
    return out


def _guard(fam: Family, n: int, allow_large: Optional[bool]) -> None:
    if n < 1:
        raise InvalidGroupError(f"rank must be positive, got {n}")
    allow = settings.ALLOW_LARGE if allow_large is None else allow_large
    limit = settings.ORACLE_MAX_LETTERS_A if fam == Family.A else settings.ORACLE_MAX_RANK_BD
    total = sum(class_count(fam, n, m, e) for m, e in cycle_types(fam, n))
    if total > settings.ORACLE_HARD_LIMIT:
        logger.error(f"❌ Oracle refused {fam.value}{n}: {total} involutions")
        raise BudgetExceededError(
            f"{total} involutions in type {fam.value} rank {n} exceeds the hard limit "
            f"{settings.ORACLE_HARD_LIMIT}",
            required=total, budget=settings.ORACLE_HARD_LIMIT, allow_override=False,
        )
    if n > limit and not allow:
        logger.warning(f"⚠️ Oracle refused {fam.value}{n} (guard {limit})")
        raise BudgetExceededError(
            f"type {fam.value} with n={n} is above the oracle guard {limit}; use --allow-large",
            required=n, budget=limit,
        )


def _place(remaining: List[int], m_left: int, e_left: int, images: List[int],
           signed: bool) -> Iterator[SignedPerm]:
    """Place the cycle holding the largest unused letter, then recurse"""
    if not remaining:
        if m_left == 0 and e_left == 0:
            yield SignedPerm(images)
        return
    top = remaining[-1]
    rest = remaining[:-1]
    if len(rest) >= 2 * m_left + e_left:
        images[top - 1] = top
        yield from _place(rest, m_left, e_left, images, signed)
    if e_left and signed:
        images[top - 1] = -top
        yield from _place(rest, m_left, e_left - 1, images, signed)
    if m_left:
        for r in rest:
            others = [k for k in rest if k != r]
            for sign in ((1, -1) if signed else (1,)):
                images[top - 1] = sign * r
                images[r - 1] = sign * top
                yield from _place(others, m_left - 1, e_left, images, signed)


def involutions_of_type(family: Union[str, Family], n: int, m: int, e: int,
                        allow_large: Optional[bool] = None) -> Iterator[SignedPerm]:
    """Stream the involutions of cycle type (m, e)"""
    fam = classical_family(family)
    _guard(fam, n, allow_large)
    if fam == Family.A and e:
        raise InvalidGroupError("type A involutions have no negative 1-cycles")
    if m < 0 or e < 0 or 2 * m + e > n:
        return
    if fam == Family.D and e % 2:
        return
    yield from _place(list(range(1, n + 1)), m, e, [0] * n, signed=fam != Family.A)


def enumerate_involutions(family: Union[str, Family], n: int,
                          allow_large: Optional[bool] = None) -> Iterator[SignedPerm]:
    """Every involution, identity included; for type A, n is the letter count"""
    fam = classical_family(family)
    _guard(fam, n, allow_large)
    for m, e in cycle_types(fam, n):
        yield from involutions_of_type(fam, n, m, e, allow_large=True)


def _tally(elements: Iterator[SignedPerm], weight) -> IntPoly:
    counts: Dict[int, int] = {}
    for x in elements:
        k = weight(x)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return IntPoly()
    coeffs = [0] * (max(counts) + 1)
    for k, c in counts.items():
        coeffs[k] = c
    return IntPoly(coeffs)


def oracle_class_poly(family: Union[str, Family], n: int, m: int, e: int,
                      allow_large: Optional[bool] = None) -> IntPoly:
    """Sum of t^length over the involutions of cycle type (m, e)"""
    fam = classical_family(family)
    if fam == Family.A and e:
        raise InvalidGroupError("type A classes have e = 0")
    logger.debug(f"oracle class poly {fam.value} n={n} m={m} e={e}")
    elements = involutions_of_type(fam, n, m, e, allow_large=allow_large)
    if fam == Family.B:
        return _tally(elements, lambda x: lambda_size(x) + sigma_size(x))
    return _tally(elements, lambda_size)


def oracle_lambda_poly(n: int, m: int, e: int, allow_large: Optional[bool] = None) -> IntPoly:
    """Sum of t^|Λ(x)| over the W(B_n) involutions of type (m, e), any parity of e"""
    return _tally(involutions_of_type(Family.B, n, m, e, allow_large=allow_large), lambda_size)


def oracle_involution_poly(family: Union[str, Family], n: int,
                           allow_large: Optional[bool] = None) -> IntPoly:
    fam = classical_family(family)
    total = IntPoly()
    for m, e in cycle_types(fam, n):
        total = total + oracle_class_poly(fam, n, m, e, allow_large=allow_large)
    return total


def b_generators(n: int) -> List[SignedPerm]:
    """s_0 negates 1, s_i swaps i and i+1"""
    gens = [SignedPerm([-1] + list(range(2, n + 1)))]
    for i in range(1, n):
        images = list(range(1, n + 1))
        images[i - 1], images[i] = i + 1, i
        gens.append(SignedPerm(images))
    return gens


def cayley_lengths_B(n: int) -> Dict[SignedPerm, int]:
    """Word length of every element of W(B_n) by breadth-first search"""
    if n > 5:
        raise BudgetExceededError(f"Cayley search of W(B_{n}) is limited to n <= 5",
                                  required=n, budget=5, allow_override=False)
    gens = b_generators(n)
    start = SignedPerm.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            nxt = w * s
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                queue.append(nxt)
    return dist


def rotation(n: int, r: int) -> SignedPerm:
    """c_r = (+n +(n-1) ... +r): k -> k-1 for r < k <= n, r -> n"""
    images = list(range(1, n + 1))
    for k in range(r + 1, n + 1):
        images[k - 1] = k - 1
    images[r - 1] = n
    return SignedPerm(images)


def delta_count(y: SignedPerm, r: int) -> int:
    """Δ_r(y), the correction term of the conjugation identity"""
    count = 0
    for k in range(1, y.n + 1):
        yk = y(k)
        if abs(yk) < r < k:
            count += 1
        if yk < 0 and r < k and r < abs(yk):
            count += 1
    return count


def check_reduction(x: SignedPerm) -> ReductionReport:
    """Split x by the cycle holding n and test the length bookkeeping"""
    if not x.is_involution():
        raise NotAnInvolutionError(f"{x} does not square to the identity")
    n = x.n
    top = x(n)
    tau_images = list(range(1, n + 1))
    r: Optional[int] = None
    if top == n:
        tau = f"(+{n})"
    elif top == -n:
        tau = f"(-{n})"
        tau_images[n - 1] = -n
    else:
        r = abs(top)
        sign = 1 if top > 0 else -1
        tau = f"(+{r} +{n})" if sign > 0 else f"(-{r} -{n})"
        tau_images[n - 1] = sign * r
        tau_images[r - 1] = sign * n
    y = x * SignedPerm(tau_images)
    lambda_x, sigma_x = lambda_size(x), sigma_size(x)
    lambda_y, sigma_y = lambda_size(y), sigma_size(y)

    report = dict(n=n, x=list(x.images), tau=tau, r=r, y=list(y.images),
                  lambda_x=lambda_x, sigma_x=sigma_x, lambda_y=lambda_y, sigma_y=sigma_y)
    if r is None:
        if top == n:
            report["lambda_branch_holds"] = lambda_x == lambda_y
            report["sigma_branch_holds"] = sigma_x == sigma_y
        else:
            report["lambda_branch_holds"] = lambda_x == 2 * (n - 1) + lambda_y
            report["sigma_branch_holds"] = sigma_x == sigma_y + 1
        return ReductionReport(**report)

    delta = delta_count(y, r)
    c = rotation(n, r)
    z = c * y * c.inverse()
    lambda_z, sigma_z = lambda_size(z), sigma_size(z)
    conjugation_holds = (lambda_z == lambda_y - 2 * delta and sigma_z == sigma_y
                         and z(n) == n and z(n - 1) == n - 1)
    if top > 0:
        lambda_branch = lambda_x == 2 * (n - r) - 1 + lambda_y - 2 * delta
        sigma_branch = sigma_x == sigma_y
        corollary = lambda_x == lambda_z + 2 * (n - r) - 1 and sigma_x == sigma_z
    else:
        lambda_branch = lambda_x == 2 * (n + r) - 5 + lambda_y - 2 * delta
        sigma_branch = sigma_x == sigma_y + 2
        corollary = sigma_x == sigma_z + 2 and lambda_x == lambda_z + 2 * (n + r) - 5
    report.update(
        z=list(z.images), delta=delta, lambda_z=lambda_z, sigma_z=sigma_z,
        lambda_branch_holds=lambda_branch, sigma_branch_holds=sigma_branch,
        conjugation_identity_holds=conjugation_holds, corollary_identity_holds=corollary,
    )
    return ReductionReport(**report)


def check_ngh(g: SignedPerm, h: SignedPerm) -> bool:
    """|Λ(gh)| = |Λ(g)| + |Λ(h)| - 2|Λ(g) ∩ Λ(h^-1)|"""
    if g.n != h.n:
        raise InvalidGroupError(f"rank mismatch: {g.n} vs {h.n}")
    lam_g = lambda_set(g)
    lam_h = lambda_set(h)
    overlap = lam_g & lambda_set(h.inverse())
    return len(lambda_set(g * h)) == len(lam_g) + len(lam_h) - 2 * len(overlap)


def all_signed_perms(n: int) -> Iterator[SignedPerm]:
    """All 2^n * n! elements of W(B_n), rank <= 5"""
    if n > 5:
        raise BudgetExceededError(f"full W(B_{n}) listing is limited to n <= 5",
                                  required=n, budget=5, allow_override=False)
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPerm(s * v for s, v in zip(signs, perm))
