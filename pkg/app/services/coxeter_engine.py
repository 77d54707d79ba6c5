"""
Finite Coxeter group oracle for the exceptional types E6, E7, E8, F4, H3, H4

Roots are exact coordinate vectors in the simple-root basis over Q(sqrt 5).
Group elements act on the root set by permutation; the length of w is the
number of positive roots it sends negative.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from ..core.config import settings
from ..core.exceptions import BudgetExceededError, InvalidGroupError, SelfCheckError
from ..models.coxeter import EXCEPTIONAL_NAMES, ClassRecord, CoxeterType, parse_group
from .exact_scalar import PHI, QSqrt5
from .exceptional_data import load_tables, reverse_partner
from .polynomial import IntPoly, direct_product

logger = logging.getLogger(__name__)

# Bourbaki numbering; (i, j, m) lists the edges with m(i, j) > 2
COXETER_GRAPHS: Dict[str, Tuple[int, List[Tuple[int, int, int]]]] = {
    "E6": (6, [(1, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (2, 4, 3)]),
    "E7": (7, [(1, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (2, 4, 3)]),
    "E8": (8, [(1, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (7, 8, 3), (2, 4, 3)]),
    "F4": (4, [(1, 2, 3), (2, 3, 4), (3, 4, 3)]),
    "H3": (3, [(1, 2, 5), (2, 3, 3)]),
    "H4": (4, [(1, 2, 5), (2, 3, 3), (3, 4, 3)]),
}

GROUP_ORDERS = {
    "E6": 51_840,
    "E7": 2_903_040,
    "E8": 696_729_600,
    "F4": 1_152,
    "H3": 120,
    "H4": 14_400,
}

DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}

# groups whose order can never be enumerated here
REFUSED = frozenset({"E8"})

Root = Tuple[QSqrt5, ...]


class GroupElement(NamedTuple):
    simple_images: Tuple[int, ...]
    length: int


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Exact root system; roots[:positive_count] are positive, roots[i + P] = -roots[i]"""
    type: CoxeterType
    rank: int
    roots: List[Root]
    positive_count: int
    simple_indices: List[int]
    reflection_tables: np.ndarray  # shape (rank, 2P): simple reflection i sends root r to [i, r]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def name(self) -> str:
        return self.type.name

    @property
    def root_count(self) -> int:
        return len(self.roots)

    def negate(self, index: int) -> int:
        p = self.positive_count
        return index + p if index < p else index - p

    def is_positive(self, index: int) -> bool:
        return index < self.positive_count

    def longest_element(self) -> np.ndarray:
        """Root permutation of w0, found by walking up one ascent at a time"""
        if "w0" not in self._cache:
            w = np.arange(self.root_count, dtype=np.int32)
            steps = 0
            while True:
                for s, simple in enumerate(self.simple_indices):
                    if w[simple] < self.positive_count:
                        w = w[self.reflection_tables[s]]
                        steps += 1
                        break
                else:
                    break
            self._cache["w0"] = w
            self._cache["w0_length"] = steps
        return self._cache["w0"]

    @property
    def longest_length(self) -> int:
        self.longest_element()
        return self._cache["w0_length"]

    @property
    def longest_is_central(self) -> bool:
        """w0 is central exactly when it acts as -1 on the roots"""
        w0 = self.longest_element()
        return all(int(w0[r]) == self.negate(r) for r in range(self.root_count))


def cartan_matrix(name: str) -> List[List[QSqrt5]]:
    """A[i][j] = <alpha_i^vee, alpha_j>; m = 4 uses (-1, -2), m = 5 uses -phi both ways"""
    rank, edges = COXETER_GRAPHS[name]
    A = [[QSqrt5(2 if i == j else 0) for j in range(rank)] for i in range(rank)]
    for i, j, m in edges:
        i, j = i - 1, j - 1
        if m == 3:
            A[i][j] = A[j][i] = QSqrt5(-1)
        elif m == 4:
            A[i][j], A[j][i] = QSqrt5(-1), QSqrt5(-2)
        elif m == 5:
            A[i][j] = A[j][i] = -PHI
        else:
            raise ValueError(f"unsupported edge label {m}")
    return A


def _reflect(A: List[List[QSqrt5]], i: int, beta: Root) -> Root:
    coefficient = sum((A[i][j] * beta[j] for j in range(len(beta))), QSqrt5(0))
    out = list(beta)
    out[i] = out[i] - coefficient
    return tuple(out)


def _is_nonnegative(beta: Root) -> bool:
    return all(c.sign() >= 0 for c in beta)


def build_root_system(group: Union[str, CoxeterType]) -> RootSystem:
    """Close the simple roots under the simple reflections"""
    ctype = parse_group(group) if isinstance(group, str) else group
    name = ctype.name
    if name not in EXCEPTIONAL_NAMES:
        raise InvalidGroupError(f"the engine builds exceptional types only, not {name}")
    rank, _ = COXETER_GRAPHS[name]
    A = cartan_matrix(name)
    zero, one = QSqrt5(0), QSqrt5(1)
    simple = [tuple(one if k == i else zero for k in range(rank)) for i in range(rank)]

    positives: List[Root] = list(simple)
    index: Dict[Root, int] = {r: k for k, r in enumerate(simple)}
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(rank):
            image = _reflect(A, i, beta)
            if image in index or not _is_nonnegative(image):
                continue
            index[image] = len(positives)
            positives.append(image)
            queue.append(image)
    p = len(positives)
    roots = positives + [tuple(-c for c in r) for r in positives]
    index = {r: k for k, r in enumerate(roots)}

    tables = np.empty((rank, 2 * p), dtype=np.int32)
    for i in range(rank):
        for k, beta in enumerate(roots):
            image = _reflect(A, i, beta)
            if image not in index:
                raise SelfCheckError(f"{name}: reflection {i + 1} leaves the root set")
            tables[i, k] = index[image]
        if sorted(tables[i].tolist()) != list(range(2 * p)):
            raise SelfCheckError(f"{name}: reflection {i + 1} is not a bijection on roots")
        flipped = [k for k in range(p) if tables[i, k] >= p]
        if flipped != [i]:
            raise SelfCheckError(f"{name}: reflection {i + 1} makes {flipped} negative")
    logger.info(f"🌱 {name}: {p} positive roots")
    return RootSystem(
        type=ctype, rank=rank, roots=roots, positive_count=p,
        simple_indices=list(range(rank)), reflection_tables=tables,
    )


def _budget(name: str, budget: Optional[int], allow_large: Optional[bool]) -> int:
    order = GROUP_ORDERS[name]
    if name in REFUSED:
        raise BudgetExceededError(
            f"W({name}) has {order} elements; enumeration is not supported",
            required=order, budget=0, allow_override=False,
        )
    allow = settings.ALLOW_LARGE if allow_large is None else allow_large
    if budget is None:
        budget = settings.LARGE_ENUMERATION_BUDGET if allow else settings.ENUMERATION_BUDGET
    if order > budget:
        logger.warning(f"⚠️ Refusing to enumerate W({name}): {order} > {budget}")
        raise BudgetExceededError(
            f"W({name}) has {order} elements, over the budget of {budget}; use --allow-large",
            required=order, budget=budget,
        )
    return budget


def _codes(rs: RootSystem, perms: np.ndarray) -> np.ndarray:
    """Integer code of each element from its simple-root images"""
    base = np.int64(rs.root_count)
    code = np.zeros(perms.shape[0], dtype=np.int64)
    for s in reversed(rs.simple_indices):
        code = code * base + perms[:, s].astype(np.int64)
    return code


def _levels(rs: RootSystem, budget: int) -> Iterator[Tuple[int, np.ndarray]]:
    """Yield (length, root permutations of every element of that length)"""
    p = rs.positive_count
    current = np.arange(rs.root_count, dtype=np.int32)[None, :]
    previous_codes = np.empty(0, dtype=np.int64)
    length = 0
    seen = 0
    while current.shape[0]:
        flipped = (current[:, :p] >= p).sum(axis=1)
        if np.any(flipped != length):
            raise SelfCheckError(f"{rs.name}: |N(w)| disagrees with search depth {length}")
        seen += current.shape[0]
        if seen > budget:
            raise BudgetExceededError(f"W({rs.name}) enumeration passed {budget} elements",
                                      required=seen, budget=budget)
        yield length, current
        candidates = np.concatenate([current[:, rs.reflection_tables[s]] for s in rs.simple_indices])
        codes = _codes(rs, candidates)
        codes, first = np.unique(codes, return_index=True)
        fresh = ~np.isin(codes, previous_codes)
        previous_codes = _codes(rs, current)
        current = candidates[first[fresh]]
        length += 1


def enumerate_group(rs: RootSystem, budget: Optional[int] = None,
                    allow_large: Optional[bool] = None) -> Iterator[GroupElement]:
    """Every element once, by increasing length"""
    limit = _budget(rs.name, budget, allow_large)
    for length, perms in _levels(rs, limit):
        simple = perms[:, rs.simple_indices]
        for row in simple:
            yield GroupElement(tuple(int(v) for v in row), length)


@dataclass
class Census:
    """Level sizes plus every non-identity involution, kept as root permutations"""
    level_sizes: List[int]
    involutions: np.ndarray
    involution_lengths: np.ndarray


def census(rs: RootSystem, budget: Optional[int] = None,
           allow_large: Optional[bool] = None) -> Census:
    if "census" in rs._cache:
        return rs._cache["census"]
    limit = _budget(rs.name, budget, allow_large)
    sizes: List[int] = []
    found: List[np.ndarray] = []
    lengths: List[np.ndarray] = []
    identity = np.arange(rs.root_count, dtype=np.int32)
    for length, perms in _levels(rs, limit):
        sizes.append(perms.shape[0])
        if length == 0:
            continue
        square = np.take_along_axis(perms, perms, axis=1)
        mask = np.all(square == identity, axis=1)
        if mask.any():
            found.append(perms[mask])
            lengths.append(np.full(int(mask.sum()), length, dtype=np.int32))
        logger.debug(f"{rs.name} length {length}: {perms.shape[0]} elements")
    total = sum(sizes)
    if total != GROUP_ORDERS[rs.name]:
        raise SelfCheckError(f"{rs.name}: enumerated {total} elements, expected {GROUP_ORDERS[rs.name]}")
    logger.info(f"✅ Enumerated W({rs.name}): {total} elements, max length {len(sizes) - 1}")
    result = Census(
        level_sizes=sizes,
        involutions=np.concatenate(found) if found else np.empty((0, rs.root_count), dtype=np.int32),
        involution_lengths=np.concatenate(lengths) if lengths else np.empty(0, dtype=np.int32),
    )
    rs._cache["census"] = result
    return result


def poincare_polynomial(rs: RootSystem, budget: Optional[int] = None,
                        allow_large: Optional[bool] = None) -> IntPoly:
    """Sum of t^length over the whole group"""
    return IntPoly(census(rs, budget, allow_large).level_sizes)


def degree_product(name: str) -> IntPoly:
    """Product of 1 + t + ... + t^(d-1) over the degrees of the group"""
    return direct_product([IntPoly([1] * d) for d in DEGREES[name]])


def _orbits(rs: RootSystem, perms: np.ndarray) -> List[np.ndarray]:
    """Partition involutions into conjugacy classes by conjugating with simple reflections"""
    codes = _codes(rs, perms)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    neighbors = []
    for s in rs.simple_indices:
        t = rs.reflection_tables[s]
        conjugates = t[perms[:, t]]
        conjugate_codes = _codes(rs, conjugates)
        pos = np.minimum(np.searchsorted(sorted_codes, conjugate_codes), len(sorted_codes) - 1)
        if np.any(sorted_codes[pos] != conjugate_codes):
            raise SelfCheckError(f"{rs.name}: a conjugate of an involution is not an involution")
        neighbors.append(order[pos])
    neighbor_lists = np.stack(neighbors, axis=1).tolist()

    label = [-1] * perms.shape[0]
    orbits: List[np.ndarray] = []
    for start in range(perms.shape[0]):
        if label[start] >= 0:
            continue
        label[start] = len(orbits)
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in neighbor_lists[u]:
                if label[v] < 0:
                    label[v] = len(orbits)
                    members.append(v)
                    queue.append(v)
        orbits.append(np.array(members, dtype=np.int64))
    return orbits


def _record(label: str, lengths: np.ndarray) -> ClassRecord:
    low, high = int(lengths.min()), int(lengths.max())
    if np.any((lengths - low) % 2):
        raise SelfCheckError("an involution class mixes length parities")
    counts = np.bincount(lengths - low, minlength=high - low + 1)
    return ClassRecord(label=label, size=int(lengths.size), min_length=low,
                       profile=[int(c) for c in counts[::2]])


def involution_classes(rs: RootSystem, budget: Optional[int] = None,
                       allow_large: Optional[bool] = None) -> List[ClassRecord]:
    """One record per conjugacy class of involutions, labeled from the embedded tables"""
    data = census(rs, budget, allow_large)
    orbits = _orbits(rs, data.involutions)
    if sum(len(o) for o in orbits) != data.involutions.shape[0]:
        raise SelfCheckError(f"{rs.name}: orbits do not partition the involutions")
    found = [_record("unidentified", data.involution_lengths[o]) for o in orbits]

    reference = load_tables().get(rs.name)
    labeled: List[ClassRecord] = []
    if reference is not None:
        pool = list(found)
        for ref in reference.classes:
            for k, rec in enumerate(pool):
                if rec.key == ref.key:
                    labeled.append(rec.model_copy(update={"label": ref.label}))
                    pool.pop(k)
                    break
        rest = sorted(pool, key=lambda r: (r.min_length, r.size, r.profile))
    else:
        rest = sorted(found, key=lambda r: (r.min_length, r.size, r.profile))
    if rest:
        logger.warning(f"⚠️ {rs.name}: {len(rest)} classes did not match the embedded table")
    logger.info(f"🔎 {rs.name}: {len(found)} involution classes")
    return labeled + rest


def longest_element_reflection(rs: RootSystem, rec: ClassRecord,
                               classes: List[ClassRecord]) -> Optional[ClassRecord]:
    """Class of w0*x for x in rec, or None when w0 is not central"""
    if not rs.longest_is_central:
        return None
    return reverse_partner(rec, classes, rs.longest_length)
