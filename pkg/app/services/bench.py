"""
Timing the recurrences against brute-force enumeration
"""
import logging
import re
import time
from typing import List, Optional, Tuple, Union

from ..core.exceptions import BudgetExceededError
from ..models.coxeter import Family, classical_family
from ..models.verification import BenchRow
from .classical_oracle import oracle_involution_poly
from .recurrence import clear_cache, involution_poly

logger = logging.getLogger(__name__)

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.|-)\s*(\d+)\s*$")


def parse_range(text: str) -> Tuple[int, int]:
    """'2..6' -> (2, 6)"""
    match = _RANGE.match(text or "")
    if not match:
        raise ValueError(f"expected a range like 2..6, got {text!r}")
    low, high = int(match.group(1)), int(match.group(2))
    if low < 1 or high < low:
        raise ValueError(f"empty or invalid range {text!r}")
    return low, high


def bench(family: Union[str, Family], low: int, high: int,
          allow_large: Optional[bool] = None) -> List[BenchRow]:
    """One row per rank; the oracle column is empty once the oracle guard refuses"""
    fam = classical_family(family)
    rows: List[BenchRow] = []
    for n in range(low, high + 1):
        clear_cache()
        start = time.perf_counter()
        poly = involution_poly(fam, n)
        recurrence_seconds = time.perf_counter() - start

        oracle_seconds, agree = None, None
        # the oracle counts letters for type A
        oracle_n = n + 1 if fam == Family.A else n
        try:
            start = time.perf_counter()
            oracle = oracle_involution_poly(fam, oracle_n, allow_large=allow_large)
            oracle_seconds = time.perf_counter() - start
            agree = oracle == poly
        except BudgetExceededError as e:
            logger.info(f"⚠️ Oracle skipped for {fam.value}{n}: {e}")

        rows.append(BenchRow(
            group=f"{fam.value}{n}",
            recurrence_seconds=recurrence_seconds,
            oracle_seconds=oracle_seconds,
            involutions=poly(1),
            agree=agree,
        ))
        logger.debug(f"bench {fam.value}{n}: {recurrence_seconds:.4f}s / {oracle_seconds}")
    return rows


def format_bench(rows: List[BenchRow]) -> str:
    lines = [f"{'group':<8}{'involutions':>16}{'recurrence s':>15}{'oracle s':>12}  agree"]
    for row in rows:
        oracle = f"{row.oracle_seconds:.4f}" if row.oracle_seconds is not None else "-"
        agree = "-" if row.agree is None else ("yes" if row.agree else "NO")
        lines.append(f"{row.group:<8}{row.involutions:>16}{row.recurrence_seconds:>15.4f}{oracle:>12}  {agree}")
    return "\n".join(lines)
