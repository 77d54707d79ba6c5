"""
Result builders shared by the command line and the HTTP endpoints
"""
import logging
from typing import Dict, List, Optional, Tuple

from ..core.exceptions import InvalidGroupError
from ..models.analysis import Profile
from ..models.coxeter import ClassRecord, Family, make_type, parse_group
from ..models.polynomial import ClassPolynomialOut, InvolutionPolynomialOut, PolynomialOut
from .analysis import full_profile, parity_profile
from .coxeter_engine import build_root_system, involution_classes
from .dihedral import dihedral_classes, dihedral_involution_poly
from .exceptional_data import class_sum_polynomial, class_to_polynomial, get_table
from .polynomial import IntPoly, format_poly
from .recurrence import (
    bd_companion_poly,
    class_poly_A,
    class_poly_B,
    class_poly_D,
    involution_poly,
)

logger = logging.getLogger(__name__)

SOURCES = ("embedded", "engine")
PARITIES = {"odd": 1, "even": 0}


def class_polynomial(type_: str, n: int, m: Optional[int] = None, e: int = 0,
                     label: Optional[str] = None, size: Optional[int] = None) -> ClassPolynomialOut:
    """One class polynomial; type A counts letters, I2 and exceptional groups select by label"""
    ctype = make_type(type_, n)
    if ctype.is_classical:
        if m is None:
            raise InvalidGroupError("classical classes need m (and e for types B and D)")
        if m < 0 or e < 0:
            raise InvalidGroupError(f"m and e must be nonnegative, got m={m} e={e}")
        if ctype.family == Family.A:
            if e:
                raise InvalidGroupError("type A classes have e = 0")
            if 2 * m > n:
                raise InvalidGroupError(f"{m} transpositions do not fit on {n} letters")
            return ClassPolynomialOut.build(f"S{n}", m, 0, class_poly_A(n, m))
        if 2 * m + e > n:
            raise InvalidGroupError(f"cycle type (m={m},e={e}) does not fit in rank {n}")
        if ctype.family == Family.B:
            return ClassPolynomialOut.build(ctype.name, m, e, class_poly_B(n, m, e))
        if e % 2:
            raise InvalidGroupError(f"W(D_{n}) has no involutions with odd e={e}")
        d = class_poly_D(n, m, e)
        return ClassPolynomialOut.build(ctype.name, m, e, d.polynomial, split=d.split,
                                        per_class=d.per_class)
    if label is None:
        raise InvalidGroupError(f"{ctype.name} classes are selected by label")
    if ctype.is_dihedral:
        for cls in dihedral_classes(n).classes:
            if cls.label == label:
                return ClassPolynomialOut.build(ctype.name, 0, 0, cls.polynomial)
        raise InvalidGroupError(f"no class {label!r} in {ctype.name}")
    matches = [r for r in get_table(ctype).classes
               if r.label == label and (size is None or r.size == size)]
    if not matches:
        raise InvalidGroupError(f"no class {label!r} in {ctype.name}")
    if len({r.size for r in matches}) > 1:
        raise InvalidGroupError(f"{label} is ambiguous in {ctype.name}; give --size")
    return ClassPolynomialOut.build(ctype.name, 0, 0, class_to_polynomial(matches[0]))


def group_polynomial(type_: str, n: int) -> Tuple[str, IntPoly, Optional[IntPoly]]:
    """(group name, involution polynomial, B\\D companion for type D)"""
    ctype = make_type(type_, n)
    if ctype.is_classical:
        companion = bd_companion_poly(n) if ctype.family == Family.D else None
        return ctype.name, involution_poly(ctype.family, n), companion
    if ctype.is_dihedral:
        return ctype.name, dihedral_involution_poly(n), None
    return ctype.name, class_sum_polynomial(get_table(ctype).classes), None


def involution_polynomial(type_: str, n: int) -> InvolutionPolynomialOut:
    name, poly, companion = group_polynomial(type_, n)
    return InvolutionPolynomialOut(
        group=name,
        polynomial=PolynomialOut.from_poly(poly),
        text=format_poly(poly),
        companion=PolynomialOut.from_poly(companion) if companion is not None else None,
        companion_text=format_poly(companion) if companion is not None else None,
    )


def involution_profile(type_: str, n: int, parity: str = "even", full: bool = False) -> Profile:
    """Parity profile of the whole involution polynomial"""
    if parity not in PARITIES:
        raise InvalidGroupError(f"parity must be odd or even, got {parity!r}")
    _, poly, _ = group_polynomial(type_, n)
    if full:
        return full_profile(poly)
    return parity_profile(poly, PARITIES[parity])


def class_table(group: str, source: str = "embedded",
                allow_large: Optional[bool] = None) -> List[ClassRecord]:
    """Involution classes of an exceptional group, from the data file or from scratch"""
    ctype = parse_group(group)
    if not ctype.is_exceptional:
        raise InvalidGroupError(f"class tables exist for E6, E7, E8, F4, H3, H4, not {ctype.name}")
    if source == "embedded":
        return list(get_table(ctype).classes)
    if source == "engine":
        return involution_classes(build_root_system(ctype), allow_large=allow_large)
    raise InvalidGroupError(f"source must be one of {SOURCES}, got {source!r}")


def _row(rec: ClassRecord) -> Tuple:
    return rec.label, rec.size, rec.min_length, tuple(rec.profile)


def table_diff(group: str, allow_large: Optional[bool] = None) -> Dict[str, List[str]]:
    """Rows present in only one of the two sources (both lists empty on agreement)"""
    embedded = sorted(_row(r) for r in class_table(group, "embedded"))
    engine = sorted(_row(r) for r in class_table(group, "engine", allow_large=allow_large))
    only_embedded = [r for r in embedded if r not in engine]
    only_engine = [r for r in engine if r not in embedded]
    if only_embedded or only_engine:
        logger.warning(f"⚠️ {group}: engine and embedded tables differ")
    else:
        logger.info(f"✅ {group}: engine reproduces the embedded table")

    def fmt(rows):
        return [f"{label} size={size} min_length={low} profile={list(profile)}"
                for label, size, low, profile in rows]

    return {"embedded_only": fmt(only_embedded), "engine_only": fmt(only_engine)}

