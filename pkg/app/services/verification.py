"""
Verification suites: recurrences against brute force, reduction identities,
dihedral closed forms and the exceptional tables against the Coxeter engine
"""
import logging
import random
import time
from typing import Callable, Dict, List, Optional, Tuple

from ..core.config import settings
from ..core.exceptions import BudgetExceededError, CoxinvError
from ..models.coxeter import Family
from ..models.verification import CaseResult, SuiteReport
from .analysis import is_log_concave, is_unimodal, parity_profiles, scan_counterexamples
from .classical_oracle import (
    SignedPerm,
    all_signed_perms,
    cayley_lengths_B,
    check_ngh,
    check_reduction,
    class_count,
    cycle_types,
    enumerate_involutions,
    length,
    oracle_class_poly,
    oracle_lambda_poly,
)
from .coxeter_engine import (
    build_root_system,
    degree_product,
    enumerate_group,
    involution_classes,
    poincare_polynomial,
)
from .dihedral import (
    corrected_closed_form,
    dihedral_bfs_oracle,
    dihedral_classes,
    literal_closed_form,
)
from .errata import D2_TOTAL, DIHEDRAL_ODD, E8_EVEN_ROW
from .exceptional_data import (
    CENTRAL_LONGEST,
    check_table,
    class_to_polynomial,
    get_class,
    load_tables,
)
from .polynomial import IntPoly, is_palindromic
from .recurrence import (
    alpha_count,
    beta_count,
    bd_companion_poly,
    class_poly_A,
    class_poly_B,
    class_poly_D,
    d_poly,
    delta_count,
    fpf_product_poly,
    involution_poly,
)

logger = logging.getLogger(__name__)

SUITES = ("classical", "reduction", "dihedral", "exceptional", "analysis")

B6_EVEN_PROFILE = [1, 10, 20, 27, 35, 41, 49, 51, 55, 54, 55, 51, 49, 41, 35, 27, 20, 10, 1]

Check = Callable[[], Tuple[bool, Optional[str]]]


def _p(*coeffs: int) -> IntPoly:
    return IntPoly(coeffs)


def _run(key: str, check: Check) -> CaseResult:
    try:
        passed, detail = check()
    except CoxinvError as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    if not passed:
        logger.error(f"❌ {key}: {detail}")
    return CaseResult(key=key, passed=passed, detail=detail)


def _equal(got: IntPoly, want: IntPoly) -> Tuple[bool, Optional[str]]:
    if got == want:
        return True, None
    return False, f"got {got}, expected {want}"


# --- classical -------------------------------------------------------------

def _base_cases() -> Dict[str, Tuple[IntPoly, IntPoly]]:
    return {
        "base L_{2,1}": (class_poly_A(2, 1), _p(0, 1)),
        "base L_{1,0,1}": (class_poly_B(1, 0, 1), _p(0, 1)),
        "base L_{2,1,0}": (class_poly_B(2, 1, 0), _p(0, 1, 0, 1)),
        "base L_{2,0,1}": (class_poly_B(2, 0, 1), _p(0, 1, 0, 1)),
        "base L_{2,0,2}": (class_poly_B(2, 0, 2), _p(0, 0, 0, 0, 1)),
        "base D_{1,0,1}": (d_poly(1, 0, 1), _p(1)),
        "base D_{2,1,0}": (d_poly(2, 1, 0), _p(0, 2)),
        "base D_{2,0,1}": (d_poly(2, 0, 1), _p(1, 0, 1)),
        "base D_{2,0,2}": (d_poly(2, 0, 2), _p(0, 0, 1)),
        "base L_W(A_2)": (involution_poly(Family.A, 2), _p(1, 2, 0, 1)),
        "base L_W(B_2)": (involution_poly(Family.B, 2), _p(1, 2, 0, 2, 1)),
        "base L_W(D_2)": (involution_poly(Family.D, 2), _p(1, 2, 1)),
        "base L_(B\\D)_2": (bd_companion_poly(2), _p(1, 0, 1)),
    }


def classical_suite(allow_large: Optional[bool] = None) -> SuiteReport:
    cases: List[CaseResult] = []

    def worked_example():
        coeff = class_poly_A(5, 2).coefficient(6)
        oracle = oracle_class_poly(Family.A, 5, 2, 0).coefficient(6)
        scalar = alpha_count(5, 2, 6)
        return coeff == oracle == scalar == 4, f"recurrence {coeff}, oracle {oracle}, scalar {scalar}"

    cases.append(_run("worked example alpha_{5,2,6} = 4", worked_example))
    for key, (got, want) in _base_cases().items():
        cases.append(_run(key, lambda g=got, w=want: _equal(g, w)))
    logger.info(f"📚 {D2_TOTAL.key}: {D2_TOTAL.corrected}")

    for n in range(1, 9):
        for m in range(n // 2 + 1):
            cases.append(_run(f"oracle A n={n} m={m}", lambda n=n, m=m: _equal(
                class_poly_A(n, m), oracle_class_poly(Family.A, n, m, 0))))
    for n in range(1, 7):
        for m, e in cycle_types(Family.B, n):
            cases.append(_run(f"oracle B n={n} (m={m},e={e})", lambda n=n, m=m, e=e: _equal(
                class_poly_B(n, m, e), oracle_class_poly(Family.B, n, m, e))))
            cases.append(_run(f"lambda D n={n} (m={m},e={e})", lambda n=n, m=m, e=e: _equal(
                d_poly(n, m, e), oracle_lambda_poly(n, m, e))))
    for n in range(1, 8):
        for m, e in cycle_types(Family.D, n):
            cases.append(_run(f"oracle D n={n} (m={m},e={e})", lambda n=n, m=m, e=e: _equal(
                class_poly_D(n, m, e).polynomial, oracle_class_poly(Family.D, n, m, e))))

    def counts(fam: Family, n: int):
        for m, e in cycle_types(fam, n):
            poly = class_poly_A(n, m) if fam == Family.A else (
                class_poly_B(n, m, e) if fam == Family.B else class_poly_D(n, m, e).polynomial)
            if poly(1) != class_count(fam, n, m, e):
                return False, f"(m={m},e={e}): {poly(1)} != {class_count(fam, n, m, e)}"
        return True, None

    for fam in (Family.A, Family.B, Family.D):
        for n in range(2, 9):
            cases.append(_run(f"class counts {fam.value} n={n}", lambda f=fam, n=n: counts(f, n)))

    def telephone():
        values = {1: 1}
        for n in range(2, 15):
            values[n] = involution_poly(Family.A, n - 1)(1)
        for n in range(3, 15):
            if values[n] != values[n - 1] + (n - 1) * values[n - 2]:
                return False, f"I({n}) = {values[n]}"
        return True, None

    cases.append(_run("involution counts satisfy I(n) = I(n-1) + (n-1)I(n-2)", telephone))
    for n in range(1, 11):
        cases.append(_run(f"degree of L_W(B_{n}) is n^2", lambda n=n: (
            involution_poly(Family.B, n).degree == n * n, f"degree {involution_poly(Family.B, n).degree}")))

    def scalar_forms(n: int):
        for m in range(n // 2 + 1):
            poly = class_poly_A(n, m)
            for l in range(poly.degree + 2):
                if alpha_count(n, m, l) != poly.coefficient(l):
                    return False, f"alpha({n},{m},{l})"
            for e in range(n - 2 * m + 1):
                b, d = class_poly_B(n, m, e), class_poly_D(n, m, e).polynomial
                for l in range(max(b.degree, d.degree) + 2):
                    if beta_count(n, m, e, l) != b.coefficient(l):
                        return False, f"beta({n},{m},{e},{l})"
                    if delta_count(n, m, e, l) != d.coefficient(l):
                        return False, f"delta({n},{m},{e},{l})"
        return True, None

    for n in range(1, 9):
        cases.append(_run(f"scalar coefficient forms n={n}", lambda n=n: scalar_forms(n)))

    for n in range(2, 11, 2):
        half = n // 2
        cases.append(_run(f"fpf product A n={n}", lambda n=n, h=half: _equal(
            fpf_product_poly(Family.A, n), class_poly_A(n, h))))
        cases.append(_run(f"fpf product B n={n}", lambda n=n, h=half: _equal(
            fpf_product_poly(Family.B, n), class_poly_B(n, h, 0))))
        cases.append(_run(f"fpf product D n={n}", lambda n=n, h=half: _equal(
            fpf_product_poly(Family.D, n), class_poly_D(n, h, 0).polynomial)))

    def fpf_shape():
        for n in range(2, 13, 2):
            for fam in (Family.A, Family.B):
                poly = fpf_product_poly(fam, n)
                profile = [p for p in parity_profiles(poly) if not p.is_empty()][0]
                if not (is_palindromic(poly) and is_log_concave(profile) and is_unimodal(profile)):
                    return False, f"{fam.value} n={n}: {profile.values}"
        d4 = parity_profiles(fpf_product_poly(Family.D, 4))[1]
        if d4.values != [2, 2, 4, 2, 2] or is_log_concave(d4):
            return False, f"D n=4 profile {d4.values}"
        return True, None

    cases.append(_run("fpf products: A and B log-concave and symmetric, D n=4 not log-concave", fpf_shape))

    def performance():
        start = time.perf_counter()
        involution_poly(Family.B, 50)
        elapsed = time.perf_counter() - start
        return elapsed < 10.0, f"{elapsed:.2f}s"

    cases.append(_run("involution_poly(B, 50) under 10 s", performance))
    return SuiteReport(suite="classical", cases=sorted(cases, key=lambda c: c.key))


# --- reduction -------------------------------------------------------------

def _random_signed_perm(rng: random.Random, n: int) -> SignedPerm:
    letters = rng.sample(range(1, n + 1), n)
    return SignedPerm(v if rng.random() < 0.5 else -v for v in letters)


def reduction_suite(allow_large: Optional[bool] = None) -> SuiteReport:
    cases: List[CaseResult] = []
    for n in range(2, 7):
        def exhaustive(n=n):
            checked = 0
            for x in enumerate_involutions(Family.B, n):
                report = check_reduction(x)
                checked += 1
                if not report.all_hold:
                    return False, f"fails at {x} ({report.tau})"
            return True, f"{checked} involutions"

        cases.append(_run(f"reduction identities B{n}", exhaustive))

    def lemma_all_pairs():
        elements = list(all_signed_perms(3))
        bad = [(g, h) for g in elements for h in elements if not check_ngh(g, h)]
        return not bad, f"{len(elements) ** 2} pairs, {len(bad)} failures"

    def lemma_random_pairs():
        rng = random.Random(settings.RANDOM_SEED)
        for _ in range(1000):
            g, h = _random_signed_perm(rng, 5), _random_signed_perm(rng, 5)
            if not check_ngh(g, h):
                return False, f"fails at g={g} h={h}"
        return True, "1000 pairs"

    cases.append(_run("inversion-set product identity, all pairs B3", lemma_all_pairs))
    cases.append(_run("inversion-set product identity, random pairs B5", lemma_random_pairs))

    for n in range(1, 5):
        def word_length(n=n):
            for w, d in cayley_lengths_B(n).items():
                if length(w, Family.B) != d:
                    return False, f"{w}: length {length(w, Family.B)}, word length {d}"
            return True, None

        cases.append(_run(f"length formula equals word length B{n}", word_length))
    return SuiteReport(suite="reduction", cases=sorted(cases, key=lambda c: c.key))


# --- dihedral --------------------------------------------------------------

def dihedral_suite(allow_large: Optional[bool] = None) -> SuiteReport:
    cases: List[CaseResult] = []

    def closed_forms():
        for n in range(3, 201):
            oracle = dihedral_bfs_oracle(n)
            if corrected_closed_form(n) != oracle:
                return False, f"n={n}: corrected form {corrected_closed_form(n)} != {oracle}"
            literal = literal_closed_form(n)
            if n % 2 == 0 and literal != oracle:
                return False, f"n={n}: closed form disagrees"
            if n % 2 and literal is not None:
                return False, f"n={n}: quoted form should not be a polynomial"
        return True, "3 <= n <= 200"

    def order_eight():
        odd, even = parity_profiles(IntPoly.one() + sum(
            (c.polynomial for c in dihedral_classes(4).classes), IntPoly()))
        return odd.values == [2, 2] and even.values == [1, 0, 1], f"odd {odd.values}, even {even.values}"

    cases.append(_run("closed forms equal breadth-first search", closed_forms))
    cases.append(_run("I2(4) profiles", order_eight))
    logger.warning(f"⚠️ {DIHEDRAL_ODD.key}: {DIHEDRAL_ODD.corrected}")
    return SuiteReport(suite="dihedral", cases=sorted(cases, key=lambda c: c.key))


# --- exceptional -----------------------------------------------------------

def _rows(records) -> List[tuple]:
    return sorted((r.label, r.size, r.min_length, tuple(r.profile)) for r in records)


def exceptional_suite(allow_large: Optional[bool] = None) -> SuiteReport:
    allow = settings.ALLOW_LARGE if allow_large is None else allow_large
    tables = load_tables()
    cases: List[CaseResult] = []
    skipped: List[str] = []
    names = ["H3", "F4", "H4", "E6"] + (["E7"] if allow else [])
    if not allow:
        skipped.append("E7 engine reproduction (needs --allow-large)")

    for name in names:
        logger.info(f"🔎 Reproducing {name} from its root system")
        rs = build_root_system(name)
        table = tables[name]
        cases.append(_run(f"{name} classes from scratch", lambda rs=rs, t=table: (
            _rows(involution_classes(rs, allow_large=allow)) == _rows(t.classes),
            f"{len(t.classes)} classes")))
        cases.append(_run(f"{name} Poincare polynomial", lambda rs=rs, name=name: _equal(
            poincare_polynomial(rs, allow_large=allow), degree_product(name))))
        cases.append(_run(f"{name} longest element", lambda rs=rs, t=table, name=name: (
            rs.longest_length == t.longest_length and rs.longest_is_central == (name in CENTRAL_LONGEST),
            f"length {rs.longest_length}, central {rs.longest_is_central}")))

    for name, table in tables.items():
        cases.append(_run(f"{name} embedded table consistent", lambda t=table: (
            not check_table(t), "; ".join(check_table(t)) or None)))

    def e8_palindromes():
        for label, size in (("D4", 3150), ("A1^4", 113400)):
            if not is_palindromic(class_to_polynomial(get_class("E8", label, size))):
                return False, f"{label} is not palindromic"
        return True, None

    def e8_quoted_row():
        e8 = tables["E8"]
        quoted = e8.quoted_even_profile
        return (quoted is not None and quoted != e8.even_profile and is_unimodal(e8.even_profile),
                E8_EVEN_ROW.corrected)

    def e8_refused():
        try:
            list(enumerate_group(build_root_system("E8"), allow_large=True))
        except BudgetExceededError as e:
            return not e.allow_override, str(e)
        return False, "E8 enumeration was not refused"

    cases.append(_run("E8 D4 and A1^4 palindromic", e8_palindromes))
    cases.append(_run("E8 corrected even row", e8_quoted_row))
    cases.append(_run("E8 enumeration refused", e8_refused))
    return SuiteReport(suite="exceptional", cases=sorted(cases, key=lambda c: c.key), skipped=skipped)


# --- analysis --------------------------------------------------------------

def analysis_suite(allow_large: Optional[bool] = None) -> SuiteReport:
    cases: List[CaseResult] = []

    def b6_profile():
        even = parity_profiles(involution_poly(Family.B, 6))[1]
        return even.values == B6_EVEN_PROFILE and not is_unimodal(even), f"{even.values}"

    def log_concave_implies_unimodal():
        rng = random.Random(settings.RANDOM_SEED)
        seen = 0
        for _ in range(10_000):
            xs = [rng.randint(1, 6) for _ in range(rng.randint(1, 8))]
            if is_log_concave(xs):
                seen += 1
                if not is_unimodal(xs):
                    return False, f"{xs}"
        return True, f"{seen} log-concave samples"

    def scan():
        report = scan_counterexamples()
        detail = f"missing {report.missing}, extra {report.extra}, explained {sorted(report.explained)}"
        return report.matches and report.type_a_aggregates_log_concave, detail

    cases.append(_run("B6 even profile is not unimodal", b6_profile))
    cases.append(_run("log-concave positive sequences are unimodal", log_concave_implies_unimodal))
    cases.append(_run("counterexample scan reproduces the published lists", scan))
    return SuiteReport(suite="analysis", cases=sorted(cases, key=lambda c: c.key))


_RUNNERS = {
    "classical": classical_suite,
    "reduction": reduction_suite,
    "dihedral": dihedral_suite,
    "exceptional": exceptional_suite,
    "analysis": analysis_suite,
}


def run_suite(name: str, allow_large: Optional[bool] = None) -> List[SuiteReport]:
    """Run one suite, or every suite for 'all'"""
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for suite in names:
        if suite not in _RUNNERS:
            raise ValueError(f"unknown suite {suite!r}")
        start = time.perf_counter()
        logger.info(f"📚 Running {suite} suite")
        report = _RUNNERS[suite](allow_large=allow_large)
        status = "✅" if report.passed else "❌"
        logger.info(f"{status} {suite}: {len(report.cases) - len(report.failures)}/{len(report.cases)} "
                    f"passed in {time.perf_counter() - start:.1f}s")
        reports.append(report)
    return reports
