"""
Corrections to published values, applied throughout the library
"""
from typing import List

from ..models.verification import Erratum

D_101 = Erratum(
    key="d-base-1-0-1",
    quoted="D_{1,0,1} = t",
    corrected="D_{1,0,1} = 1",
    evidence="(-1) in W(B_1) sends only the short root e_1 negative, so |Λ| = 0; "
             "the recurrence needs the value 1 to produce D_{2,0,1} = 1 + t^2",
)

D2_TOTAL = Erratum(
    key="d2-total",
    quoted="L_{W(D_2)} = 1 + 2t",
    corrected="L_{W(D_2)} = 1 + 2t + t^2",
    evidence="W(D_2) = W(A_1) x W(A_1) has four elements, all involutions; "
             "D_{2,0,2} = t^2 is the missing term",
)

DIHEDRAL_ODD = Erratum(
    key="dihedral-odd-n",
    quoted="L_{I2(n)} = 1 + t^n + 2t(1 - t^n)/(1 - t^2) for all n",
    corrected="for odd n: 2t(1 + t^2 + ... + t^(n-3)) + t^n + 1",
    evidence="for odd n there are n reflections of lengths 1, 3, ..., n; the quoted "
             "quotient is not a polynomial; breadth-first search agrees with the correction",
)

H4_CENTRAL = Erratum(
    key="h4-central-class",
    quoted="H4 class H4: size 1, minimal length 15",
    corrected="H4 class H4: size 1, minimal length 60",
    evidence="the longest element of H4 is central of length 60 (the number of positive roots)",
)

E8_EVEN_ROW = Erratum(
    key="e8-even-row",
    quoted="E8 even aggregate row without the A1^4 contribution",
    corrected="E8 even aggregate = identity + A1^2 + A1^4 + D4 + D6 + E8 class sums; "
              "the corrected row is unimodal",
    evidence="summing all class polynomials with the identity reproduces the odd row "
             "exactly and differs from the quoted even row by the A1^4 profile",
)

B_CLASS_COUNT = Erratum(
    key="b-class-count",
    quoted="|{type (m,e) involutions in W(B_n)}| = n!/(2^m m! e! (n-2m-e)!)",
    corrected="n!/(m! e! (n-2m-e)!)",
    evidence="each transposition pair carries two sign patterns (+r +s) and (-r -s); "
             "exhaustive enumeration matches the corrected count",
)

D_FPF_LOG_CONCAVITY = Erratum(
    key="d-fpf-log-concavity",
    quoted="fixed-point-free D products fail log-concavity at n = 4",
    corrected="they fail at n = 4 and n = 6, and are log-concave at n = 2, 8, 10, 12",
    evidence="n = 6 even profile [2,4,8,10,14,14,16,14,14,10,8,4,2] has 14^2 < 14*16",
)

ERRATA: List[Erratum] = [
    D_101,
    D2_TOTAL,
    DIHEDRAL_ODD,
    H4_CENTRAL,
    E8_EVEN_ROW,
    B_CLASS_COUNT,
    D_FPF_LOG_CONCAVITY,
]


def list_errata() -> List[Erratum]:
    return list(ERRATA)
