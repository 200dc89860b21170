"""Frozen reference values for SL_3, Sp_4, SO_7 and the SL_8 Pieri instance."""

from affschubert import Polynomial, RootFraction


def P(*roots, sign=1, nvars=None):
    """Signed product of linear forms given as coordinate tuples."""
    nvars = nvars if nvars is not None else len(roots[0])
    return Polynomial.product_of_roots(nvars, roots, sign)


def F(*roots, sign=1, nvars=None):
    """sign / prod(roots)."""
    nvars = nvars if nvars is not None else len(roots[0])
    return RootFraction.inverse_roots(nvars, roots, sign)


ZERO2 = Polynomial.zero(2)
ZERO3 = Polynomial.zero(3)
ONE2 = Polynomial.one(2)

# SL_3: a1 = (1,0), a2 = (0,1)
A1, A2, A12 = (1, 0), (0, 1), (1, 1)
SL3_M = [[P(A12), ZERO2], [P(A2), P(A1, A2, sign=-1)]]
SL3_N = [[P(A1, A2, A12), ZERO2], [P(A2, A12), P(A2, A12)]]
SL3_D = [P(A1, A2, A12, A12), P(A1, A2, A2, A12, sign=-1)]
SL3_ND_INV = [[F(A12), RootFraction.from_poly(ZERO2)], [F(A1, A12), F(A1, A2, sign=-1)]]
# x -> ((-1)^l xi^x(t_0), (-1)^l xi^x(t_1)) and (j_{sigma_1}^x, j_{sigma_2}^x)
SL3_VECTORS = {
    (1, 2): ((P(A2, A12), P(A2, A2)), (P(A2), ZERO2)),
    (1, 0, 2): ((ZERO2, P(A1, A2, A2, sign=-1)), (ZERO2, P(A2))),
}

# Sp_4: theta = 2a1 + a2
C21 = (2, 1)
SP4_M = [
    [P(C21), ZERO2, ZERO2],
    [P(A2), P(A1, A2, sign=-1), ZERO2],
    [P(A2, sign=-1), P(A2, A12), P(A2, A2, A12, sign=-1)],
]
SP4_N = [
    [P(A1, A12, C21), ZERO2, ZERO2],
    [P(A12, C21), P(A2, A12), ZERO2],
    [P(C21), P(A12), P(A1)],
]
SP4_D = [P(A1, A12, C21, C21), P(A1, A2, A2, A12, sign=-1), P(A1, A2, A2, A12, sign=-1)]
_Z = RootFraction.from_poly(ZERO2)
SP4_ND_INV = [
    [F(C21), _Z, _Z],
    [F(A1, C21), F(A1, A2, sign=-1), _Z],
    [F(A1, A12, C21), F(A1, A2, A2, sign=-1), F(A2, A2, A12, sign=-1)],
]
SP4_VECTORS = {
    (0, 1, 2): ((P(A12, C21, C21), P(A2, A2, A12), ZERO2), (P(A12, C21), P(A12) * 2, ONE2)),
    (1, 2, 1): ((P(A1, A12, C21), ZERO2, ZERO2), (P(A1, A12), P(A12), ONE2)),
}


def a(ijk: str):
    """alpha_{ijk} = i a1 + j a2 + k a3."""
    return tuple(int(c) for c in ijk)


def _p(*codes, sign=1, coef=1):
    return P(*(a(c) for c in codes), sign=sign) * coef


SO7_M = [
    [_p("122"), ZERO3, ZERO3, ZERO3],
    [_p("112"), _p("010", "112", sign=-1), ZERO3, ZERO3],
    [_p("110"), _p("110", "012", sign=-1), _p("110", "012", "001"), ZERO3],
    [_p("100"), _p("100", "011", sign=-1, coef=2), _p("100", "011", "012"),
     _p("100", "010", "011", "012", sign=-1)],
]
SO7_N = [
    [_p("110", "111", "112", "122", "010", "011", "012"), ZERO3, ZERO3, ZERO3],
    [_p("110", "111", "112", "122", "011", "012"), _p("100", "111", "112", "122", "012", "001"), ZERO3, ZERO3],
    [_p("110", "111", "112", "122", "011", coef=2), _p("100", "111", "112", "122", "012"),
     _p("100", "110", "111", "122", "010"), ZERO3],
    [_p("110", "111", "112", "122"), _p("100", "111", "112", "122"), _p("100", "110", "111", "122"),
     _p("100", "110", "111", "112")],
]
SO7_D = [
    _p("110", "111", "112", "122", "122", "010", "011", "012"),
    _p("100", "111", "112", "112", "122", "010", "012", "001", sign=-1),
    _p("100", "110", "110", "111", "122", "010", "012", "001"),
    _p("100", "100", "110", "111", "112", "010", "011", "012", sign=-1),
]

SO7_TABLE = {
    1: ("", "0", "0 2 3 2 1 2 3 2", "2 3 2 1 2 3 2"),
    2: ("2", "2 0", "2 0 2 3 2 1 2 3", "3 2 1 2 3 2"),
    3: ("3 2", "3 2 0", "3 2 0 2 3 2 1 2", "2 1 2 3 2"),
    4: ("2 3 2", "2 3 2 0", "2 3 2 0 2 3 2 1", "1 2 3 2"),
    5: ("0 2 3 2", "0 2 3 2 0", "0 2 3 2 0 1 2 3 2 1", "2 3 2"),
}

PIERI_N = 8
PIERI_M = 4
PIERI_X = (0, 4, 5, 7, 4, 2, 1)
PIERI_LATEX = r"(\alpha_{1}^{7})(\alpha_{5}^{7})(\alpha_{1}^{4}+\alpha_{3}^{7}+\alpha_{4}^{7})"


def pieri_value():
    def al(lo, hi):
        return tuple(1 if lo <= i <= hi else 0 for i in range(1, 8))

    return P(al(1, 7), al(5, 7)) * (Polynomial.linear(al(1, 4)) + Polynomial.linear(al(3, 7))
                                    + Polynomial.linear(al(4, 7)))
