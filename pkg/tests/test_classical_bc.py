import pytest

from affschubert import ConfigurationError, Polynomial
from affschubert.classical_bc import (
    build_MND,
    check_conjecture_matrix,
    check_oddball,
    j_sigma_bc,
    k_bound,
    pieri_cross,
    special_table,
)
from affschubert.localization import xi
from affschubert.peterson import j_coefficient
from affschubert.weyl import format_word

import golden


def test_sp4_table():
    tb = special_table("C", 2)
    assert tb.sigma[3] == (2, 1, 0)
    assert tb.t[2] == (2, 1, 0, 1)
    assert tb.sigma_hat_rtheta[3] == (1,)


def test_so7_table():
    tb = special_table("B", 3)
    for p, (sh, sg, t, shr) in golden.SO7_TABLE.items():
        assert format_word(tb.sigma_hat[p]) == sh
        assert format_word(tb.sigma[p]) == sg
        assert format_word(tb.t[p - 1]) == t
        assert format_word(tb.sigma_hat_rtheta[p]) == shr


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 6), ("C", 2), ("C", 4), ("B", 3), ("B", 5)])
def test_table_lengths(family, n):
    tb = special_table(family, n)
    assert tb.k == k_bound(family, n)
    for p in range(1, tb.k + 1):
        assert tb.el(tb.sigma[p]).length == p
        assert tb.el(tb.t[p - 1]).is_translation()


def test_k_bounds():
    assert k_bound("A", 5) == 4
    assert k_bound("C", 3) == 5
    assert k_bound("B", 3) == 4
    with pytest.raises(ConfigurationError):
        special_table("D", 4)


def test_sl3_matrices():
    mnd = build_MND("A", 3)
    assert mnd.M == golden.SL3_M
    assert mnd.N == golden.SL3_N
    assert mnd.D == golden.SL3_D
    assert mnd.nd_inverse() == golden.SL3_ND_INV


def test_sp4_matrices():
    mnd = build_MND("C", 2)
    assert mnd.M == golden.SP4_M
    assert mnd.N == golden.SP4_N
    assert mnd.D == golden.SP4_D
    assert mnd.nd_inverse() == golden.SP4_ND_INV


def test_so7_matrices():
    mnd = build_MND("B", 3)
    assert mnd.M == golden.SO7_M
    assert mnd.N == golden.SO7_N
    assert mnd.D == golden.SO7_D
    assert mnd.M[1][0] == Polynomial.linear((1, 1, 2))


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 5), ("C", 2), ("C", 3), ("B", 3), ("B", 4)])
def test_triangular_and_diagonal(family, n):
    mnd = build_MND(family, n)
    for i in range(mnd.k):
        for j in range(i + 1, mnd.k):
            assert mnd.M[i][j].is_zero() and mnd.N[i][j].is_zero()
        t = mnd.table.el(mnd.table.t[i])
        assert mnd.M[i][i] * mnd.N[i][i] == mnd.D[i]
        assert mnd.D[i] == xi(t, t)


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 4), ("A", 6), ("C", 2), ("C", 3), ("B", 3), ("B", 4)])
def test_conjecture_matrix(family, n):
    r = check_conjecture_matrix(family, n)
    assert r.verdict == "holds", r.to_json()
    assert r.witness is None


def test_report_json_shape():
    obj = check_conjecture_matrix("C", 2).to_json()
    assert obj == {"conjecture": "MN=D", "instance": {"family": "C", "n": 2, "k": 3},
                   "verdict": "holds", "witness": None}


@pytest.mark.parametrize("n", [2, 3])
def test_oddball(n):
    r = check_oddball(n)
    assert r.verdict == "holds", r.to_json()
    assert r.instance["ideal"][0] == ""
    if n == 2:
        assert "note" in r.instance


def test_sp4_vectors():
    tb = special_table("C", 2)
    for word, (column, js) in golden.SP4_VECTORS.items():
        x = tb.el(word)
        col = []
        for q in range(3):
            f = xi(x, tb.el(tb.t[q]))
            col.append(-f if x.length % 2 else f)
        assert tuple(col) == column
        assert tuple(j_sigma_bc("C", 2, m, x) for m in (1, 2, 3)) == js
        assert tuple(j_coefficient(tb.el(tb.sigma[m]), x) for m in (1, 2, 3)) == js


def test_sl3_vectors():
    tb = special_table("A", 3)
    for word, (column, js) in golden.SL3_VECTORS.items():
        x = tb.el(word)
        col = []
        for q in range(2):
            f = xi(x, tb.el(tb.t[q]))
            col.append(-f if x.length % 2 else f)
        assert tuple(col) == column
        assert tuple(j_sigma_bc("A", 3, m, x) for m in (1, 2)) == js


def test_normalization():
    tb = special_table("C", 2)
    assert j_sigma_bc("C", 2, 1, tb.el(tb.sigma[1])) == Polynomial.one(2)
    with pytest.raises(ValueError):
        j_sigma_bc("C", 2, 4, tb.el(tb.sigma[1]))


@pytest.mark.parametrize("family,n,max_len", [("C", 2, 7), ("B", 3, 6), ("C", 3, 5)])
def test_formula_matches_inversion(family, n, max_len):
    r = pieri_cross(family, n, max_len)
    assert r.verdict == "holds", r.to_json()
    assert r.details["checked"] > 0
