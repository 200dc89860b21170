import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affschubert import Polynomial
from affschubert.localization import (
    XiTable,
    check_gkm,
    inversion_roots,
    nilhecke_apply,
    word_roots,
    xi,
    xi_all,
    xi_diagonal,
)
from affschubert.poly import weyl_act
from affschubert.rootsys import AffineRoot
from affschubert.weyl import (
    AffineWeylElement,
    bruhat_leq,
    element,
    enumerate_elements,
    reduced_words,
)

from conftest import SL3, SL4, SO7, SP4, elements, homogeneous


def brute_xi(v, w):
    """Sum over all reduced subwords of w's word that multiply to v."""
    d = w.data
    word = w.word
    roots = word_roots(d, word)
    total = Polynomial.zero(d.rank)
    for k in range(v.length, v.length + 1):
        for pos in itertools.combinations(range(len(word)), k):
            sub = [word[p] for p in pos]
            if element(d, sub) == v:
                total = total + Polynomial.product_of_roots(d.rank, [roots[p] for p in pos])
    return total


def test_identity_localization():
    for w in enumerate_elements(SP4, 5):
        assert xi(AffineWeylElement.identity(SP4), w) == Polynomial.one(2)


def test_sl3_examples():
    r0 = element(SL3, [0])
    assert xi(r0, r0) == -Polynomial.linear((1, 1))
    assert xi(r0, element(SL3, [1, 0])) == -Polynomial.linear((0, 1))


@pytest.mark.parametrize("d", [SL3, SP4], ids=lambda d: d.name)
def test_matches_brute_force(d):
    elems = enumerate_elements(d, 5)
    for w in elems:
        for v in elems:
            if v.length <= w.length:
                assert xi(v, w) == brute_xi(v, w)


@given(elements(SO7, 7), elements(SO7, 4))
def test_matches_brute_force_so7(w, v):
    assert xi(v, w) == brute_xi(v, w)


@pytest.mark.parametrize("d", [SL3, SP4, SL4], ids=lambda d: d.name)
def test_support_and_diagonal(d):
    elems = enumerate_elements(d, 6 if d is not SL4 else 5)
    for w in elems:
        assert not xi(w, w).is_zero()
        assert xi(w, w) == xi_diagonal(w)
        for v in elems:
            if v.length <= w.length and not bruhat_leq(v, w):
                assert xi(v, w).is_zero()


@pytest.mark.parametrize("d", [SL3, SP4, SO7], ids=lambda d: d.name)
def test_xi_all_agrees(d):
    for w in enumerate_elements(d, 5):
        table = xi_all(w)
        for v, f in table.items():
            assert xi(v, w) == f
        assert table[w] == xi_diagonal(w)


def test_gkm_examples():
    ident = AffineWeylElement.identity(SL3)
    w = element(SL3, [1, 0])
    assert check_gkm(ident, w, AffineRoot((1, 0), 0))
    assert check_gkm(element(SL3, [0]), w, AffineRoot((1, 0), 0))


def _affine_roots(d, max_height):
    out = []
    for beta in d.positive_roots:
        for k in range(0, max_height):
            out.append(AffineRoot(beta, k))
            if k:
                out.append(AffineRoot(tuple(-b for b in beta), k))
    return out


def test_gkm_sweep_sl3():
    v = element(SL3, [1, 0])
    for w in enumerate_elements(SL3, 5):
        for beta in _affine_roots(SL3, 2):
            assert check_gkm(v, w, beta)


@pytest.mark.parametrize("d", [SP4, SO7, SL4], ids=lambda d: d.name)
def test_gkm_sweep(d):
    roots = _affine_roots(d, 2)
    for w in enumerate_elements(d, 3):
        for v in xi_all(w):
            for beta in roots:
                assert check_gkm(v, w, beta)


@pytest.mark.parametrize("d", [SL3, SP4, SO7], ids=lambda d: d.name)
def test_product_rule_on_diagonal(d):
    elems = enumerate_elements(d, 3)
    for u in elems:
        for v in elems:
            uv = u * v
            if uv.length == u.length + v.length:
                assert xi(uv, uv) == xi(u, u) * weyl_act(u, xi(v, v))


@pytest.mark.parametrize("d", [SL3, SP4, SO7], ids=lambda d: d.name)
def test_inverse_rule(d):
    elems = enumerate_elements(d, 6 if d is not SO7 else 5)
    for w in elems:
        for v in xi_all(w):
            f = weyl_act(w, xi(v.inverse(), w.inverse()))
            if v.length % 2:
                f = -f
            assert xi(v, w) == f


@pytest.mark.parametrize("d", [SL3, SP4, SO7, SL4], ids=lambda d: d.name)
def test_reduced_word_independence(d):
    rng = random.Random(7)
    elems = [w for w in enumerate_elements(d, 6) if w.length >= 3]
    for w in rng.sample(elems, 12):
        rws = reduced_words(w)
        alts = rng.sample(rws, min(3, len(rws)))
        for v in rng.sample(list(xi_all(w)), min(5, len(xi_all(w)))):
            base = xi(v, w)
            for word in alts:
                assert xi(v, w, word=word) == base


@pytest.mark.parametrize("d", [SL3, SP4, SO7], ids=lambda d: d.name)
@given(data=st.data())
def test_nilhecke_expansion(d, data):
    w = data.draw(elements(d, 4))
    f = data.draw(homogeneous(d.rank, 2))
    assert nilhecke_apply(w, f) == weyl_act(w, f)


def test_inversion_roots_are_affine_inversions():
    # inversion roots of w are the level-zero images of the positive roots that w^{-1} makes negative
    for w in enumerate_elements(SP4, 5):
        assert len(inversion_roots(w)) == w.length


def test_supplied_word_must_be_reduced():
    w = element(SL3, [0, 1])
    with pytest.raises(ValueError):
        xi(element(SL3, [0]), w, word=[1, 0])


def test_cache_budget_eviction():
    table = XiTable(budget=2)
    ws = enumerate_elements(SL3, 3)[1:5]
    v = element(SL3, [0])
    for w in ws:
        xi(v, w, table=table)
    assert len(table) <= 2
    table.set_budget(0)
    assert len(table) == 0


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("AFFSCHUBERT_CACHE_BUDGET", "17")
    assert XiTable().budget == 17
