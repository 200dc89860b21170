import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affschubert import ConfigurationError
from affschubert.pieri_sl import t_element
from affschubert.rootsys import AffineRoot, finite_roots, simple_reflection_on_root
from affschubert.weyl import (
    AffineWeylElement,
    bruhat_leq,
    canonical_reduced_word,
    element,
    enumerate_elements,
    enumerate_grassmannian_ideal,
    format_word,
    grassmannian_part,
    is_grassmannian,
    is_reduced,
    parse_word,
    reduced_words,
    reflection,
    subword_leq,
    translation_class,
)

from conftest import SL3, SL4, SO7, SP4, elements

import affschubert

A4 = affschubert.cartan_data("A", 5)


def test_parse_and_format():
    assert parse_word("0 1 2 1") == (0, 1, 2, 1)
    assert parse_word("0,1") == (0, 1)
    assert parse_word("") == ()
    assert format_word((2, 1, 0)) == "2 1 0"
    with pytest.raises(ConfigurationError):
        parse_word("0 x")
    with pytest.raises(ConfigurationError):
        element(SL3, [3])


@given(elements(SO7, 8))
def test_inverse(x):
    assert x * x.inverse() == AffineWeylElement.identity(SO7)
    assert x.inverse().length == x.length


def test_r0_matches_root_action():
    r0 = element(SL3, [0])
    roots = [AffineRoot(b, k) for b in finite_roots(SL3) for k in range(-2, 2)][:20]
    assert len(roots) == 20
    for beta in roots:
        assert r0.act_on_affine_root(beta) == simple_reflection_on_root(SL3, 0, beta)


def test_translation_examples():
    t0 = element(SL3, [0, 1, 2, 1])
    assert t0.is_translation()
    assert t0.length == 4
    assert element(SP4, [2, 1, 0, 1]).length == 4
    assert element(SP4, [2, 1, 0, 1]).is_translation()


def test_root_action_examples():
    ident = AffineWeylElement.identity(SL3)
    beta = AffineRoot((1, 0), 0)
    assert ident.act_on_affine_root(beta) == beta
    t = AffineWeylElement.translation(SL3, (1, 1))
    assert t.act_on_affine_root(beta) == AffineRoot((1, 0), -1)
    assert element(SL3, [0]).act_on_affine_root(AffineRoot((-1, -1), 1)) == AffineRoot((1, 1), -1)


def test_length_identity():
    assert AffineWeylElement.identity(SL3).length == 0
    assert AffineWeylElement.identity(SL3).word == ()


def test_bruhat_examples():
    t = element(SL3, [0, 1, 2, 1])
    assert bruhat_leq(AffineWeylElement.identity(SL3), t)
    assert bruhat_leq(element(SL3, [1, 2]), t)
    assert not bruhat_leq(element(SL3, [0, 1]), element(SL3, [1, 2]))


def test_grassmannian_examples():
    assert is_grassmannian(AffineWeylElement.identity(SL3))
    assert is_grassmannian(element(SL3, [1, 0]))
    assert not is_grassmannian(element(SL3, [1]))


def test_translation_class_examples():
    ident = AffineWeylElement.identity(SL3)
    assert translation_class(ident) == ident
    assert translation_class(element(SL3, [0])) == element(SL3, [0, 1, 2, 1])
    assert translation_class(element(SL3, [1, 0])) == element(SL3, [1, 0, 1, 2])


def test_grassmannian_ideal_examples():
    assert enumerate_grassmannian_ideal(SL3, 0) == [AffineWeylElement.identity(SL3)]
    got = [format_word(x.word) for x in enumerate_grassmannian_ideal(SL3, 2)]
    assert got == ["", "0", "1 0", "2 0"]
    assert element(SP4, [2, 1, 0]) in enumerate_grassmannian_ideal(SP4, 3)


def _bfs_grassmannian(d, max_len):
    # independent oracle: every word of length <= max_len, kept if reduced and Grassmannian
    out = set()
    for k in range(max_len + 1):
        for w in itertools.product(d.nodes, repeat=k):
            x = element(d, w)
            if x.length == k and all(not x.has_right_descent(i) for i in range(1, d.rank + 1)):
                out.add(x)
    return out


@pytest.mark.parametrize("d", [SL3, SP4, SL4], ids=lambda d: d.name)
def test_grassmannian_ideal_matches_bfs(d):
    assert set(enumerate_grassmannian_ideal(d, 4)) == _bfs_grassmannian(d, 4)


@pytest.mark.parametrize("d", [SL3, SP4], ids=lambda d: d.name)
def test_length_subadditive_exhaustive(d):
    elems = enumerate_elements(d, 4)
    for x in elems:
        for y in elems:
            xy = x * y
            assert xy.length <= x.length + y.length
            joined = canonical_reduced_word(x) + canonical_reduced_word(y)
            assert (xy.length == x.length + y.length) == is_reduced(d, joined)


@given(elements(SL4, 6), elements(SL4, 6))
def test_length_subadditive_random(x, y):
    assert (x * y).length <= x.length + y.length


@pytest.mark.parametrize("d", [SL3, SP4, SO7], ids=lambda d: d.name)
def test_canonical_word_round_trip(d):
    for x in enumerate_elements(d, 6 if d is not SO7 else 5):
        w = canonical_reduced_word(x)
        assert len(w) == x.length
        assert element(d, w) == x


def test_length_matches_word_reduction():
    # length equals the shortest word found by BFS
    for x in enumerate_elements(SL3, 5):
        assert min(len(w) for w in reduced_words(x)) == x.length


@pytest.mark.parametrize("d", [SL3, SP4], ids=lambda d: d.name)
def test_bruhat_matches_subword_exhaustive(d):
    elems = enumerate_elements(d, 5)
    for v in elems:
        for w in elems:
            if v.length <= w.length:
                assert bruhat_leq(v, w) == subword_leq(v, w)


@given(elements(A4, 5), elements(A4, 5))
def test_bruhat_matches_subword_random(v, w):
    assert bruhat_leq(v, w) == subword_leq(v, w)


@pytest.mark.parametrize("d", [SL3, SP4, SO7, SL4], ids=lambda d: d.name)
def test_translation_class_coset(d):
    for u in enumerate_grassmannian_ideal(d, 5):
        t = translation_class(u)
        assert t.is_translation()
        assert grassmannian_part(t) == u


@pytest.mark.parametrize("n", [3, 4])
def test_precedes_prevents_embedding(n):
    d = affschubert.cartan_data("A", n)
    for x in enumerate_elements(d, 6):
        rws = reduced_words(x)
        for i in range(n - 1):
            hit = any(
                any(w[a] == i + 1 and i in w[a + 1:] for a in range(len(w)))
                for w in rws
            )
            if hit:
                assert not bruhat_leq(x, t_element(n, i))


@given(st.data())
def test_reflection_is_involution(data):
    d = SP4
    beta = data.draw(st.sampled_from(finite_roots(d)))
    k = data.draw(st.integers(-2, 2))
    r = reflection(d, AffineRoot(beta, k))
    assert r * r == AffineWeylElement.identity(d)
    assert r.act_on_affine_root(AffineRoot(beta, k)) == AffineRoot(tuple(-b for b in beta), -k)
