"""
Localizations xi^v(w) of affine Schubert classes at torus-fixed points.

xi^v(w) is computed from a reduced word a_1...a_l of w as the sum, over
reduced subwords whose product is v, of the product of the roots
r_{a_1}...r_{a_{j-1}} alpha_{a_j} at the chosen positions j. The sum is
organised as a left-to-right dynamic program over partial products, so
each distinct partial product is visited once per position.
"""

from __future__ import annotations

import os
import threading
from collections import OrderedDict
from typing import Sequence

import numpy as np

from .poly import Polynomial, divided_difference, weyl_act
from .rootsys import AffineRoot, CartanData
from .weyl import AffineWeylElement, bruhat_leq, element, reflection

DEFAULT_BUDGET = 200_000
BUDGET_ENV = "AFFSCHUBERT_CACHE_BUDGET"


class XiTable:
    """Thread-safe LRU memo for (v, w) -> xi^v(w)."""

    def __init__(self, budget: int | None = None):
        if budget is None:
            budget = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))
        self.budget = max(0, int(budget))
        self._store: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._store)

    def get(self, key):
        with self._lock:
            val = self._store.get(key)
            if val is not None:
                self._store.move_to_end(key)
                self.hits += 1
            else:
                self.misses += 1
            return val

    def put(self, key, value):
        if self.budget == 0:
            return
        with self._lock:
            self._store[key] = value
            self._store.move_to_end(key)
            while len(self._store) > self.budget:
                self._store.popitem(last=False)

    def clear(self):
        with self._lock:
            self._store.clear()

    def set_budget(self, budget: int):
        with self._lock:
            self.budget = max(0, int(budget))
            while len(self._store) > self.budget:
                self._store.popitem(last=False)


_TABLE = XiTable()


def default_table() -> XiTable:
    return _TABLE


def set_cache_budget(budget: int) -> None:
    _TABLE.set_budget(budget)


def _key(v: AffineWeylElement, w: AffineWeylElement):
    return (v.data.family, v.data.n, v._key, w._key)


def word_roots(data: CartanData, word: Sequence[int]) -> list[tuple[int, ...]]:
    """Level-zero roots r_{a_1}...r_{a_{j-1}} alpha_{a_j} for each position j."""
    r = data.rank
    prefix = np.eye(r, dtype=np.int64)
    out = []
    for i in word:
        out.append(tuple(int(x) for x in prefix @ np.array(data.level_zero_simple[i], dtype=np.int64)))
        prefix = prefix @ data.affine_reflections[i][:r, :r]
    return out


def inversion_roots(w: AffineWeylElement) -> list[tuple[int, ...]]:
    return word_roots(w.data, w.word)


def xi_diagonal(w: AffineWeylElement) -> Polynomial:
    """xi^w(w): the full word is the only embedding."""
    return Polynomial.product_of_roots(w.data.rank, inversion_roots(w))


def _suffix_elements(data: CartanData, word: Sequence[int]) -> list[AffineWeylElement]:
    # suffix[j] = r_{a_j} ... r_{a_l}; suffix[l] = id
    out = [AffineWeylElement.identity(data)]
    for i in reversed(word):
        out.append(out[-1].left_multiply_simple(i))
    out.reverse()
    return out


def _xi_dp(v: AffineWeylElement, w: AffineWeylElement, word: Sequence[int]) -> Polynomial:
    data = w.data
    target = v.length
    roots = word_roots(data, word)
    suffix = _suffix_elements(data, word)
    ident = AffineWeylElement.identity(data)
    states: dict[AffineWeylElement, Polynomial] = {ident: Polynomial.one(data.rank)}
    ok_cache: dict = {}

    def viable(u: AffineWeylElement, j: int) -> bool:
        # u must be a left factor of v and u^{-1} v must fit in the remaining letters
        key = (u, j)
        hit = ok_cache.get(key)
        if hit is not None:
            return hit
        rest = u.inverse() * v
        res = u.length + rest.length == target and rest.length <= len(word) - j
        if res and rest.length:
            res = bruhat_leq(rest, suffix[j])
        ok_cache[key] = res
        return res

    for j, i in enumerate(word):
        beta = roots[j]
        new: dict[AffineWeylElement, Polynomial] = {}
        for u, f in states.items():
            # skip letter j
            if viable(u, j + 1):
                g = new.get(u)
                new[u] = f if g is None else g + f
            # take letter j
            if u.length < target and not u.has_right_descent(i):
                ui = u.right_multiply_simple(i)
                if viable(ui, j + 1):
                    fb = f.mul_linear(beta)
                    g = new.get(ui)
                    new[ui] = fb if g is None else g + fb
        states = {u: f for u, f in new.items() if not f.is_zero()}
        if not states:
            break
    return states.get(v, Polynomial.zero(data.rank))


def xi(v: AffineWeylElement, w: AffineWeylElement, word: Sequence[int] | None = None,
       table: XiTable | None = None) -> Polynomial:
    """xi^v(w). ``word`` may supply an alternative reduced word for w."""
    if v.data != w.data:
        raise ValueError("v and w belong to different groups")
    if v.length > w.length:
        return Polynomial.zero(w.data.rank)
    if v.length == 0:
        return Polynomial.one(w.data.rank)
    if word is not None:
        word = tuple(word)
        if element(w.data, word) != w or len(word) != w.length:
            raise ValueError("supplied word is not a reduced word for w")
        return _xi_dp(v, w, word)
    if v == w:
        return xi_diagonal(w)
    table = _TABLE if table is None else table
    key = _key(v, w)
    hit = table.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(v, w):
        val = Polynomial.zero(w.data.rank)
    else:
        val = _xi_dp(v, w, w.word)
    table.put(key, val)
    return val


def xi_all(w: AffineWeylElement, max_len: int | None = None) -> dict[AffineWeylElement, Polynomial]:
    """xi^v(w) for every v <= w (with l(v) <= max_len if given); zeros omitted."""
    data = w.data
    word = w.word
    roots = word_roots(data, word)
    ident = AffineWeylElement.identity(data)
    states: dict[AffineWeylElement, Polynomial] = {ident: Polynomial.one(data.rank)}
    for j, i in enumerate(word):
        beta = roots[j]
        new = dict(states)
        for u, f in states.items():
            if (max_len is None or u.length < max_len) and not u.has_right_descent(i):
                ui = u.right_multiply_simple(i)
                fb = f.mul_linear(beta)
                g = new.get(ui)
                new[ui] = fb if g is None else g + fb
        states = {u: f for u, f in new.items() if not f.is_zero()}
    for v, f in states.items():
        _TABLE.put(_key(v, w), f)
    return states


def check_gkm(v: AffineWeylElement, w: AffineWeylElement, beta: AffineRoot) -> bool:
    """xi^v(w) - xi^v(r_beta w) is divisible by the level-zero image of beta."""
    rb = reflection(w.data, beta)
    diff = xi(v, w) - xi(v, rb * w)
    return diff.divides_by_linear(tuple(beta.finite))


def nilhecke_apply(w: AffineWeylElement, f: Polynomial) -> Polynomial:
    """w . f computed as sum_v (-1)^{l(v)} xi^v(w) A_v f (the r_i = 1 - alpha_i A_i expansion)."""
    data = w.data
    total = Polynomial.zero(data.rank)
    for v, c in xi_all(w).items():
        g = f
        for i in reversed(v.word):
            g = divided_difference(data, data.simple_root(i), g)
            if g.is_zero():
                break
        if not g.is_zero():
            term = c * g
            total = total - term if v.length % 2 else total + term
    return total


__all__ = [
    "XiTable",
    "check_gkm",
    "default_table",
    "inversion_roots",
    "nilhecke_apply",
    "set_cache_budget",
    "weyl_act",
    "word_roots",
    "xi",
    "xi_all",
    "xi_diagonal",
]
