"""
The affine Weyl group W_af = W x| Q^vee.

An element is stored as the integer matrix of its action on affine roots
beta + k*delta, in coordinates (beta_1..beta_r, k). Products are matrix
products, equality is matrix equality, and the decomposition x = u * t_lam
(translation on the right) is read off the matrix:

    x (beta + k delta) = u.beta + (k - <lam, beta>) delta.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .rootsys import AffineRoot, CartanData, ConfigurationError

Word = tuple[int, ...]


def parse_word(text: str | Sequence[int]) -> Word:
    """Space-separated node indices, e.g. ``"0 1 2 1"``; empty string is the identity."""
    if isinstance(text, str):
        parts = text.replace(",", " ").split()
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ConfigurationError(f"invalid word {text!r}: letters must be integers") from exc
    return tuple(int(i) for i in text)


def format_word(word: Iterable[int]) -> str:
    return " ".join(str(i) for i in word)


class AffineWeylElement:
    __slots__ = ("data", "m", "_inv", "_key", "_hash", "_length", "_word")

    def __init__(self, data: CartanData, m: np.ndarray, inv: np.ndarray | None = None):
        self.data = data
        self.m = m
        self._inv = inv
        self._key = m.tobytes()
        self._hash = hash(self._key)
        self._length = None
        self._word = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, data: CartanData) -> "AffineWeylElement":
        e = np.eye(data.rank + 1, dtype=np.int64)
        return cls(data, e, e)

    @classmethod
    def simple(cls, data: CartanData, i: int) -> "AffineWeylElement":
        return _simple(data, i)

    @classmethod
    def from_word(cls, data: CartanData, word: Iterable[int]) -> "AffineWeylElement":
        x = cls.identity(data)
        for i in parse_word(word) if isinstance(word, str) else word:
            x = x.right_multiply_simple(int(i))
        return x

    @classmethod
    def translation(cls, data: CartanData, lam: Sequence[int]) -> "AffineWeylElement":
        """t_lam for lam in coroot coordinates (basis alpha_1^vee..alpha_r^vee)."""
        r = data.rank
        if len(lam) != r:
            raise ValueError("translation vector has wrong length")
        m = np.eye(r + 1, dtype=np.int64)
        inv = np.eye(r + 1, dtype=np.int64)
        for j in range(r):
            # <lam, alpha_j> = sum_i lam_i a_ij
            p = sum(int(lam[i]) * data.finite_cartan[i][j] for i in range(r))
            m[r, j] = -p
            inv[r, j] = p
        return cls(data, m, inv)

    @classmethod
    def from_finite_matrix(cls, data: CartanData, u: np.ndarray) -> "AffineWeylElement":
        r = data.rank
        m = np.eye(r + 1, dtype=np.int64)
        m[:r, :r] = u
        inv = np.eye(r + 1, dtype=np.int64)
        inv[:r, :r] = np.rint(np.linalg.inv(u)).astype(np.int64)
        return cls(data, m, inv)

    # -- group law --------------------------------------------------------

    def _check(self, other):
        if other.data is not self.data and other.data != self.data:
            raise ConfigurationError("elements belong to different affine Weyl groups")

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        self._check(other)
        return AffineWeylElement(self.data, self.m @ other.m, other.inverse().m @ self.inverse().m)

    def inverse(self) -> "AffineWeylElement":
        if self._inv is None:
            inv = np.rint(np.linalg.inv(self.m.astype(float))).astype(np.int64)
            self._inv = inv
        out = AffineWeylElement(self.data, self._inv, self.m)
        return out

    def right_multiply_simple(self, i: int) -> "AffineWeylElement":
        s = self.data.affine_reflections[i]
        return AffineWeylElement(self.data, self.m @ s, s @ self.inverse().m)

    def left_multiply_simple(self, i: int) -> "AffineWeylElement":
        s = self.data.affine_reflections[i]
        return AffineWeylElement(self.data, s @ self.m, self.inverse().m @ s)

    def __eq__(self, other):
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return self._key == other._key and self.data == other.data

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"AffineWeylElement({self.data.family}{self.data.n}, [{format_word(self.word)}])"

    # -- decomposition ----------------------------------------------------

    @property
    def rank(self) -> int:
        return self.data.rank

    @property
    def finite_matrix(self) -> np.ndarray:
        """Level-zero action on root coordinates (columns = images of alpha_1..alpha_r)."""
        r = self.data.rank
        return self.m[:r, :r]

    def finite_part(self) -> "AffineWeylElement":
        """u in x = u * t_lam."""
        return AffineWeylElement.from_finite_matrix(self.data, self.finite_matrix)

    @property
    def lam(self) -> tuple[int, ...]:
        """Coroot coordinates of lam in x = u * t_lam."""
        r = self.data.rank
        g = [int(v) for v in self.m[r, :r]]
        # g_j = -<lam, alpha_j> = -sum_i lam_i a_ij  =>  lam = -(A^T)^{-1} g
        inv = self.data.inverse_cartan
        lam = []
        for i in range(r):
            v = -sum(inv[j][i] * g[j] for j in range(r))
            if Fraction(v).denominator != 1:
                raise ArithmeticError("non-integral translation part")
            lam.append(int(v))
        return tuple(lam)

    def is_translation(self) -> bool:
        r = self.data.rank
        return bool(np.array_equal(self.m[:r, :r], np.eye(r, dtype=np.int64)))

    def is_finite(self) -> bool:
        r = self.data.rank
        return not self.m[r, :r].any()

    # -- action on roots --------------------------------------------------

    def act_vector(self, v: np.ndarray) -> np.ndarray:
        return self.m @ v

    def act_on_affine_root(self, beta: AffineRoot) -> AffineRoot:
        v = np.array(list(beta.finite) + [beta.delta], dtype=np.int64)
        img = self.m @ v
        r = self.data.rank
        return AffineRoot(tuple(int(x) for x in img[:r]), int(img[r]))

    def level_zero_root(self, i: int) -> tuple[int, ...]:
        """Finite part of x . alpha_i (alpha_0 -> -theta)."""
        img = self.m[: self.data.rank] @ self.data.simple_affine_vectors[i]
        return tuple(int(x) for x in img)

    def has_right_descent(self, i: int) -> bool:
        """x r_i < x  iff  x.alpha_i < 0."""
        v = self.m @ self.data.simple_affine_vectors[i]
        return _is_negative(v, self.data.rank)

    def has_left_descent(self, i: int) -> bool:
        """r_i x < x  iff  x^{-1}.alpha_i < 0."""
        v = self.inverse().m @ self.data.simple_affine_vectors[i]
        return _is_negative(v, self.data.rank)

    def right_descents(self) -> list[int]:
        return [i for i in self.data.nodes if self.has_right_descent(i)]

    def left_descents(self) -> list[int]:
        return [i for i in self.data.nodes if self.has_left_descent(i)]

    # -- length and words -------------------------------------------------

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = _length(self)
        return self._length

    def __len__(self):
        return self.length

    @property
    def word(self) -> Word:
        if self._word is None:
            self._word = canonical_reduced_word(self)
        return self._word

    def sort_key(self):
        return (self.length, self.word)


def _is_negative(v: np.ndarray, r: int) -> bool:
    k = v[r]
    if k != 0:
        return bool(k < 0)
    return bool(v[:r].sum() < 0)


@lru_cache(maxsize=None)
def _positive_root_matrix(data: CartanData) -> np.ndarray:
    return np.array(data.positive_roots, dtype=np.int64).T


def _length(x: AffineWeylElement) -> int:
    # count inversions: sum over finite positive alpha of |<g, alpha> - [u alpha < 0]|
    r = x.data.rank
    p = _positive_root_matrix(x.data)
    g = x.m[r, :r] @ p
    neg = (x.m[:r, :r] @ p).sum(axis=0) < 0
    return int(np.abs(g - neg.astype(np.int64)).sum())


@lru_cache(maxsize=None)
def _simple(data: CartanData, i: int) -> AffineWeylElement:
    if not (0 <= i <= data.rank):
        raise ConfigurationError(f"node {i} out of range 0..{data.rank}")
    s = data.affine_reflections[i]
    return AffineWeylElement(data, s, s)


def identity(data: CartanData) -> AffineWeylElement:
    return AffineWeylElement.identity(data)


def element(data: CartanData, word) -> AffineWeylElement:
    """Evaluate a word (sequence or space-separated string) in W_af."""
    w = parse_word(word)
    for i in w:
        if not (0 <= i <= data.rank):
            raise ConfigurationError(f"invalid letter {i}: nodes are 0..{data.rank}")
    return AffineWeylElement.from_word(data, w)


def multiply(x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
    return x * y


def act_on_affine_root(x: AffineWeylElement, beta: AffineRoot) -> AffineRoot:
    return x.act_on_affine_root(beta)


def length(x: AffineWeylElement) -> int:
    return x.length


def canonical_reduced_word(x: AffineWeylElement) -> Word:
    """Strip the smallest left descent repeatedly."""
    data = x.data
    r = data.rank
    y = x.inverse()
    ym = y.m.copy()
    word = []
    vecs = data.simple_affine_vectors
    refl = data.affine_reflections
    target = x.length
    while len(word) < target:
        for i in range(r + 1):
            if _is_negative(ym @ vecs[i], r):
                word.append(i)
                ym = ym @ refl[i]
                break
        else:  # pragma: no cover
            raise RuntimeError("no descent found for a non-identity element")
    return tuple(word)


def is_reduced(data: CartanData, word: Sequence[int]) -> bool:
    return element(data, word).length == len(word)


# -- Bruhat order -----------------------------------------------------------


@lru_cache(maxsize=1 << 18)
def bruhat_leq(v: AffineWeylElement, w: AffineWeylElement) -> bool:
    """v <= w in Bruhat order (descent recursion)."""
    lv, lw = v.length, w.length
    if lv > lw:
        return False
    if lv == 0:
        return True
    if lv == lw:
        return v == w
    i = w.word[0]  # smallest left descent of w
    wi = w.left_multiply_simple(i)
    if v.has_left_descent(i):
        return bruhat_leq(v.left_multiply_simple(i), wi)
    return bruhat_leq(v, wi)


def subword_leq(v: AffineWeylElement, w: AffineWeylElement) -> bool:
    """Brute-force Bruhat test: some subword of w's reduced word is a reduced word for v."""
    data = v.data
    target = v.length
    states = {AffineWeylElement.identity(data)}
    for i in w.word:
        new = set(states)
        for u in states:
            if u.length < target and not u.has_right_descent(i):
                new.add(u.right_multiply_simple(i))
        states = new
    return v in states


# -- Grassmannian elements --------------------------------------------------


def is_grassmannian(x: AffineWeylElement) -> bool:
    """x is minimal in its coset x W: x.alpha_i > 0 for every finite i."""
    return not any(x.has_right_descent(i) for i in range(1, x.data.rank + 1))


def translation_class(u: AffineWeylElement) -> AffineWeylElement:
    """The translation t with t W = u W; for u = w t_mu this is t_{w mu}."""
    if not is_grassmannian(u):
        raise ValueError(f"{u!r} is not Grassmannian")
    return u * u.finite_part().inverse()


def grassmannian_part(x: AffineWeylElement) -> AffineWeylElement:
    """Minimal length representative of x W."""
    r = x.data.rank
    changed = True
    while changed:
        changed = False
        for i in range(1, r + 1):
            if x.has_right_descent(i):
                x = x.right_multiply_simple(i)
                changed = True
    return x


def enumerate_grassmannian_ideal(data: CartanData, max_len: int) -> list[AffineWeylElement]:
    """All Grassmannian elements of length <= max_len, by (length, canonical word)."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    layer = [AffineWeylElement.identity(data)]
    out = list(layer)
    for _ in range(max_len):
        nxt = {}
        for x in layer:
            for i in data.nodes:
                if not x.has_left_descent(i):
                    y = x.left_multiply_simple(i)
                    if is_grassmannian(y):
                        nxt[y] = y
        layer = list(nxt.values())
        out.extend(layer)
    out.sort(key=lambda e: e.sort_key())
    return out


def enumerate_elements(data: CartanData, max_len: int) -> list[AffineWeylElement]:
    """All elements of W_af with length <= max_len, by (length, canonical word)."""
    layer = [AffineWeylElement.identity(data)]
    out = list(layer)
    for _ in range(max_len):
        nxt = {}
        for x in layer:
            for i in data.nodes:
                if not x.has_right_descent(i):
                    y = x.right_multiply_simple(i)
                    nxt[y] = y
        layer = list(nxt.values())
        out.extend(layer)
    out.sort(key=lambda e: e.sort_key())
    return out


def bruhat_interval_below(w: AffineWeylElement, max_len: int | None = None) -> list[AffineWeylElement]:
    """All v <= w (optionally with length <= max_len), via subwords of w's word."""
    data = w.data
    states = {AffineWeylElement.identity(data)}
    for i in w.word:
        new = set(states)
        for u in states:
            if (max_len is None or u.length < max_len) and not u.has_right_descent(i):
                new.add(u.right_multiply_simple(i))
        states = new
    return sorted(states, key=lambda e: e.sort_key())


def reduced_words(x: AffineWeylElement) -> list[Word]:
    """Every reduced word of x (exponential; for small elements only)."""
    return sorted(_reduced_words(x))


@lru_cache(maxsize=1 << 14)
def _reduced_words(x: AffineWeylElement) -> frozenset:
    if x.length == 0:
        return frozenset({()})
    out = set()
    for i in x.data.nodes:
        if x.has_right_descent(i):
            for w in _reduced_words(x.right_multiply_simple(i)):
                out.add(w + (i,))
    return frozenset(out)


def reflection(data: CartanData, beta: AffineRoot) -> AffineWeylElement:
    """The affine reflection r_beta for a real affine root beta."""
    fin = tuple(beta.finite)
    k = beta.delta
    if not any(fin):
        raise ValueError("imaginary roots have no reflection")
    # work with the positive one of +-beta
    if k < 0 or (k == 0 and sum(fin) < 0):
        fin, k = tuple(-b for b in fin), -k
    path = []
    cur = AffineRoot(fin, k)
    from .rootsys import simple_reflection_on_root

    while True:
        simple = None
        for i in data.nodes:
            if tuple(cur.finite) == data.simple_root(i) and cur.delta == (1 if i == 0 else 0):
                simple = i
                break
        if simple is not None:
            break
        for i in data.nodes:
            c = data.pairing(i, cur.finite)
            if c > 0:
                cur = simple_reflection_on_root(data, i, cur)
                path.append(i)
                break
        else:  # pragma: no cover
            raise ValueError(f"{beta} is not a real affine root")
    # beta = r_{path[0]} ... r_{path[-1]} alpha_simple
    p = AffineWeylElement.from_word(data, path)
    return p * _simple(data, simple) * p.inverse()
