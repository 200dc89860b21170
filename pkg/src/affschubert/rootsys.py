"""
Affine Cartan data for the untwisted types A_{n-1}^(1), B_n^(1), C_n^(1).

Nodes are numbered 0..r with 0 the affine node. Everything downstream works
at level zero: finite roots are integer vectors in the basis alpha_1..alpha_r
and alpha_0 is replaced by -theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .poly import Polynomial, RootVector


class ConfigurationError(ValueError):
    """Unsupported family/rank or malformed input."""


class AffineRoot(NamedTuple):
    finite: RootVector
    delta: int = 0


FAMILIES = ("A", "B", "C")


def _affine_cartan(family: str, n: int) -> list[list[int]]:
    if family == "A":
        r = n - 1
        size = r + 1
        if size == 2:
            return [[2, -2], [-2, 2]]
        a = [[0] * size for _ in range(size)]
        for i in range(size):
            a[i][i] = 2
            a[i][(i + 1) % size] = -1
            a[i][(i - 1) % size] = -1
        return a
    size = n + 1
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = 2
    if family == "C":
        for i in range(n):
            a[i][i + 1] = a[i + 1][i] = -1
        a[1][0] = -2
        a[n - 1][n] = -2
        return a
    # B: nodes 0 and 1 both attach to 2, chain 2..n, alpha_n short
    edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    a[n][n - 1] = -2
    if n == 2:
        # node 2 is both the short end and the branch point
        a[2][0] = -2
    return a


def _frac_inverse(m: list[list[int]]) -> list[list[Fraction]]:
    size = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(m)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@dataclass(frozen=True, eq=False)
class CartanData:
    family: str
    n: int
    rank: int
    affine: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    theta: RootVector
    finite_cartan: tuple[tuple[int, ...], ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[RootVector, ...] = field(repr=False)
    # numpy caches, all in (beta_1..beta_r, k) coordinates of beta + k*delta
    affine_reflections: tuple = field(repr=False)
    simple_affine_vectors: tuple = field(repr=False)
    level_zero_simple: tuple = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, CartanData) and (self.family, self.n) == (other.family, other.n)

    def __hash__(self):
        return hash((self.family, self.n))

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    @property
    def name(self) -> str:
        return {"A": f"SL_{self.n}", "B": f"SO_{2 * self.n + 1}", "C": f"Sp_{2 * self.n}"}[self.family]

    def pairing(self, i: int, beta: Sequence[int]) -> int:
        """<alpha_i^vee, beta> for a finite-part vector beta (delta pairs to 0)."""
        row = self.affine[i]
        return sum(row[j + 1] * b for j, b in enumerate(beta))

    def simple_root(self, i: int) -> RootVector:
        """Level-zero image of alpha_i (alpha_0 -> -theta)."""
        if i == 0:
            return tuple(-t for t in self.theta)
        e = [0] * self.rank
        e[i - 1] = 1
        return tuple(e)

    def zero_poly(self) -> Polynomial:
        return Polynomial.zero(self.rank)

    def one_poly(self) -> Polynomial:
        return Polynomial.one(self.rank)

    def root_poly(self, beta: Sequence[int]) -> Polynomial:
        return Polynomial.linear(beta)

    def is_positive_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._positive_set

    @property
    def _positive_set(self):
        s = self.__dict__.get("_pos_cache")
        if s is None:
            s = frozenset(self.positive_roots)
            object.__setattr__(self, "_pos_cache", s)
        return s


def _validate(affine, marks, comarks):
    size = len(affine)
    for i in range(size):
        if sum(affine[i][j] * marks[j] for j in range(size)) != 0:
            raise ConfigurationError("marks are not a null vector of the Cartan matrix")
    for j in range(size):
        if sum(comarks[i] * affine[i][j] for i in range(size)) != 0:
            raise ConfigurationError("comarks are not a left null vector of the Cartan matrix")


def _null_vector(affine: list[list[int]], transpose: bool) -> tuple[int, ...]:
    size = len(affine)
    m = [[affine[j][i] for j in range(size)] for i in range(size)] if transpose else affine
    fin = [row[1:] for row in m[1:]]
    inv = _frac_inverse(fin)
    col0 = [m[i][0] for i in range(1, size)]
    rest = [-sum(inv[i][j] * col0[j] for j in range(size - 1)) for i in range(size - 1)]
    vec = [Fraction(1)] + rest
    if any(v.denominator != 1 for v in vec):
        raise ConfigurationError("non-integral null vector")
    return tuple(int(v) for v in vec)


def _positive_roots(finite: list[list[int]]) -> tuple[RootVector, ...]:
    r = len(finite)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                c = sum(finite[i][j] * beta[j] for j in range(r))
                if c == 0:
                    continue
                img = list(beta)
                img[i] -= c
                img = tuple(img)
                if all(x >= 0 for x in img) and img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b))))


@lru_cache(maxsize=None)
def cartan_data(family: str, n: int, strict: bool = True) -> CartanData:
    """Validated Cartan data.

    ``n`` follows the group: A -> SL_n (rank n-1), B -> SO_{2n+1} (rank n),
    C -> Sp_{2n} (rank n). ``strict=False`` admits B with n = 2 (SO_5), which
    duplicates C_2 up to relabeling.
    """
    family = str(family).upper()
    if family not in FAMILIES:
        raise ConfigurationError(f"unsupported family {family!r}; expected one of A, B, C")
    if not isinstance(n, int) or n < 2:
        raise ConfigurationError(f"rank parameter n must be an integer >= 2, got {n!r}")
    if family == "B" and n < 3 and strict:
        raise ConfigurationError("type B requires n >= 3 (SO_5 coincides with Sp_4)")
    affine = _affine_cartan(family, n)
    rank = len(affine) - 1
    marks = _null_vector(affine, transpose=False)
    comarks = _null_vector(affine, transpose=True)
    _validate(affine, marks, comarks)
    finite = [row[1:] for row in affine[1:]]
    inv = _frac_inverse(finite)
    theta = tuple(marks[1:])
    pos = _positive_roots(finite)
    if theta not in pos:
        raise ConfigurationError("highest root is not a root")

    size = rank + 1
    refl = []
    for i in range(size):
        m = np.eye(size, dtype=np.int64)
        if i == 0:
            # beta -> beta + c*theta, k -> k - c with c = <alpha_0^vee, beta>
            for j in range(rank):
                c = affine[0][j + 1]
                for t in range(rank):
                    m[t, j] += c * theta[t]
                m[rank, j] -= c
        else:
            for j in range(rank):
                m[i - 1, j] -= affine[i][j + 1]
        m.setflags(write=False)
        refl.append(m)
    vecs = []
    lz = []
    for i in range(size):
        v = np.zeros(size, dtype=np.int64)
        if i == 0:
            v[:rank] = [-t for t in theta]
            v[rank] = 1
        else:
            v[i - 1] = 1
        v.setflags(write=False)
        vecs.append(v)
        lz.append(tuple(int(x) for x in v[:rank]))

    return CartanData(
        family=family,
        n=n,
        rank=rank,
        affine=tuple(tuple(row) for row in affine),
        marks=marks,
        comarks=comarks,
        theta=theta,
        finite_cartan=tuple(tuple(row) for row in finite),
        inverse_cartan=tuple(tuple(row) for row in inv),
        positive_roots=pos,
        affine_reflections=tuple(refl),
        simple_affine_vectors=tuple(vecs),
        level_zero_simple=tuple(lz),
    )


def _check_node(data: CartanData, i: int) -> None:
    if not (0 <= i <= data.rank):
        raise IndexError(f"node {i} out of range 0..{data.rank}")


def simple_reflection_on_root(data: CartanData, i: int, beta: AffineRoot) -> AffineRoot:
    """r_i . beta for an affine root beta = finite + delta*delta."""
    _check_node(data, i)
    fin = tuple(beta.finite)
    c = data.pairing(i, fin)
    alpha = data.simple_root(i)
    new = tuple(b - c * a for b, a in zip(fin, alpha))
    # alpha_0 = delta - theta carries one delta
    delta = beta.delta - (c if i == 0 else 0)
    return AffineRoot(new, delta)


def level_zero_root(data: CartanData, beta: AffineRoot) -> RootVector:
    """Drop delta; alpha_0 projects to -theta."""
    return tuple(beta.finite)


def finite_roots(data: CartanData) -> list[RootVector]:
    pos = list(data.positive_roots)
    return pos + [tuple(-x for x in b) for b in pos]


def fundamental_weight(data: CartanData, i: int) -> tuple[Fraction, ...]:
    """omega_i in root coordinates (generally rational)."""
    if not (1 <= i <= data.rank):
        raise IndexError(f"fundamental weight index {i} out of range 1..{data.rank}")
    return tuple(data.inverse_cartan[k][i - 1] for k in range(data.rank))


def fundamental_weight_drop(data: CartanData, w, i: int) -> Polynomial:
    """omega_i - w.omega_i as a degree-1 polynomial (w acts at level zero)."""
    omega = fundamental_weight(data, i)
    u = np.asarray(_finite_matrix(w), dtype=object)
    img = [sum(u[k, j] * omega[j] for j in range(data.rank)) for k in range(data.rank)]
    diff = [omega[k] - img[k] for k in range(data.rank)]
    if any(Fraction(d).denominator != 1 for d in diff):
        raise ArithmeticError("omega_i - w.omega_i is not in the root lattice")
    return Polynomial.linear([int(d) for d in diff])


def _finite_matrix(w):
    m = getattr(w, "finite_matrix", None)
    if m is None:
        return np.asarray(w)
    return m


def root_reflection_word(data: CartanData, beta: Sequence[int]) -> tuple[list[int], int]:
    """Write a finite root as beta = r_{i_1}...r_{i_k} alpha_j (finite nodes only).

    Returns ([i_1..i_k], j); r_beta is then the conjugate of r_j by that prefix.
    """
    beta = tuple(int(b) for b in beta)
    if not any(beta):
        raise ValueError("zero vector is not a root")
    if not data.is_positive_root(beta):
        neg = tuple(-b for b in beta)
        if not data.is_positive_root(neg):
            raise ValueError(f"{beta} is not a root of {data.name}")
        beta = neg
    path = []
    while sum(beta) > 1:
        for i in range(1, data.rank + 1):
            c = data.pairing(i, beta)
            if c > 0:
                beta = tuple(b - c * (k == i - 1) for k, b in enumerate(beta))
                path.append(i)
                break
        else:  # pragma: no cover - impossible for a genuine root
            raise ValueError("root height reduction failed")
    j = beta.index(1) + 1
    return path, j


@lru_cache(maxsize=4096)
def _finite_reflection_matrix_cached(data: CartanData, beta: RootVector) -> np.ndarray:
    path, j = root_reflection_word(data, beta)
    word = list(path) + [j] + list(reversed(path))
    r = data.rank
    m = np.eye(r, dtype=np.int64)
    for i in word:
        m = m @ data.affine_reflections[i][:r, :r]
    m.setflags(write=False)
    return m


def finite_reflection_matrix(data: CartanData, beta: Sequence[int]) -> np.ndarray:
    """r x r matrix of the reflection r_beta on root coordinates."""
    return _finite_reflection_matrix_cached(data, tuple(int(b) for b in beta))
