"""
Equivariant Pieri rules for the affine Grassmannian of SL_n.

Notation used throughout (nodes 0..n-1, all roots at level zero):

    alpha_a^b = alpha_a + ... + alpha_b          (1 <= a <= b <= n-1)
    alpha_0^b = alpha_0 + ... + alpha_b = -alpha_{b+1}^{n-1}
    sigma_p   = r_{p-1} ... r_1 r_0,  t_q = t^{sigma_{q+1}}

Everything about x <= t_q is read off from one reduced word of x embedded
in the standard word  q ... 1 0 1 ... (n-1) (n-2) ... (q+1)  of t_q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .localization import xi_diagonal
from .poly import Polynomial, RootFraction, divided_difference, frac_sum, root_latex
from .rootsys import cartan_data
from .weyl import AffineWeylElement, Word, bruhat_leq, element, format_word, reduced_words

RootVector = tuple[int, ...]


# -- roots -------------------------------------------------------------------


def alpha(n: int, a: int, b: int) -> RootVector:
    """alpha_a^b as a vector in alpha_1..alpha_{n-1}; a = 0 gives -alpha_{b+1}^{n-1}."""
    if not (0 <= a <= b <= n - 1):
        raise ValueError(f"bad root range alpha_{a}^{b} for n={n}")
    if a == 0:
        if b == n - 1:
            raise ValueError("alpha_0^{n-1} is the null root")
        return tuple(-1 if b + 1 <= i + 1 <= n - 1 else 0 for i in range(n - 1))
    return tuple(1 if a <= i + 1 <= b else 0 for i in range(n - 1))


def _neg(beta: RootVector) -> RootVector:
    return tuple(-b for b in beta)


def _prod(n: int, roots: Iterable[RootVector]) -> Polynomial:
    return Polynomial.product_of_roots(n - 1, roots)


def _data(n: int):
    return cartan_data("A", n)


def _as_element(n: int, x) -> AffineWeylElement:
    if isinstance(x, AffineWeylElement):
        if x.data.family != "A" or x.data.n != n:
            raise ValueError("element belongs to a different group")
        return x
    return element(_data(n), x)


# -- special classes ---------------------------------------------------------


def u_word(a: int, b: int) -> Word:
    """r_a r_{a+1} ... r_b."""
    return tuple(range(a, b + 1))


def d_word(a: int, b: int) -> Word:
    """d_a^b = r_b r_{b-1} ... r_a."""
    return tuple(range(b, a - 1, -1))


def standard_word_tq(n: int, q: int) -> Word:
    """q (q-1) ... 1 0 1 ... (n-1) (n-2) ... (q+1)."""
    if not (0 <= q <= n - 2):
        raise ValueError(f"q must lie in 0..{n - 2}, got {q}")
    return tuple(range(q, 0, -1)) + (0,) + tuple(range(1, n)) + tuple(range(n - 2, q, -1))


@dataclass(frozen=True)
class SpecialClassesA:
    n: int
    sigma_hat: dict[int, Word]
    sigma: dict[int, Word]
    t: dict[int, Word]
    sigma_hat_rtheta: dict[int, Word]

    @property
    def k(self) -> int:
        return self.n - 1


@lru_cache(maxsize=None)
def special_classes(n: int) -> SpecialClassesA:
    if n < 2:
        raise ValueError("n must be >= 2")
    w_theta = tuple(range(1, n)) + tuple(range(n - 2, 0, -1))
    sh, sg, tt, shr = {}, {}, {}, {}
    for p in range(1, n):
        sh[p] = tuple(range(p - 1, 0, -1))
        sg[p] = sh[p] + (0,)
        shr[p] = w_theta[p - 1:]
        tt[p - 1] = standard_word_tq(n, p - 1)
    return SpecialClassesA(n, sh, sg, tt, shr)


@lru_cache(maxsize=None)
def t_element(n: int, q: int) -> AffineWeylElement:
    return element(_data(n), standard_word_tq(n, q))


def sigma_element(n: int, p: int) -> AffineWeylElement:
    return element(_data(n), special_classes(n).sigma[p])


# -- V, Lambda and N words ---------------------------------------------------


def is_v_word(word: Sequence[int]) -> bool:
    """Strictly decreasing to a minimum, then strictly increasing."""
    if not word:
        return True
    k = word.index(min(word))
    return all(word[i] > word[i + 1] for i in range(k)) and all(
        word[i] < word[i + 1] for i in range(k, len(word) - 1))


def is_lambda_word(word: Sequence[int]) -> bool:
    if not word:
        return True
    k = word.index(max(word))
    return all(word[i] < word[i + 1] for i in range(k)) and all(
        word[i] > word[i + 1] for i in range(k, len(word) - 1))


def is_n_word(word: Sequence[int]) -> bool:
    """A V followed by a Lambda with strictly larger support."""
    for cut in range(len(word) + 1):
        left, right = word[:cut], word[cut:]
        if left and right and max(left) >= min(right):
            continue
        if is_v_word(left) and is_lambda_word(right):
            return True
    return False


def words_of_shape(x: AffineWeylElement, shape: str) -> list[Word]:
    test = {"V": is_v_word, "L": is_lambda_word, "N": is_n_word}[shape]
    return [w for w in reduced_words(x) if test(w)]


def support(word: Iterable[int]) -> set[int]:
    return set(word)


def components(letters: Iterable[int]) -> list[list[int]]:
    """Maximal runs of consecutive integers (no wrap-around)."""
    out: list[list[int]] = []
    for k in sorted(set(letters)):
        if out and out[-1][-1] == k - 1:
            out[-1].append(k)
        else:
            out.append([k])
    return out


# -- q-factorization ---------------------------------------------------------


@dataclass(frozen=True)
class QFactorization:
    x: AffineWeylElement
    q: int
    word: Word
    v_parts: tuple[Word, ...]
    y_parts: tuple[Word, ...]
    S1: frozenset
    S2: frozenset
    S3: frozenset
    S1p: frozenset
    S2p: frozenset
    S3p: frozenset
    eps: int
    c: int

    def to_json(self) -> dict:
        return {
            "x": format_word(self.x.word),
            "q": self.q,
            "v": [format_word(v) for v in self.v_parts],
            "y": [format_word(y) for y in self.y_parts],
            "S1": sorted(self.S1), "S2": sorted(self.S2), "S3": sorted(self.S3),
            "S1'": sorted(self.S1p), "S2'": sorted(self.S2p), "S3'": sorted(self.S3p),
            "eps": self.eps,
            "c": self.c,
        }


class NotBelowTq(ValueError):
    """x is not below t_q, so it has no q-factorization."""


def embedded_word(x: AffineWeylElement, big: Sequence[int]) -> Word | None:
    """A reduced word of x that is a subword of ``big`` (or None)."""
    data = x.data
    target = x.length
    states: dict[AffineWeylElement, Word] = {AffineWeylElement.identity(data): ()}
    prefix_ok: dict[AffineWeylElement, bool] = {}

    def ok(u):
        hit = prefix_ok.get(u)
        if hit is None:
            hit = u.length + (u.inverse() * x).length == target
            prefix_ok[u] = hit
        return hit

    for i in big:
        new = dict(states)
        for u, w in states.items():
            if u.length < target and not u.has_right_descent(i):
                ui = u.right_multiply_simple(i)
                if ui not in new and ok(ui):
                    new[ui] = w + (i,)
        states = new
    return states.get(x)


def _branches(part: Word, low: bool):
    pivot = part.index(min(part) if low else max(part))
    return set(part[:pivot]), set(part[pivot + 1:]), part[pivot]


def q_factorization(x, q: int, n: int | None = None) -> QFactorization:
    if n is None:
        n = x.data.n
    x = _as_element(n, x)
    if not (0 <= q <= n - 2):
        raise ValueError(f"q must lie in 0..{n - 2}")
    word = embedded_word(x, standard_word_tq(n, q))
    if word is None:
        raise NotBelowTq(f"{format_word(x.word)} is not below t_{q}")
    vpart = tuple(i for i in word if i <= q)
    ypart = tuple(i for i in word if i > q)
    v_parts = tuple(tuple(i for i in vpart if i in comp) for comp in map(set, components(vpart)))
    y_parts = tuple(tuple(i for i in ypart if i in comp) for comp in map(set, components(ypart)))
    S1, S2, S3, S1p, S2p, S3p = set(), set(), set(), set(), set(), set()
    for v in v_parts:
        a, b, m = _branches(v, low=True)
        S1 |= a
        S2 |= b
        S3.add(m)
    for y in y_parts:
        a, b, m = _branches(y, low=False)
        S1p |= a
        S2p |= b
        S3p.add(m)
    supp = set(word)
    eps = int(q in supp and q + 1 in supp)
    c = len(components(supp))
    return QFactorization(x, q, vpart + ypart, v_parts, y_parts, frozenset(S1), frozenset(S2), frozenset(S3),
                          frozenset(S1p), frozenset(S2p), frozenset(S3p), eps, c)


# -- closed-form localizations -----------------------------------------------


def m_roots(f: QFactorization) -> list[RootVector]:
    """Linear factors of M(x,q) = (alpha_0^q)^eps prod_{S2} alpha_0^{k-1} prod_{S1'} alpha_0^k."""
    n, q = f.x.data.n, f.q
    out = [alpha(n, 0, q)] * f.eps
    out += [alpha(n, 0, k - 1) for k in sorted(f.S2)]
    out += [alpha(n, 0, k) for k in sorted(f.S1p)]
    return out


def l_roots(f: QFactorization) -> list[RootVector]:
    n, q = f.x.data.n, f.q
    return [alpha(n, k, q) for k in sorted(f.S1)]


def r_roots(f: QFactorization, m: int | None = None) -> list[RootVector]:
    """Factors -alpha_{q+1}^k of R(x,q), restricted to k >= m when m is given."""
    n, q = f.x.data.n, f.q
    return [_neg(alpha(n, q + 1, k)) for k in sorted(f.S2p) if m is None or k >= m]


def xi_at_tq(x, q: int, n: int | None = None) -> Polynomial:
    """xi^x(t_q) = (alpha_0^q)^{c(x)} M L R for x <= t_q."""
    if n is None:
        n = x.data.n
    x = _as_element(n, x)
    if x.length == 0:
        return Polynomial.one(n - 1)
    f = q_factorization(x, q, n)
    roots = [alpha(n, 0, q)] * f.c + m_roots(f) + l_roots(f) + r_roots(f)
    return _prod(n, roots)


def transposition_matrix(n: int, a: int, b: int):
    """Level-zero action of the reflection swapping x_a and x_b (1 <= a < b <= n)."""
    from .rootsys import finite_reflection_matrix

    return finite_reflection_matrix(_data(n), alpha(n, a, b - 1))


def decreasing_run(word: Sequence[int], q: int) -> int:
    """Largest a with (q+a)(q+a-1)...(q+1) a subsequence of word; 1 if q+1 is absent."""
    a = 0
    while True:
        target = list(range(q + a + 1, q, -1))
        it = iter(word)
        if all(any(ch == t for ch in it) for t in target):
            a += 1
        else:
            break
    return max(a, 1)


def rotate_xi(x, q: int, n: int | None = None) -> tuple[int, Polynomial]:
    """The jump a and the value M(x,q) * r_{alpha_{q+1}^{q+a}}[(alpha_0^q)^c L R].

    The value is xi^x(t_{q+a}) whenever q+a <= n-2; for q+a = n-1 there is no
    t_{q+a} and only the polynomial recipe is returned.
    """
    if n is None:
        n = x.data.n
    x = _as_element(n, x)
    f = q_factorization(x, q, n)
    a = decreasing_run(f.word, q) if (q + 1) in set(f.word) else 1
    base = _prod(n, [alpha(n, 0, q)] * f.c + l_roots(f) + r_roots(f))
    from .poly import weyl_act

    rotated = weyl_act(transposition_matrix(n, q + 1, q + a + 1), base)
    return a, _prod(n, m_roots(f)) * rotated


def q_set(x, m: int, n: int | None = None) -> list[int]:
    """{q in [0, m-1] : x <= t_q}."""
    if n is None:
        n = x.data.n
    x = _as_element(n, x)
    return [q for q in range(min(m, n - 1)) if bruhat_leq(x, t_element(n, q))]


def d_roots(n: int, q: int, m: int) -> list[RootVector]:
    """Factors of D(q,m) = alpha_q alpha_{q-1}^q ... alpha_0^q * alpha_{q+1} ... alpha_{q+1}^{m-1}."""
    return [alpha(n, k, q) for k in range(q, -1, -1)] + [alpha(n, q + 1, k) for k in range(q + 1, m)]


def D(n: int, q: int, m: int) -> Polynomial:
    return _prod(n, d_roots(n, q, m))


# -- Pieri rules -------------------------------------------------------------


def _check_m(n: int, m: int):
    if not (1 <= m <= n - 1):
        raise ValueError(f"m must lie in 1..{n - 1}")


def j_sigma_alternating(n: int, m: int, x) -> Polynomial:
    """(-1)^{l(x)} sum_{q<m} (-1)^{q+1} xi^x(t_q) / D(q,m), reduced to a polynomial."""
    _check_m(n, m)
    x = _as_element(n, x)
    if x.length < m:
        return Polynomial.zero(n - 1)
    terms = []
    for q in q_set(x, m, n):
        num = xi_at_tq(x, q, n)
        if (q + 1) % 2:
            num = -num
        terms.append(RootFraction(num, d_roots(n, q, m)))
    total = frac_sum(terms, nvars=n - 1)
    if x.length % 2:
        total = -total
    return total.to_polynomial()


def betas(n: int, qs: Sequence[int]) -> list[RootVector]:
    """beta_i = alpha_{1+q_i}^{q_{i+1}}."""
    return [alpha(n, qs[i] + 1, qs[i + 1]) for i in range(len(qs) - 1)]


def y_roots(f: QFactorization, m: int) -> list[RootVector]:
    """Factors of Y(x,m) = (alpha_0^q)^{c-1} R(x,q,m) for the q of f."""
    n = f.x.data.n
    return [alpha(n, 0, f.q)] * (f.c - 1) + r_roots(f, m)


def j_sigma_divided(n: int, m: int, x) -> Polynomial:
    """(-1)^{l(x)-m+p-1} M(x) d_{beta_{p-1}} ... d_{beta_1} Y(x,m)."""
    _check_m(n, m)
    x = _as_element(n, x)
    if x.length == 0:
        return Polynomial.zero(n - 1)
    qs = q_set(x, m, n)
    if not qs:
        return Polynomial.zero(n - 1)
    f = q_factorization(x, qs[0], n)
    data = _data(n)
    g = _prod(n, y_roots(f, m))
    for b in betas(n, qs):
        g = divided_difference(data, b, g)
    val = _prod(n, m_roots(f)) * g
    sign = x.length - m + len(qs) - 1
    return -val if sign % 2 else val


def xiprime_holds(n: int, m: int, x) -> bool:
    """Per-term identity relating xi^x(t_{q_j}) / D(q_j, m) to M(x) Y_j / D_j."""
    x = _as_element(n, x)
    qs = q_set(x, m, n)
    p = len(qs)
    def beta_range(i, j):  # beta_i^j, 1-indexed
        return alpha(n, qs[i - 1] + 1, qs[j])

    for j in range(1, p + 1):
        f = q_factorization(x, qs[j - 1], n)
        lhs = RootFraction(xi_at_tq(x, qs[j - 1], n), d_roots(n, qs[j - 1], m))
        if (m - 1 - qs[j - 1] - p + j) % 2:
            lhs = -lhs
        den = [beta_range(i, j - 1) for i in range(1, j)] + [beta_range(j, i) for i in range(j, p)]
        rhs = RootFraction(_prod(n, m_roots(f) + y_roots(f, m)), den)
        if not lhs == rhs:
            return False
    return True


def m_is_independent(n: int, m: int, x) -> bool:
    """M(x, q_j) is the same polynomial for every q_j in the q-set."""
    x = _as_element(n, x)
    vals = {_prod(n, m_roots(q_factorization(x, q, n))) for q in q_set(x, m, n)}
    return len(vals) <= 1


# -- positive expansion ------------------------------------------------------


def _root_key(beta: RootVector):
    nz = [i for i, b in enumerate(beta) if b]
    return (nz[0], nz[-1], beta) if nz else (0, 0, beta)


@dataclass
class PositiveExpansion:
    n: int
    prefactor: tuple[RootVector, ...]
    terms: list[tuple[RootVector, ...]] = field(default_factory=list)

    @property
    def monomials(self) -> list[tuple[RootVector, ...]]:
        return [tuple(sorted(self.prefactor + t, key=_root_key)) for t in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def all_positive(self) -> bool:
        return all(all(b >= 0 for b in beta) and any(beta) for mono in self.monomials for beta in mono)

    def to_polynomial(self) -> Polynomial:
        total = Polynomial.zero(self.n - 1)
        for mono in self.monomials:
            total = total + _prod(self.n, mono)
        return total

    def to_json(self) -> dict:
        return {
            "monomials": [[list(b) for b in mono] for mono in self.monomials],
            "prefactor": [list(b) for b in self.prefactor],
            "terms": [[list(b) for b in t] for t in self.terms],
        }

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        pre = "".join(f"({root_latex(b)})" for b in sorted(self.prefactor, key=_root_key))
        summands = sorted(tuple(sorted(t, key=_root_key)) for t in self.terms)
        summands.sort(key=lambda t: [_root_key(b)[:2] for b in t])
        body = "+".join("".join(root_latex(b) for b in t) or "1" for t in summands)
        if summands == [()]:
            return pre or "1"
        return pre + f"({body})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in self.monomials:
            parts.append("*".join(f"({Polynomial.linear(b).to_text()})" for b in mono) or "1")
        return " + ".join(parts)


def j_sigma_positive(n: int, m: int, x) -> PositiveExpansion:
    """j_{sigma_m}^x as an explicit sum of products of positive roots."""
    _check_m(n, m)
    x = _as_element(n, x)
    if x.length == 0:
        return PositiveExpansion(n, ())
    qs = q_set(x, m, n)
    if not qs:
        return PositiveExpansion(n, ())
    q = qs[0]
    p = len(qs)
    f = q_factorization(x, q, n)
    pre = [alpha(n, q + 1, n - 1)] * f.eps
    pre += [alpha(n, k, n - 1) for k in sorted(f.S2)]
    pre += [alpha(n, k + 1, n - 1) for k in sorted(f.S1p)]
    ks = [n - 1] * (f.c - 1) + sorted((k for k in f.S2p if k >= m), reverse=True)
    terms = []
    d = len(ks)
    for removed in combinations(range(d), p - 1):
        rem = set(removed)
        factors = []
        for i in range(d):
            if i in rem:
                continue
            s = sum(1 for r in rem if r > i)
            factors.append(alpha(n, qs[s] + 1, ks[i]))
        terms.append(tuple(factors))
    return PositiveExpansion(n, tuple(pre), terms)


def negative_factor_count(n: int, m: int, x) -> tuple[int, int]:
    """(negative-form factors in M(x) and Y(x,m), l(x) - m + p - 1)."""
    x = _as_element(n, x)
    qs = q_set(x, m, n)
    f = q_factorization(x, qs[0], n)
    count = sum(1 for b in m_roots(f) + y_roots(f, m) if sum(b) < 0)
    return count, x.length - m + len(qs) - 1


def verify_appendix_identity(p: int, q: int, n: int | None = None) -> bool:
    """sum_{q<=k<=p} (-1)^k prod_{i=q}^{k-1} alpha_i^{p-1} prod_{j=k}^{p-1} alpha_q^j == 0."""
    if not (0 <= q < p):
        raise ValueError("need 0 <= q < p")
    if n is None:
        n = p + 2
    total = Polynomial.zero(n - 1)
    for k in range(q, p + 1):
        roots = [alpha(n, i, p - 1) for i in range(q, k)] + [alpha(n, q, j) for j in range(k, p)]
        term = _prod(n, roots)
        total = total - term if k % 2 else total + term
    return total.is_zero()


def diag_check(n: int, q: int) -> bool:
    """D(q, m) for m = q+1 is the diagonal localization of sigma_{q+1}."""
    return D(n, q, q + 1) == xi_diagonal(sigma_element(n, q + 1))


__all__ = [
    "D",
    "NotBelowTq",
    "PositiveExpansion",
    "QFactorization",
    "SpecialClassesA",
    "alpha",
    "betas",
    "components",
    "d_roots",
    "d_word",
    "diag_check",
    "embedded_word",
    "is_lambda_word",
    "is_n_word",
    "is_v_word",
    "l_roots",
    "m_roots",
    "r_roots",
    "y_roots",
    "words_of_shape",
    "decreasing_run",
    "j_sigma_alternating",
    "j_sigma_divided",
    "j_sigma_positive",
    "m_is_independent",
    "negative_factor_count",
    "q_factorization",
    "q_set",
    "rotate_xi",
    "sigma_element",
    "special_classes",
    "standard_word_tq",
    "t_element",
    "u_word",
    "verify_appendix_identity",
    "xi_at_tq",
    "xiprime_holds",
]
