"""
j-elements of the affine nilHecke ring by inverting the localization matrix.

Over a Grassmannian order ideal the matrix A_{wv} = (-1)^{l(v)} xi^v(w) is
lower triangular. With B = A^{-1}, the class j_v expands in translations as
j_v = sum_{w <= v} B_{vw} t^w, and its coefficient at A_x is

    j_v^x = (-1)^{l(x)} sum_w B_{vw} xi^x(t^w).

This is the slow, generic oracle the closed-form rules are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .localization import xi, xi_all
from .poly import NotDivisible, Polynomial, RootFraction, frac_mul, frac_reduce, frac_sum
from .rootsys import CartanData
from .weyl import (
    AffineWeylElement,
    element,
    format_word,
    grassmannian_part,
    is_grassmannian,
    translation_class,
)


class NotAnIdeal(ValueError):
    """The supplied list of Grassmannian elements is not downward closed."""


@dataclass
class IdealMatrix:
    ideal: list[AffineWeylElement]
    entries: list[list[RootFraction]]
    # signed root factorisation of each diagonal entry, when known
    diag_roots: list[tuple[int, list[tuple[int, ...]]]] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.ideal)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def index(self, x: AffineWeylElement) -> int:
        return self.ideal.index(x)

    def is_lower_triangular(self) -> bool:
        return all(self.entries[i][j].is_zero() for i in range(self.size) for j in range(i + 1, self.size))

    def polynomial_entries(self) -> list[list[Polynomial]]:
        return [[e.to_polynomial() for e in row] for row in self.entries]


def check_ideal(ideal: Sequence[AffineWeylElement]) -> None:
    """Raise NotAnIdeal unless ``ideal`` is a downward closed set of Grassmannian elements."""
    members = set(ideal)
    for x in ideal:
        if not is_grassmannian(x):
            raise NotAnIdeal(f"{format_word(x.word)} is not Grassmannian")
        word = x.word
        for k in range(len(word)):
            y = element(x.data, word[:k] + word[k + 1:])
            if y.length != len(word) - 1:
                continue
            if grassmannian_part(y) not in members:
                raise NotAnIdeal(f"ideal is not downward closed below {format_word(word)}")


def ideal_below(v: AffineWeylElement) -> list[AffineWeylElement]:
    """{w in W_af^0 : w <= v}, sorted by (length, canonical word)."""
    if not is_grassmannian(v):
        raise ValueError(f"{format_word(v.word)} is not Grassmannian")
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            word = x.word
            for k in range(len(word)):
                y = element(x.data, word[:k] + word[k + 1:])
                if y.length != len(word) - 1:
                    continue
                g = grassmannian_part(y)
                if g.length == len(word) - 1 and g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return sorted(seen, key=lambda e: e.sort_key())


def factor_into_roots(data: CartanData, f: Polynomial) -> tuple[int, list[tuple[int, ...]]]:
    """Write f = sign * prod(positive roots) by trial division; raise if impossible."""
    if f.is_zero():
        raise ZeroDivisionError("zero has no root factorisation")
    roots = []
    g = f
    while g.degree() > 0:
        for beta in data.positive_roots:
            try:
                g = g.exact_divide_linear(beta)
            except NotDivisible:
                continue
            roots.append(beta)
            break
        else:
            raise NotDivisible(f"{f} is not a product of roots")
    c = g.constant_term()
    if c not in (1, -1):
        raise NotDivisible(f"{f} has non-unit content {c}")
    return c, roots


def _signed_diag(w: AffineWeylElement) -> tuple[int, list[tuple[int, ...]]]:
    from .localization import inversion_roots

    sign = -1 if w.length % 2 else 1
    out = []
    for beta in inversion_roots(w):
        if sum(beta) < 0:
            sign = -sign
            beta = tuple(-b for b in beta)
        out.append(beta)
    return sign, out


def build_A_matrix(ideal: Sequence[AffineWeylElement]) -> IdealMatrix:
    """A_{wv} = (-1)^{l(v)} xi^v(w) over an order ideal (rows w, columns v)."""
    ideal = sorted(ideal, key=lambda e: e.sort_key())
    check_ideal(ideal)
    if not ideal:
        return IdealMatrix([], [])
    data = ideal[0].data
    zero = RootFraction.from_poly(Polynomial.zero(data.rank))
    rows = []
    for i, w in enumerate(ideal):
        row = []
        for j, v in enumerate(ideal):
            if j > i:
                row.append(zero)
                continue
            f = xi(v, w)
            if v.length % 2:
                f = -f
            row.append(RootFraction.from_poly(f))
        rows.append(row)
    return IdealMatrix(ideal, rows, [_signed_diag(w) for w in ideal])


def _diag_inverse(a: IdealMatrix, i: int) -> RootFraction:
    data = a.ideal[i].data if a.ideal else None
    if a.diag_roots is not None:
        sign, roots = a.diag_roots[i]
    else:
        d = a.entries[i][i].to_polynomial()
        if d.is_zero():
            raise ZeroDivisionError(f"zero diagonal entry at position {i}")
        sign, roots = factor_into_roots(data, d)
    return RootFraction.inverse_roots(data.rank, roots, sign)


def invert_lower_triangular(a: IdealMatrix) -> IdealMatrix:
    """Exact inverse by forward substitution."""
    n = a.size
    data = a.ideal[0].data
    zero = RootFraction.from_poly(Polynomial.zero(data.rank))
    inv_diag = [_diag_inverse(a, i) for i in range(n)]
    b = [[zero] * n for _ in range(n)]
    for j in range(n):
        b[j][j] = inv_diag[j]
        for i in range(j + 1, n):
            s = frac_sum((frac_mul(a.entries[i][k], b[k][j]) for k in range(j, i) if not a.entries[i][k].is_zero()),
                         nvars=data.rank)
            if s.is_zero():
                continue
            b[i][j] = frac_reduce(-frac_mul(s, inv_diag[i]))
    return IdealMatrix(list(a.ideal), b, None)


def _b_row(v: AffineWeylElement) -> dict[AffineWeylElement, RootFraction]:
    return dict(_b_row_cached(v))


@lru_cache(maxsize=256)
def _b_row_cached(v: AffineWeylElement):
    """Row v of B = A^{-1} over the ideal below v: solve b A = e_v backwards."""
    ideal = ideal_below(v)
    data = v.data
    pos = {w: k for k, w in enumerate(ideal)}
    sign_len = [(-1) ** w.length for w in ideal]
    b: dict[int, RootFraction] = {}
    iv = pos[v]
    for k in range(iv, -1, -1):
        w = ideal[k]
        s, roots = _signed_diag(w)
        inv = RootFraction.inverse_roots(data.rank, roots, s)
        if k == iv:
            b[k] = inv
            continue
        terms = []
        for m, bm in b.items():
            if bm.is_zero():
                continue
            f = xi(w, ideal[m])
            if f.is_zero():
                continue
            terms.append(frac_mul(bm, RootFraction.from_poly(f * sign_len[k])))
        if not terms:
            continue
        tot = frac_sum(terms, nvars=data.rank)
        b[k] = frac_reduce(-frac_mul(tot, inv))
    return tuple((ideal[k], f) for k, f in sorted(b.items()) if not f.is_zero())


@dataclass
class JElement:
    v: AffineWeylElement
    coeffs: dict[AffineWeylElement, Polynomial]
    max_len: int | None

    def coefficient(self, x: AffineWeylElement) -> Polynomial:
        if self.max_len is not None and x.length > self.max_len:
            raise ValueError(f"coefficient at length {x.length} beyond computed range {self.max_len}")
        return self.coeffs.get(x, Polynomial.zero(self.v.data.rank))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def to_json(self) -> dict:
        return {
            "v": format_word(self.v.word),
            "coeffs": [{"x": format_word(x.word), "poly": f.to_json()} for x, f in self.items()],
        }

    def to_text(self) -> str:
        lines = [f"j[{format_word(self.v.word)}]"]
        for x, f in self.items():
            lines.append(f"  A[{format_word(x.word)}]: {f.to_text()}")
        return "\n".join(lines)

    def to_latex(self) -> str:
        parts = []
        for x, f in self.items():
            label = "".join(f"r_{{{i}}}" for i in x.word) or r"\mathrm{id}"
            parts.append(rf"({f.to_latex()})A_{{{label}}}")
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other):
        if not isinstance(other, JElement):
            return NotImplemented
        return self.v == other.v and self.coeffs == other.coeffs


def _finish(total: RootFraction, v, x) -> Polynomial:
    try:
        return total.to_polynomial()
    except NotDivisible as exc:
        raise NotDivisible(f"j coefficient for v={format_word(v.word)}, x={format_word(x.word)} "
                           f"is not a polynomial: {total!r}") from exc


def j_coefficients(v: AffineWeylElement, max_len: int | None = None) -> JElement:
    """All nonzero j_v^x with l(x) <= max_len (every x when max_len is None)."""
    data = v.data
    row = _b_row(v)
    buckets: dict[AffineWeylElement, list[RootFraction]] = {}
    for w, bw in row.items():
        t = translation_class(w)
        for x, f in xi_all(t, max_len).items():
            if x.length < v.length:
                continue
            buckets.setdefault(x, []).append(frac_mul(bw, RootFraction.from_poly(f)))
    coeffs = {}
    for x, terms in buckets.items():
        total = frac_sum(terms, nvars=data.rank)
        if x.length % 2:
            total = -total
        p = _finish(total, v, x)
        if not p.is_zero():
            coeffs[x] = p
    return JElement(v, coeffs, max_len)


def j_coefficient(v: AffineWeylElement, x: AffineWeylElement) -> Polynomial:
    """The single coefficient j_v^x."""
    data = v.data
    if x.length < v.length:
        return Polynomial.zero(data.rank)
    terms = []
    for w, bw in _b_row(v).items():
        f = xi(x, translation_class(w))
        if not f.is_zero():
            terms.append(frac_mul(bw, RootFraction.from_poly(f)))
    total = frac_sum(terms, nvars=data.rank)
    if x.length % 2:
        total = -total
    return _finish(total, v, x)


def structure_constant(u: AffineWeylElement, v: AffineWeylElement, w: AffineWeylElement) -> Polynomial:
    """d^w_{uv}: coefficient of xi_w in xi_u xi_v, read off as j_u^{w v^{-1}}."""
    x = w * v.inverse()
    if w.length != v.length + x.length:
        return Polynomial.zero(w.data.rank)
    return j_coefficient(u, x)


__all__ = [
    "IdealMatrix",
    "JElement",
    "NotAnIdeal",
    "build_A_matrix",
    "check_ideal",
    "factor_into_roots",
    "ideal_below",
    "invert_lower_triangular",
    "j_coefficient",
    "j_coefficients",
    "structure_constant",
]
