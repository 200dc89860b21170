"""
Sparse integer polynomials in the finite simple roots alpha_1..alpha_r.

A polynomial is a map from exponent vectors to nonzero integer coefficients.
Linear forms (roots) are plain integer tuples in the basis alpha_1..alpha_r,
and every denominator that shows up in this package is a product of such
forms, so fractions keep their denominators as multisets of roots and
reduce by exact division instead of a gcd.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping, Sequence

RootVector = tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised when an exact division by a linear form leaves a remainder."""


def _mono_key(exp: tuple[int, ...]):
    # graded lex, alpha_1 > alpha_2 > ... ; used for sorting in descending order
    return (sum(exp), exp)


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        if terms is None:
            self.terms: dict[tuple[int, ...], int] = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Polynomial":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The variable alpha_{i+1} (0-based index ``i``)."""
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coords: Sequence[int]) -> "Polynomial":
        n = len(coords)
        terms = {}
        for i, c in enumerate(coords):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = int(c)
        return cls._raw(n, terms)

    @classmethod
    def product_of_roots(cls, nvars: int, roots: Iterable[Sequence[int]], sign: int = 1) -> "Polynomial":
        p = cls.constant(nvars, sign)
        for b in roots:
            p = p.mul_linear(b)
        return p

    # -- basic protocol ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.to_text()})"

    def __str__(self):
        return self.to_text()

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if len(other.terms) < len(self.terms):
            a, b = other, self
        else:
            a, b = self, other
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return Polynomial._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection -------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def is_nonnegative(self) -> bool:
        """True when every monomial coefficient is >= 0 (root-positivity)."""
        return all(c > 0 for c in self.terms.values())

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def specialize_zero(self) -> int:
        """Set every alpha_i to zero."""
        return self.constant_term()

    # -- root-specific arithmetic -----------------------------------------

    def mul_linear(self, beta: Sequence[int]) -> "Polynomial":
        """Multiply by the linear form ``sum beta_i alpha_i``."""
        nz = [(i, b) for i, b in enumerate(beta) if b]
        terms: dict = {}
        for e, c in self.terms.items():
            for i, b in nz:
                ee = list(e)
                ee[i] += 1
                ee = tuple(ee)
                v = terms.get(ee, 0) + c * b
                if v:
                    terms[ee] = v
                else:
                    del terms[ee]
        return Polynomial._raw(self.nvars, terms)

    def substitute_linear(self, images: Sequence[Sequence[int]]) -> "Polynomial":
        """Apply the ring map alpha_j -> images[j] (each image a linear form)."""
        n = self.nvars
        lin = [Polynomial.linear(img) for img in images]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(j, k):
            key = (j, k)
            p = powers.get(key)
            if p is None:
                p = lin[j] if k == 1 else power(j, k - 1) * lin[j]
                powers[key] = p
            return p

        result: dict = {}
        zero = (0,) * n
        for e, c in self.terms.items():
            t = Polynomial._raw(n, {zero: c})
            for j, k in enumerate(e):
                if k:
                    t = t * power(j, k)
            for ee, cc in t.terms.items():
                v = result.get(ee, 0) + cc
                if v:
                    result[ee] = v
                else:
                    del result[ee]
        return Polynomial._raw(n, result)

    def exact_divide_linear(self, beta: Sequence[int]) -> "Polynomial":
        """Return g with g * beta == self; raise NotDivisible otherwise."""
        if not any(beta):
            raise ZeroDivisionError("division by the zero linear form")
        if not self.terms:
            return self
        i = next(k for k, b in enumerate(beta) if b)
        b = beta[i]
        rest = [(k, bk) for k, bk in enumerate(beta) if bk and k != i]

        # slice self by the exponent of alpha_i
        slices: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[i]
            ee = e[:i] + (0,) + e[i + 1:]
            slices.setdefault(d, {})[ee] = c
        top = max(slices)
        if top == 0:
            raise NotDivisible(f"{self} is not divisible by {tuple(beta)}")

        def times_rest(g: dict) -> dict:
            out: dict = {}
            for e, c in g.items():
                for k, bk in rest:
                    ee = list(e)
                    ee[k] += 1
                    ee = tuple(ee)
                    v = out.get(ee, 0) + c * bk
                    if v:
                        out[ee] = v
                    else:
                        del out[ee]
            return out

        quotient: dict[int, dict] = {}
        g_prev: dict = {}
        # f_d = b*g_{d-1};  f_k = b*g_{k-1} + L*g_k
        for k in range(top, 0, -1):
            fk = dict(slices.get(k, {}))
            for e, c in times_rest(g_prev).items():
                v = fk.get(e, 0) - c
                if v:
                    fk[e] = v
                else:
                    fk.pop(e, None)
            g = {}
            for e, c in fk.items():
                q, r = divmod(c, b)
                if r:
                    raise NotDivisible(f"{self} is not divisible by {tuple(beta)}")
                g[e] = q
            quotient[k - 1] = g
            g_prev = g
        if slices.get(0, {}) != times_rest(g_prev):
            raise NotDivisible(f"{self} is not divisible by {tuple(beta)}")

        terms = {}
        for k, g in quotient.items():
            for e, c in g.items():
                terms[e[:i] + (k,) + e[i + 1:]] = c
        return Polynomial._raw(self.nvars, terms)

    def divides_by_linear(self, beta: Sequence[int]) -> bool:
        try:
            self.exact_divide_linear(beta)
        except NotDivisible:
            return False
        return True

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Polynomial":
        n = int(obj["vars"])
        terms = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["exp"])
            if len(e) != n:
                raise ValueError("exponent vector length does not match 'vars'")
            terms[e] = terms.get(e, 0) + int(t["coef"])
        return cls(n, terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"a{i + 1}")
                elif k > 1:
                    factors.append(f"a{i + 1}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def to_latex(self) -> str:
        # powers are parenthesised so they cannot be confused with the
        # \alpha_a^b shorthand for consecutive root sums
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(rf"\alpha_{{{i + 1}}}")
                elif k > 1:
                    factors.append(rf"(\alpha_{{{i + 1}}})^{{{k}}}")
            mono = "".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out


# -- linear forms ----------------------------------------------------------


def is_positive_form(beta: Sequence[int]) -> bool:
    """Sign convention for linear forms: the first nonzero coordinate is > 0."""
    for b in beta:
        if b:
            return b > 0
    return False


def normalize_root(beta: Sequence[int]) -> tuple[int, RootVector]:
    """Return (sign, positive form) with beta == sign * form."""
    beta = tuple(int(b) for b in beta)
    if not any(beta):
        raise ZeroDivisionError("zero linear form")
    if is_positive_form(beta):
        return 1, beta
    return -1, tuple(-b for b in beta)


def root_latex(beta: Sequence[int]) -> str:
    r"""LaTeX for a linear form; a run alpha_a+...+alpha_b is written \alpha_a^b."""
    beta = tuple(beta)
    nz = [i for i, b in enumerate(beta) if b]
    if not nz:
        return "0"
    lo, hi = nz[0], nz[-1]
    if all(beta[i] == 1 for i in range(lo, hi + 1)):
        if lo == hi:
            return rf"\alpha_{{{lo + 1}}}"
        return rf"\alpha_{{{lo + 1}}}^{{{hi + 1}}}"
    if all(beta[i] == -1 for i in range(lo, hi + 1)):
        return "-" + root_latex(tuple(-b for b in beta))
    return Polynomial.linear(beta).to_latex()


def root_text(beta: Sequence[int]) -> str:
    return Polynomial.linear(beta).to_text()


# -- fractions with root-product denominators -----------------------------


class RootFraction:
    """num / prod(den), den a multiset of positive linear forms."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Iterable[Sequence[int]] = ()):
        sign = 1
        counts: Counter = Counter()
        for b in den:
            s, pb = normalize_root(b)
            sign *= s
            counts[pb] += 1
        self.num = num if sign == 1 else -num
        self.den = counts

    @classmethod
    def _raw(cls, num, den: Counter):
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RootFraction":
        return cls._raw(p, Counter())

    @classmethod
    def inverse_roots(cls, nvars: int, roots: Iterable[Sequence[int]], sign: int = 1) -> "RootFraction":
        """sign / prod(roots)."""
        return cls(Polynomial.constant(nvars, sign), roots)

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not +self.den

    def den_list(self) -> list[RootVector]:
        return sorted(self.den.elements())

    def den_poly(self) -> Polynomial:
        return Polynomial.product_of_roots(self.nvars, self.den.elements())

    def __repr__(self):
        if self.is_polynomial():
            return f"RootFraction({self.num.to_text()})"
        dens = " * ".join(f"({root_text(b)})" + (f"^{k}" if k > 1 else "") for b, k in sorted(self.den.items()))
        return f"RootFraction(({self.num.to_text()}) / {dens})"

    def to_polynomial(self) -> Polynomial:
        red = self.reduce()
        if not red.is_polynomial():
            raise NotDivisible(f"{self!r} does not reduce to a polynomial")
        return red.num

    def __add__(self, other):
        return frac_add(self, other)

    def __sub__(self, other):
        return frac_add(self, -other)

    def __neg__(self):
        return RootFraction._raw(-self.num, Counter(self.den))

    def __mul__(self, other):
        return frac_mul(self, other)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = RootFraction.from_poly(other)
        if not isinstance(other, RootFraction):
            return NotImplemented
        # cross-multiply: a/A == b/B  <=>  a*(L/A) == b*(L/B) with L = lcm
        lcm = self.den | other.den
        lhs = self.num
        for b, k in (lcm - self.den).items():
            for _ in range(k):
                lhs = lhs.mul_linear(b)
        rhs = other.num
        for b, k in (lcm - other.den).items():
            for _ in range(k):
                rhs = rhs.mul_linear(b)
        return lhs == rhs

    __hash__ = None

    def reduce(self) -> "RootFraction":
        return frac_reduce(self)


def _coerce_frac(x) -> RootFraction:
    if isinstance(x, RootFraction):
        return x
    if isinstance(x, Polynomial):
        return RootFraction.from_poly(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a RootFraction")


def frac_add(a, b) -> RootFraction:
    a = _coerce_frac(a)
    b = _coerce_frac(b)
    if a.num.is_zero():
        return RootFraction._raw(b.num, Counter(b.den))
    if b.num.is_zero():
        return RootFraction._raw(a.num, Counter(a.den))
    lcm = a.den | b.den
    na = a.num
    for beta, k in (lcm - a.den).items():
        for _ in range(k):
            na = na.mul_linear(beta)
    nb = b.num
    for beta, k in (lcm - b.den).items():
        for _ in range(k):
            nb = nb.mul_linear(beta)
    return RootFraction._raw(na + nb, lcm)


def frac_mul(a, b) -> RootFraction:
    if isinstance(b, int):
        a = _coerce_frac(a)
        return RootFraction._raw(a.num * b, Counter(a.den))
    a = _coerce_frac(a)
    b = _coerce_frac(b)
    if a.num.is_zero() or b.num.is_zero():
        return RootFraction._raw(Polynomial.zero(a.nvars), Counter())
    return RootFraction._raw(a.num * b.num, a.den + b.den)


def frac_reduce(a) -> RootFraction:
    """Cancel every denominator factor that exactly divides the numerator."""
    a = _coerce_frac(a)
    if a.num.is_zero():
        return RootFraction._raw(a.num, Counter())
    num = a.num
    den = Counter(a.den)
    for beta in sorted(den):
        while den[beta]:
            try:
                num = num.exact_divide_linear(beta)
            except NotDivisible:
                break
            den[beta] -= 1
    return RootFraction._raw(num, +den)


def frac_sum(items: Iterable, nvars: int | None = None) -> RootFraction:
    """Sum many fractions over one common denominator."""
    items = [_coerce_frac(x) for x in items]
    items = [x for x in items if not x.num.is_zero()]
    if not items:
        if nvars is None:
            raise ValueError("empty sum needs nvars")
        return RootFraction._raw(Polynomial.zero(nvars), Counter())
    lcm: Counter = Counter()
    for x in items:
        lcm |= x.den
    total = None
    for x in items:
        n = x.num
        for beta, k in (lcm - x.den).items():
            for _ in range(k):
                n = n.mul_linear(beta)
        total = n if total is None else total + n
    return RootFraction._raw(total, lcm)


# -- nilHecke operators on S = Z[alpha_1..alpha_r] ---------------------------


def weyl_act(x, f: Polynomial) -> Polynomial:
    """Level-zero action of a Weyl group element (anything with ``finite_matrix``)."""
    u = getattr(x, "finite_matrix", x)
    r = f.nvars
    images = [tuple(int(u[k][j]) for k in range(r)) for j in range(r)]
    return f.substitute_linear(images)


def divided_difference(data, beta: Sequence[int], f: Polynomial) -> Polynomial:
    """(f - r_beta f) / beta, for a finite root beta."""
    from .rootsys import finite_reflection_matrix

    m = finite_reflection_matrix(data, beta)
    diff = f - weyl_act(m, f)
    if diff.is_zero():
        return diff
    return diff.exact_divide_linear(tuple(beta))


def apply_demazure(data, i: int, f: Polynomial) -> Polynomial:
    """A_i f = (f - r_i f) / alpha_i, with alpha_0 = -theta at level zero."""
    return divided_difference(data, data.simple_root(i), f)
