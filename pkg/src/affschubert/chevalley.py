"""
The equivariant homology Chevalley rule: j_{r_0} from finite-group data only.

    j_{r_0} = A_{r_0} + sum_{id != x <= r_theta} ( theta^{-1} xi^{x^{-1}}(r_theta) A_x
                                                 + xi^{x^{-1}}(r_theta) A_{r_0 x} )

The x = id term of the second sum supplies the leading A_{r_0}.
"""

from __future__ import annotations

from functools import lru_cache

from .localization import xi
from .peterson import JElement
from .poly import Polynomial
from .rootsys import AffineRoot, CartanData, fundamental_weight_drop
from .weyl import AffineWeylElement, bruhat_interval_below, bruhat_leq, format_word, reflection


@lru_cache(maxsize=None)
def r_theta(data: CartanData) -> AffineWeylElement:
    """The reflection in the highest root, as a finite element."""
    return reflection(data, AffineRoot(data.theta, 0))


def theta_quotient(x: AffineWeylElement) -> Polynomial:
    """theta^{-1} xi^{x^{-1}}(r_theta) for id != x <= r_theta."""
    data = x.data
    rt = r_theta(data)
    if x.length == 0:
        raise ValueError("theta_quotient is undefined at the identity")
    if not x.is_finite() or not bruhat_leq(x, rt):
        raise ValueError(f"{format_word(x.word)} is not below r_theta")
    return xi(x.inverse(), rt).exact_divide_linear(data.theta)


def j_r0(data: CartanData, max_len: int | None = None) -> JElement:
    """j_{r_0} assembled from localizations at r_theta."""
    rt = r_theta(data)
    r0 = AffineWeylElement.simple(data, 0)
    coeffs: dict[AffineWeylElement, Polynomial] = {}
    for x in bruhat_interval_below(rt):
        if x.length == 0:
            coeffs[r0] = Polynomial.one(data.rank)
            continue
        full = xi(x.inverse(), rt)
        if full.is_zero():
            continue
        if max_len is None or x.length <= max_len:
            coeffs[x] = full.exact_divide_linear(data.theta)
        if max_len is None or x.length + 1 <= max_len:
            coeffs[r0 * x] = full
    if max_len is not None and max_len < 1:
        coeffs.pop(r0, None)
    return JElement(r0, coeffs, max_len)


def nonequivariant_chevalley(data: CartanData) -> dict[int, int]:
    """Length-one coefficients of j_{r_0}: theta^{-1}(omega_i - r_theta omega_i) = <theta^vee, omega_i>."""
    rt = r_theta(data)
    out = {}
    for i in range(1, data.rank + 1):
        drop = fundamental_weight_drop(data, rt, i)
        q = drop.exact_divide_linear(data.theta)
        out[i] = q.constant_term()
    return out


__all__ = ["j_r0", "nonequivariant_chevalley", "r_theta", "theta_quotient"]
