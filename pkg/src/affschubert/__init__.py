"""Equivariant homology Schubert classes of affine Grassmannians via localization."""

from .rootsys import AffineRoot, CartanData, ConfigurationError, cartan_data
from .poly import Polynomial, RootFraction
from .weyl import AffineWeylElement, element


def clear_caches() -> None:
    """Drop every memo table (Cartan data excepted), e.g. before timing a computation."""
    from . import chevalley, classical_bc, localization, peterson, pieri_sl, rootsys, weyl

    for fn in (chevalley.r_theta, classical_bc.special_table, classical_bc.build_MND,
               peterson._b_row_cached, pieri_sl.special_classes, pieri_sl.t_element,
               rootsys._finite_reflection_matrix_cached, weyl._positive_root_matrix,
               weyl._simple, weyl.bruhat_leq, weyl._reduced_words):
        fn.cache_clear()
    localization.default_table().clear()


__all__ = [
    "AffineRoot",
    "AffineWeylElement",
    "CartanData",
    "ConfigurationError",
    "Polynomial",
    "RootFraction",
    "cartan_data",
    "clear_caches",
    "element",
]
