"""Exact combinatorics for line-bundle cohomology on flag varieties in characteristic p."""
from .charring import (
    ChiBasisDecomposition,
    VirtualCharacter,
    chi,
    chi_decompose,
    frobenius_twist,
    steinberg_character,
    weyl_character,
    weyl_dim,
)
from .cohomology import (
    PrimeContext,
    Verdict,
    bott,
    dpi_lower_bound,
    generic_report,
    h1_nonvanishing,
    hN1_nonvanishing,
    is_generic,
    serre_dual,
    trivial_vanishing,
)
from .jantzen import generic_sum, jantzen_sum_weyl, sl2_simple_char, sl2_weyl_decomposition
from .linkage import LinkageChain, linked, sl_down_set, strongly_linked, x_alpha_set
from .rootdata import CartanType, RootSystem, build_root_system
from .weyl import WeylElement, dot, weyl_element, wp_normal_form

__all__ = [
    "CartanType", "ChiBasisDecomposition", "LinkageChain", "PrimeContext", "RootSystem",
    "Verdict", "VirtualCharacter", "WeylElement", "bott", "build_root_system", "chi",
    "chi_decompose", "dot", "dpi_lower_bound", "frobenius_twist", "generic_report",
    "generic_sum", "h1_nonvanishing", "hN1_nonvanishing", "is_generic", "jantzen_sum_weyl",
    "linked", "serre_dual", "sl2_simple_char", "sl2_weyl_decomposition", "sl_down_set",
    "steinberg_character", "strongly_linked", "trivial_vanishing", "weyl_character",
    "weyl_dim", "weyl_element", "wp_normal_form", "x_alpha_set",
]
