"""Exact glued lattices: L12 = (A2+A2+D4) glued to A2+A2, and the 10-d packing Q10."""

from .exactnum import SQRT3, QSqrt3, det, ldlt, parse_scalar
from .glue import aut_group, decompose, glue, glue_elements, orbits, table_l4, table_l8
from .laminate import build_l12, densities, export_gram_l12, kissing_number, table3
from .lattice import GramLattice, a2, coset_shortest, d4, direct_sum, enumerate_up_to
from .project import forbidden_vectors, g0_group, lemma1_scan, minimal_split_census, split_norms
from .windowq import (
    density_estimate,
    exact_density,
    extract_tiling,
    generate_patch,
    kissing_configuration,
    make_window,
    verify_packing,
    window_contains,
)

__version__ = "0.1.0"

__all__ = [
    "QSqrt3",
    "SQRT3",
    "parse_scalar",
    "ldlt",
    "det",
    "GramLattice",
    "a2",
    "d4",
    "direct_sum",
    "enumerate_up_to",
    "coset_shortest",
    "glue",
    "glue_elements",
    "decompose",
    "aut_group",
    "orbits",
    "table_l8",
    "table_l4",
    "build_l12",
    "table3",
    "kissing_number",
    "densities",
    "export_gram_l12",
    "split_norms",
    "g0_group",
    "forbidden_vectors",
    "lemma1_scan",
    "minimal_split_census",
    "make_window",
    "window_contains",
    "generate_patch",
    "verify_packing",
    "kissing_configuration",
    "exact_density",
    "density_estimate",
    "extract_tiling",
]
