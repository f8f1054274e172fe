"""p-rank strata of Artin-Schreier curves: partitions, dimensions, refinement graphs and explicit covers."""

from .covers import (
    ASCover,
    RationalFunction,
    genus,
    p_rank_DS,
    partial_fractions,
    point_count,
    ramification_data,
    read_cover,
    standard_form,
    write_cover,
    zeta_prank_oracle,
)
from .deform import make_family, specialize, verify_closure_step, verify_deformation
from .fieldarith import GF, FieldElement, FiniteField, Poly, abs_trace, factor_squarefree_roots, pth_root
from .refgraph import Closure, build_graph, chain_lengths, classify_edge, prank_closure_step, refines
from .strata import (
    Partition,
    codim_check,
    cover_stratum_dimension,
    enumerate_partitions,
    hyperelliptic_components,
    is_irreducible_AS,
    maximal_partitions,
    prank_exists,
    stratum_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "ASCover", "RationalFunction", "genus", "p_rank_DS", "partial_fractions", "point_count",
    "ramification_data", "read_cover", "standard_form", "write_cover", "zeta_prank_oracle",
    "make_family", "specialize", "verify_closure_step", "verify_deformation",
    "GF", "FieldElement", "FiniteField", "Poly", "abs_trace", "factor_squarefree_roots", "pth_root",
    "Closure", "build_graph", "chain_lengths", "classify_edge", "prank_closure_step", "refines",
    "Partition", "codim_check", "cover_stratum_dimension", "enumerate_partitions",
    "hyperelliptic_components", "is_irreducible_AS", "maximal_partitions", "prank_exists",
    "stratum_dimension",
]
