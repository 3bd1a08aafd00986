"""Tools around multiplicative persistence: digit-product trajectories,
antecedent graphs, and the modular machinery bounding the height of every
number whose trajectory ends in an odd digit."""

from .catalog import catalog_by_id, catalog_csv, equation_catalog
from .constants import verify_constants
from .digits import Trajectory, digit_product, height, target, trajectory
from .equations import (Equation, generate_even_equations,
                        generate_odd_equations, lc_eval, reconstruct_value)
from .even import (BoundReport, CensusRow, complexity_table, even_vertices,
                   lemma_two_adic_bound)
from .genealogy import TargetGraph, builtin_graph, preimage_families
from .oracle import (ScanReport, brute_solve_equation, scan_persistence,
                     scan_persistence_grouped, verify_graph_closure)
from .smooth import Factorization, factorize_7smooth, is_7smooth
from .solver import (ProofReport, SolutionRecord, SolutionSet,
                     prove_odd_target, solve_equation)

__all__ = [
    "BoundReport", "CensusRow", "Equation", "Factorization", "ProofReport",
    "ScanReport", "SolutionRecord", "SolutionSet", "TargetGraph",
    "Trajectory", "brute_solve_equation", "builtin_graph", "catalog_by_id",
    "catalog_csv", "complexity_table", "digit_product", "equation_catalog",
    "even_vertices", "factorize_7smooth", "generate_even_equations",
    "generate_odd_equations", "height", "is_7smooth", "lc_eval",
    "lemma_two_adic_bound", "preimage_families", "prove_odd_target",
    "reconstruct_value", "scan_persistence", "scan_persistence_grouped",
    "solve_equation", "target", "trajectory", "verify_constants",
    "verify_graph_closure",
]

__version__ = "1.0.0"
