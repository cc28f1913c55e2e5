"""Exact calculators for normal affine surfaces with a C*-action.

Surfaces are presented by divisor data on the affine line: a pair of
Q-divisors (D+, D-) with D+ + D- <= 0 in the hyperbolic case, a single
Q-divisor in the parabolic case, and coprime cone parameters (d, e) in
the toric case.  All arithmetic is exact (Fractions and big ints).
"""

from .abelian import (FgAbelianGroup, IntMatrix, group_from_presentation,
                      smith_normal_form)
from .divisors import (DpdPair, FactoredPoly, FactoredRatFn, Point, QDivisor,
                       canonical_pair, contains, format_rat,
                       function_from_divisor, pairs_equivalent,
                       pointwise_min, poly_from_divisor, rat)
from .hyperbolic import (CoverResult, EquationData, FiberStructure,
                         GroupPresentation, LocalData, ModificationReport,
                         OrbitInfo, OrbitType, QuotientPresentation,
                         canonical_divisor, class_group, cyclic_cover,
                         defining_equations, dpd_from_coprime_hypersurface,
                         dpd_from_generators, exceptional_locus, fixed_points,
                         has_positive_degree_unit, hypersurface_case,
                         is_factorial, local_data, modification_report,
                         orbit_types, picard_group, picard_trivial_criterion,
                         quotient_presentation, singular_points,
                         singularity_at)
from .parabolic import (DpPair, canonical_dp, dpd_from_generators_parabolic,
                        graded_piece, parabolic_from_equation,
                        parabolic_singularities, veronese_degree)
from .toric import (ConeParams, LatticeCone, QuotientAction, QuotSingType,
                    SMOOTH, hilbert_basis, hirzebruch_jung, normalize_type,
                    quotient_action, semigroup_contains, type_of_lattice_cone,
                    types_isomorphic)

__version__ = "0.1.0"

__all__ = [
    "CoverResult", "ConeParams", "DpPair", "DpdPair", "EquationData",
    "FactoredPoly", "FactoredRatFn", "FgAbelianGroup", "FiberStructure",
    "GroupPresentation", "IntMatrix", "LatticeCone", "LocalData",
    "ModificationReport", "OrbitInfo", "OrbitType", "Point",
    "QDivisor", "QuotSingType", "QuotientAction", "QuotientPresentation",
    "SMOOTH",
    "canonical_divisor", "canonical_dp", "canonical_pair", "class_group",
    "contains", "cyclic_cover", "defining_equations",
    "dpd_from_coprime_hypersurface", "dpd_from_generators",
    "dpd_from_generators_parabolic", "exceptional_locus", "fixed_points",
    "format_rat", "function_from_divisor", "graded_piece",
    "group_from_presentation", "has_positive_degree_unit", "hilbert_basis",
    "hirzebruch_jung", "hypersurface_case", "is_factorial", "local_data",
    "modification_report", "normalize_type", "orbit_types",
    "pairs_equivalent", "parabolic_from_equation", "parabolic_singularities",
    "picard_group", "picard_trivial_criterion", "pointwise_min",
    "poly_from_divisor", "quotient_action", "quotient_presentation", "rat",
    "semigroup_contains", "singular_points", "singularity_at",
    "smith_normal_form", "type_of_lattice_cone", "types_isomorphic",
    "veronese_degree",
]
