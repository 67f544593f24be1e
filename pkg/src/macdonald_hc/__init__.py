"""Exact computer algebra for Macdonald difference operators.

Root data in three parameter regimes, the Cherednik difference-reflection
action of the affine Hecke algebra, commuting Macdonald(-Koornwinder)
operators, the Harish-Chandra homomorphism with its rank-one facet
reductions, monic Macdonald polynomials, and truncated difference
Harish-Chandra series with their Macdonald-polynomial and
Baker-Akhiezer specializations.  All arithmetic is exact over a field
of rational functions in a root of q and formal Hecke parameters.
"""

from .rootdata import AffineWeyl, RootDatum, build_root_datum
from .params import Labels, generic_labels, specialized_labels
from .scalar import MPoly, Scalar, ScalarField
from .laurent import LaurentPoly, RationalFn, c_function, cone_expand
from .heckeops import (DiffOp, DiffReflOp, cherednik_generator,
                       cherednik_generator_inverse, hecke_product,
                       omega_operator, y_operator)
from .macops import (MacdonaldOperator, commutator, dp_from_hecke,
                     delta_facet, eigenvalue_poly, gamma_facet, gamma_hc,
                     koornwinder_coefficient, macdonald_operator,
                     macdonald_polynomial, monomial_symmetric,
                     orbit_monomial, special_coweights, xi_eval_at_dot)
from .rankone import (RankOneData, build_yz, delta_rankone, gamma_rankone,
                      rank_one_operator, sign_product_identity,
                      square_identity, verify_casei)
from .hcseries import (HCSeries, SpectralPoint, baker_check,
                       baker_normalization, baker_support_set,
                       hc_series_formal, hc_series_specialized,
                       macdonald_overlap, singular_member,
                       specialize_series, verify_eigen_equations)

__version__ = "1.0.0"

__all__ = [
    "AffineWeyl", "RootDatum", "build_root_datum",
    "Labels", "generic_labels", "specialized_labels",
    "MPoly", "Scalar", "ScalarField",
    "LaurentPoly", "RationalFn", "c_function", "cone_expand",
    "DiffOp", "DiffReflOp", "cherednik_generator",
    "cherednik_generator_inverse", "hecke_product", "omega_operator",
    "y_operator",
    "MacdonaldOperator", "commutator", "dp_from_hecke", "delta_facet",
    "eigenvalue_poly", "gamma_facet", "gamma_hc", "koornwinder_coefficient",
    "macdonald_operator", "macdonald_polynomial", "monomial_symmetric",
    "orbit_monomial", "special_coweights", "xi_eval_at_dot",
    "RankOneData", "build_yz", "delta_rankone", "gamma_rankone",
    "rank_one_operator", "sign_product_identity", "square_identity",
    "verify_casei",
    "HCSeries", "SpectralPoint", "baker_check", "baker_normalization",
    "baker_support_set", "hc_series_formal", "hc_series_specialized",
    "macdonald_overlap", "singular_member", "specialize_series",
    "verify_eigen_equations",
]
