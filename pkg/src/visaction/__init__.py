"""Exact involution-triple engine and numeric strong-visibility certifier.

The exact side realizes the classical Hermitian families as rational
matrix algebras, certifies the catalogued involution triples (commuting,
rank-preserving, orbit-reversing) with zero tolerance, and enumerates
signature-twisted families.  The numeric side samples group orbits and
certifies the slice/orbit-preservation conditions by multi-restart
least squares, reporting residuals against a tolerance.
"""

from .exact import (
    ExactMatrix,
    GaussianRational,
    RealSpan,
    flatten,
    gr,
    intersect,
    membership,
    rat,
    rational_eigenspaces,
    span_of,
    unflatten,
)
from .liealg import (
    Fingerprint,
    LinearAlgebraMap,
    RealFormAlgebra,
    center,
    fixed_subspace,
    killing,
    make_algebra,
    maximal_abelian,
    multi_fixed,
    real_rank,
    real_rank_of_pair,
    fingerprint,
)
from .recipes import InvolutionRecipe, ad_recipe, conj_recipe, neg_transpose_recipe
from .families import (
    CharacteristicElement,
    StandardRealization,
    build,
    characteristic_element,
)
from .catalog import (
    HolomorphyType,
    TableRow,
    catalog_involution,
    catalog_sigma,
    dataset_row,
    enumerate_params,
    holomorphy_type,
    load_dataset,
)
from .compact import compact_type2_data, grassmann_theta
from .analysis import (
    ProductSetup,
    TripleReport,
    compact_diagonal_setup,
    diagonal_setup,
    slice_subspace,
    verify_catalog_row,
    verify_rank_formula,
    verify_triple,
)
from .roots import (
    RestrictedRootDatum,
    Signature,
    generic_functional,
    nilpotent_part,
    positive_system,
    root_decomposition,
    signature_twist,
    signatures,
    verify_twist,
)
from .certify import (
    NumericAction,
    VisibilityCertificate,
    antiholomorphy_exact,
    certify_strong_visibility,
    certify_unipotent_visibility,
    iwasawa_factor,
    orbit_residual,
    planted_slice_recovery,
    slice_residual,
)
from .actions import ACTIONS, prepare_action
from . import errors

__all__ = [
    "ACTIONS",
    "CharacteristicElement",
    "ExactMatrix",
    "Fingerprint",
    "GaussianRational",
    "HolomorphyType",
    "InvolutionRecipe",
    "LinearAlgebraMap",
    "NumericAction",
    "ProductSetup",
    "RealFormAlgebra",
    "RealSpan",
    "RestrictedRootDatum",
    "Signature",
    "StandardRealization",
    "TableRow",
    "TripleReport",
    "VisibilityCertificate",
    "ad_recipe",
    "antiholomorphy_exact",
    "build",
    "catalog_involution",
    "catalog_sigma",
    "center",
    "certify_strong_visibility",
    "certify_unipotent_visibility",
    "characteristic_element",
    "compact_diagonal_setup",
    "compact_type2_data",
    "conj_recipe",
    "dataset_row",
    "diagonal_setup",
    "enumerate_params",
    "errors",
    "fingerprint",
    "fixed_subspace",
    "flatten",
    "generic_functional",
    "gr",
    "grassmann_theta",
    "holomorphy_type",
    "intersect",
    "iwasawa_factor",
    "killing",
    "load_dataset",
    "make_algebra",
    "maximal_abelian",
    "membership",
    "multi_fixed",
    "neg_transpose_recipe",
    "nilpotent_part",
    "orbit_residual",
    "planted_slice_recovery",
    "positive_system",
    "prepare_action",
    "rat",
    "rational_eigenspaces",
    "real_rank",
    "real_rank_of_pair",
    "root_decomposition",
    "signature_twist",
    "signatures",
    "slice_residual",
    "slice_subspace",
    "span_of",
    "unflatten",
    "verify_catalog_row",
    "verify_rank_formula",
    "verify_triple",
    "verify_twist",
]

__version__ = "0.1.0"
