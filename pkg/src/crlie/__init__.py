"""Exact computations with CR algebras of compact Lie groups."""

from crlie.exactlin import (
    DenseMatrix,
    GaussRational,
    Poly,
    Subspace,
    canonicalize,
    kernel,
    meet_join,
    min_poly,
    solve_membership,
    squarefree_part,
)
from crlie.rootsys import (
    RANK_CAP_DEFAULT,
    ParabolicRootSet,
    RegularSpan,
    RegularSubalgebra,
    RootSystem,
    build_root_system,
    closed_closure,
    enumerate_parabolics,
    format_root,
    is_closed,
    lie_closure_regular,
    neg,
    normalizer_regular,
    nr_and_levi,
    parabolic_from_crosses,
    parabolic_from_grading,
    parse_root,
    regular_sum,
    root_sum,
    standard_borel,
    standard_parabolic,
    strongly_orthogonal_maximal_sets,
    weyl_conjugate_sets,
)
from crlie.matrixlie import (
    AmbientAlgebra,
    SplitEvidence,
    Subalg,
    bracket_closure,
    centralizer,
    derived_series,
    gl_ambient,
    i_spectrum,
    is_semisimple_matrix,
    is_subalgebra,
    jordan_chevalley,
    maximal_torus,
    nilradical_nr,
    normalizer,
    parabolic_from_element,
    radical,
    sigma,
    sl_ambient,
    splittable_evidence,
)
from crlie.crcore import (
    RegularityReport,
    ambient_dim_regular,
    cr_dims,
    cr_dims_regular,
    is_n_reductive,
    is_n_reductive_regular,
    levi_part,
    levi_part_regular,
    n_reductive_split,
    nr_regular,
    regularity_type,
    strengthens,
    strengthens_regular,
)
from crlie.regularize import (
    ParabolicCertificate,
    RegularizationChain,
    certify_parabolic,
    certify_parabolic_regular,
    regularize,
    regularize_regular,
)
from crlie.fibration import (
    MapClassification,
    ZRootDecomposition,
    classify_map,
    classify_regular,
    combine_parabolics,
    combine_parabolics_regular,
    deployment_verify,
    euler_positive_clause,
    euler_positive_clause_regular,
    homotopic_characteristic,
    homotopic_characteristic_regular,
    lift,
    lift_regular,
    maximal_par,
    minimal_par,
    par_membership,
    par_membership_regular,
    z_root_decomposition,
)
from crlie.realforms import (
    COMPLEX,
    IMAGINARY_COMPACT,
    IMAGINARY_NONCOMPACT,
    MATRIX_SIZE_CAP,
    REAL,
    AdaptedPair,
    MinimalOrbit,
    RealForm,
    RealFormSpec,
    RootClassification,
    ThetaSets,
    TypeCriteria,
    build_minimal_orbit,
    build_real_form,
    classify_roots,
    embed_regular,
    theta_sets,
    type_criteria,
)

__all__ = [
    "DenseMatrix",
    "GaussRational",
    "Poly",
    "Subspace",
    "canonicalize",
    "kernel",
    "meet_join",
    "min_poly",
    "solve_membership",
    "squarefree_part",
    "RANK_CAP_DEFAULT",
    "ParabolicRootSet",
    "RegularSpan",
    "RegularSubalgebra",
    "RootSystem",
    "build_root_system",
    "closed_closure",
    "enumerate_parabolics",
    "format_root",
    "is_closed",
    "lie_closure_regular",
    "neg",
    "normalizer_regular",
    "nr_and_levi",
    "parabolic_from_crosses",
    "parabolic_from_grading",
    "parse_root",
    "regular_sum",
    "root_sum",
    "standard_borel",
    "standard_parabolic",
    "strongly_orthogonal_maximal_sets",
    "weyl_conjugate_sets",
    "AmbientAlgebra",
    "SplitEvidence",
    "Subalg",
    "bracket_closure",
    "centralizer",
    "derived_series",
    "gl_ambient",
    "i_spectrum",
    "is_semisimple_matrix",
    "is_subalgebra",
    "jordan_chevalley",
    "maximal_torus",
    "nilradical_nr",
    "normalizer",
    "parabolic_from_element",
    "radical",
    "sigma",
    "sl_ambient",
    "splittable_evidence",
    "RegularityReport",
    "ambient_dim_regular",
    "cr_dims",
    "cr_dims_regular",
    "is_n_reductive",
    "is_n_reductive_regular",
    "levi_part",
    "levi_part_regular",
    "n_reductive_split",
    "nr_regular",
    "regularity_type",
    "strengthens",
    "strengthens_regular",
    "ParabolicCertificate",
    "RegularizationChain",
    "certify_parabolic",
    "certify_parabolic_regular",
    "regularize",
    "regularize_regular",
    "MapClassification",
    "ZRootDecomposition",
    "classify_map",
    "classify_regular",
    "combine_parabolics",
    "combine_parabolics_regular",
    "deployment_verify",
    "euler_positive_clause",
    "euler_positive_clause_regular",
    "homotopic_characteristic",
    "homotopic_characteristic_regular",
    "lift",
    "lift_regular",
    "maximal_par",
    "minimal_par",
    "par_membership",
    "par_membership_regular",
    "z_root_decomposition",
    "COMPLEX",
    "IMAGINARY_COMPACT",
    "IMAGINARY_NONCOMPACT",
    "MATRIX_SIZE_CAP",
    "REAL",
    "AdaptedPair",
    "MinimalOrbit",
    "RealForm",
    "RealFormSpec",
    "RootClassification",
    "ThetaSets",
    "TypeCriteria",
    "build_minimal_orbit",
    "build_real_form",
    "classify_roots",
    "embed_regular",
    "theta_sets",
    "type_criteria",
]

__version__ = "0.1.0"
