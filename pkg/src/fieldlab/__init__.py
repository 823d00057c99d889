"""fieldlab: exact number field arithmetic with constructive certificates.

Build a field E = Q[x]/(f) with make_field, then ask for automorphisms,
primitive or normal generators, norm-one elements, or Pell solutions.  All
arithmetic is exact (Fraction coefficients) and every answer ships with the
certificate that makes it checkable: minimal polynomials, conjugate
determinants, norm values.
"""

from .errors import (
    BoundTooLargeForModulus,
    ConstantPolynomial,
    DegreeCapExceeded,
    DimensionMismatch,
    DivisionByZero,
    EmptyInput,
    FieldMismatch,
    FieldlabError,
    HeightCapExceeded,
    InsufficientSample,
    NoSplitPrimeFound,
    NotAField,
    NotGalois,
    NotSquarefree,
    PolySyntaxError,
    PrecisionCapExceeded,
    RationalRoot,
    TrivialExtension,
    ZeroDivisor,
    ZeroPolynomial,
)
from .polynomials import (
    ModPoly,
    UPoly,
    mod_is_irreducible,
    poly_eval,
    poly_gcd,
    rational_reconstruct,
    squarefree_part,
)
from .numberfield import (
    AssumedIrreducible,
    CertifiedModP,
    FieldElem,
    NumberField,
    make_field,
)
from .linalg import (
    EMatrix,
    QMatrix,
    SolveResult,
    field_det,
    matrix_rank,
    qmatrix_det,
    rank_and_solve,
)
from .parsing import format_elem, format_poly, parse_poly
from .representation import minpoly, norm, regrep, trace, trace_gram
from .galois import (
    Automorphism,
    GaloisGroup,
    SplitPrimeData,
    apply,
    automorphisms,
    automorphisms_with_diagnostics,
    compose,
    conjugate_vector,
    find_split_prime,
    galois_group,
    hensel_lift,
)
from .criteria import (
    NormalReport,
    PrimitivityReport,
    SeparabilityReport,
    conjugate_rank,
    density_rank,
    is_galois,
    is_normal_generator,
    is_primitive,
    is_separable_ext,
    no_low_degree_relation,
    normal_det,
)
from .search import (
    PerH,
    SearchConfig,
    WitnessedElement,
    distinct_mod_scalars,
    enumerate_candidates,
    norm_one_normal,
    norm_one_primitive,
    pell_solutions,
    search_normal,
    search_primitive,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "FieldlabError", "ZeroPolynomial", "BoundTooLargeForModulus",
    "ConstantPolynomial", "NotSquarefree", "RationalRoot", "DivisionByZero",
    "ZeroDivisor", "FieldMismatch", "DimensionMismatch", "NoSplitPrimeFound",
    "DegreeCapExceeded", "PrecisionCapExceeded", "NotGalois",
    "InsufficientSample", "HeightCapExceeded", "TrivialExtension", "NotAField",
    "PolySyntaxError", "EmptyInput",
    # polynomials
    "UPoly", "ModPoly", "poly_gcd", "poly_eval", "squarefree_part",
    "mod_is_irreducible", "rational_reconstruct",
    # fields
    "NumberField", "FieldElem", "make_field", "CertifiedModP",
    "AssumedIrreducible",
    # linear algebra
    "QMatrix", "EMatrix", "SolveResult", "rank_and_solve", "matrix_rank",
    "qmatrix_det", "field_det",
    # parsing and formatting
    "parse_poly", "format_poly", "format_elem",
    # representation
    "regrep", "trace", "norm", "minpoly", "trace_gram",
    # galois
    "SplitPrimeData", "find_split_prime", "hensel_lift", "Automorphism",
    "apply", "compose", "automorphisms", "automorphisms_with_diagnostics",
    "GaloisGroup", "galois_group", "conjugate_vector",
    # criteria
    "PrimitivityReport", "SeparabilityReport", "NormalReport", "is_primitive",
    "is_separable_ext", "is_galois", "normal_det", "is_normal_generator",
    "conjugate_rank", "density_rank", "no_low_degree_relation",
    # search
    "SearchConfig", "PerH", "WitnessedElement", "enumerate_candidates",
    "search_primitive", "search_normal", "distinct_mod_scalars",
    "norm_one_primitive", "norm_one_normal", "pell_solutions",
]
