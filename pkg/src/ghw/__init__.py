"""Generalized Hamming weights of codes defined by unions of coordinate
subspaces of F_q^m, or by complements of such unions.

Three independent routes to every hierarchy: closed-form tables with
applicability dispatch, exhaustive subspace search, and definitional
subcode enumeration.  The built-in reference suite runs all three.
"""

from .code import (
    LinearCode,
    WeightHierarchy,
    build_code,
    ghw_prop1,
    hierarchy_prop1,
)
from .config import DEFAULT_MAX_ENUM, ResourceCapError
from .field import Field, field_new
from .formulas import (
    NotApplicable,
    code_params_formula,
    hierarchy_formula,
    lemma1_dim,
    lemma1_witness,
)
from .linalg import (
    Subspace,
    dual,
    enumerate_subspaces,
    gaussian_binomial,
    intersection,
    null_space,
    rref,
    subspace_from_vectors,
    sum_space,
    support,
)
from .oracle import (
    ghw_definitional,
    hierarchy_definitional,
    lemma1_brute,
    lemma1_brute_multi,
)
from .reference import REFERENCE_CASES, run_reference_checks
from .simplicial import (
    ComplexSpec,
    cardinality,
    enumerate_members,
    k_space,
    member,
    normalize,
    normalize_sets,
    parse_sets,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexSpec",
    "DEFAULT_MAX_ENUM",
    "Field",
    "LinearCode",
    "NotApplicable",
    "REFERENCE_CASES",
    "ResourceCapError",
    "Subspace",
    "WeightHierarchy",
    "build_code",
    "cardinality",
    "code_params_formula",
    "dual",
    "enumerate_members",
    "enumerate_subspaces",
    "field_new",
    "gaussian_binomial",
    "ghw_definitional",
    "ghw_prop1",
    "hierarchy_definitional",
    "hierarchy_formula",
    "hierarchy_prop1",
    "intersection",
    "k_space",
    "lemma1_brute",
    "lemma1_brute_multi",
    "lemma1_dim",
    "lemma1_witness",
    "member",
    "normalize",
    "normalize_sets",
    "null_space",
    "parse_sets",
    "rref",
    "run_reference_checks",
    "subspace_from_vectors",
    "sum_space",
    "support",
]
