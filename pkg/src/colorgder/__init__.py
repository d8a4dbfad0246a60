"""Exact operator spaces of color n-ary algebras.

Derivations, generalized and quasi-derivations, (quasi)centroids and
central derivations are computed as nullspaces over QQ or GF(p).  The
package also builds the doubled extension algebra and the induced
End-actions on exterior, symmetric and tensor powers.
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .algebra import (AlgebraError, GradedAlgebra, center, check_gamma_commutative,
                      commutativity_sign, derived_subalgebra, make_A, make_D, make_LB,
                      make_Lalpha, make_zero, random_algebra, random_graded_algebra,
                      random_matrix, require_valid, validate, validation_errors)
from .field import GF, QQ, Field, Mod, PrimeField, RationalField
from .grading import TRIVIAL_GROUP, AbelianGroup, Bicharacter, GradingError, super_sign
from .identities import Identity, builtin_identities, check_identity, colorized_sign
from .linalg import (Matrix, Subspace, image, is_direct_sum, nullspace, rank, rref,
                     subspace_contains, subspace_intersect, subspace_sum)
from .operators import (CLASSES, HomMap, OperatorSpace, closure_check, color_bracket, compose,
                        defect, gder_decomposition_check, inclusion_chain, jordan_product,
                        materialize, operator_space, operator_spaces, project, projected,
                        projected_all, qc_structure_report)
from .extension import (ExtendedAlgebra, complement_U, decomposition_check, embedding_checks,
                        extend, identity_preservation, phi)
from .modules import (InducedModule, appendix_submodules, classify_qder_end, induced_action,
                      is_irreducible, is_submodule, mu_map, qder_ll_equals_end,
                      submodule_generated, verify_eij_quasiderivation)
from .io import dumps_algebra, load_algebra, loads_algebra, save_algebra
from .report import Check
from .checks import run_suite

__all__ = [
    "__version__", "BACKEND", "AlgebraError", "GradedAlgebra", "center",
    "check_gamma_commutative", "commutativity_sign", "derived_subalgebra", "make_A", "make_D",
    "make_LB", "make_Lalpha", "make_zero", "random_algebra", "random_graded_algebra",
    "random_matrix", "require_valid", "validate", "validation_errors", "GF", "QQ", "Field",
    "Mod", "PrimeField", "RationalField", "TRIVIAL_GROUP", "AbelianGroup", "Bicharacter",
    "GradingError", "super_sign", "Identity", "builtin_identities", "check_identity",
    "colorized_sign", "Matrix", "Subspace", "image", "is_direct_sum", "nullspace", "rank",
    "rref", "subspace_contains", "subspace_intersect", "subspace_sum", "CLASSES", "HomMap",
    "OperatorSpace", "closure_check", "color_bracket", "compose", "defect",
    "gder_decomposition_check", "inclusion_chain", "jordan_product", "materialize",
    "operator_space", "operator_spaces", "project", "projected", "projected_all",
    "qc_structure_report", "ExtendedAlgebra", "complement_U", "decomposition_check",
    "embedding_checks", "extend", "identity_preservation", "phi", "InducedModule",
    "appendix_submodules", "classify_qder_end", "induced_action", "is_irreducible",
    "is_submodule", "mu_map", "qder_ll_equals_end", "submodule_generated",
    "verify_eij_quasiderivation", "dumps_algebra", "load_algebra", "loads_algebra",
    "save_algebra", "Check", "run_suite",
]
