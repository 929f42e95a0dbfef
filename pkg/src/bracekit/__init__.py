"""Exact arithmetic for graded brace algebras.

Multilinear maps on a finite graded basis, non-symmetric and symmetric
brace operations with their Koszul signs, antisymmetrization, homotopy
structure checks, and a workspace / fuzzing CLI.  All coefficients are
ints or fractions; every comparison in the library is exact.
"""

from .brace import brace_axiom_check, brace_eval
from .errors import BracekitError, InputError, ResourceLimitError, WorkspaceError
from .graded import (
    Permutation,
    antisym_koszul_sign,
    enumerate_permutations,
    enumerate_unshuffles,
    koszul_sign,
)
from .homotopy import (
    A_INFINITY,
    L_INFINITY,
    StructureFamily,
    a_infinity_check,
    antisymmetrize_structure,
    l_infinity_check,
)
from .multimap import (
    GradedSpace,
    GradedVector,
    MultiMap,
    antisymmetrize,
    is_antisymmetric,
)
from .symbrace import symbrace_axiom_check, symbrace_eval, symmetrize_brace
from .workspace import Workspace

__version__ = "0.1.0"

__all__ = [
    "A_INFINITY",
    "BracekitError",
    "GradedSpace",
    "GradedVector",
    "InputError",
    "L_INFINITY",
    "MultiMap",
    "Permutation",
    "ResourceLimitError",
    "StructureFamily",
    "Workspace",
    "WorkspaceError",
    "__version__",
    "a_infinity_check",
    "antisym_koszul_sign",
    "antisymmetrize",
    "antisymmetrize_structure",
    "brace_axiom_check",
    "brace_eval",
    "enumerate_permutations",
    "enumerate_unshuffles",
    "is_antisymmetric",
    "koszul_sign",
    "l_infinity_check",
    "symbrace_axiom_check",
    "symbrace_eval",
    "symmetrize_brace",
]
