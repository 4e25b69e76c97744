"""frobex: exact Frobenius-extension verification for PBW algebras.

Builds each supported algebra family as an exact PBW rewriting system over a
cyclotomic coefficient field, computes the central-subalgebra-valued
functional Phi and the bilinear form B(a, b) = Phi(ab), and certifies at
concrete central characters that the reduced algebra is Frobenius with the
predicted Nakayama automorphism.
"""

__version__ = "0.1.0"

from .scalars import CentralPoly, CycField, CycScalar, ScalarError, cyc_arith, poly_eval
from .linalg import LinAlgError, Matrix, PreparedSolver
from .reflection import ReflectionGroup, build_group, coinvariant_data
from .pbw import PBWElement, RewriteError, RewriteSystem
from .cherednik import CherednikAlgebra
from .graded_hecke import (
    GradedHeckeAlgebra,
    OmegaData,
    bireflection_set,
    solve_omega,
    validate_omega,
)
from .affine_hecke import AffineHeckeA1
from .quantum import QuantumBorelSL2, QuantumFunctionSL2, QuantumSL2
from .verifier import FrobeniusInstance, VerificationFailure

__all__ = [
    "AffineHeckeA1",
    "CentralPoly",
    "CherednikAlgebra",
    "CycField",
    "CycScalar",
    "FrobeniusInstance",
    "GradedHeckeAlgebra",
    "LinAlgError",
    "Matrix",
    "OmegaData",
    "PBWElement",
    "PreparedSolver",
    "QuantumBorelSL2",
    "QuantumFunctionSL2",
    "QuantumSL2",
    "ReflectionGroup",
    "RewriteError",
    "RewriteSystem",
    "ScalarError",
    "VerificationFailure",
    "bireflection_set",
    "build_group",
    "coinvariant_data",
    "cyc_arith",
    "poly_eval",
    "solve_omega",
    "validate_omega",
    "__version__",
]
