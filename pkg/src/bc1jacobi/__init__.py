"""Exact computation of BC1 nonsymmetric, vector- and matrix-valued Jacobi polynomials."""
from .errors import (
    BC1Error,
    DecompositionMismatch,
    DegenerateGram,
    DomainError,
    ModeError,
    NonDivisible,
    NotInvariant,
    ParameterOutOfRange,
)
from .laurent import LaurentPoly, PolyX, arith, divide_exact, involve, reflect_divide, rescale
from .multiplicity import Multiplicity
from .nonsym import cherednik_apply, eigen_check, gram_schmidt_E, subleading_check
from .pairing import InnerProductEngine, ct_pair, delta_expand, gauss_jacobi_rule, mat_pair, quad_pair, vec_pair
from .transport import PolyMat2, PolyVec2, VecLaurent2, gamma, phi_transport, steinberg_split
from .verdict import OperatorVerdict
from .vector import build_M, build_P, dk_x_apply, gamma_star_apply, lambda_of

__all__ = [
    "BC1Error", "DecompositionMismatch", "DegenerateGram", "DomainError", "ModeError",
    "NonDivisible", "NotInvariant", "ParameterOutOfRange",
    "LaurentPoly", "PolyX", "arith", "divide_exact", "involve", "reflect_divide", "rescale",
    "Multiplicity",
    "cherednik_apply", "eigen_check", "gram_schmidt_E", "subleading_check",
    "InnerProductEngine", "ct_pair", "delta_expand", "gauss_jacobi_rule", "mat_pair", "quad_pair", "vec_pair",
    "PolyMat2", "PolyVec2", "VecLaurent2", "gamma", "phi_transport", "steinberg_split",
    "OperatorVerdict",
    "build_M", "build_P", "dk_x_apply", "gamma_star_apply", "lambda_of",
]
