"""Exact computations in projective modules over two-dimensional
noncommutative tori.

The package implements, in closed form over polynomial-Gaussian vectors:
the torus algebra and its derivations (:mod:`nctorus.algebra`), the basic
right and left modules with their commuting endomorphism actions
(:mod:`nctorus.modules`), constant-curvature connections and their
holomorphic Gaussian vectors (:mod:`nctorus.connections`), certified
theta-series evaluation (:mod:`nctorus.theta`), and the bilinear tensor
product of a right and a left module together with its theta-series
closed form and structure constants (:mod:`nctorus.tensor`).  The
:mod:`nctorus.cli` module exposes everything as the ``nctorus`` command.
"""

from .algebra import (
    BezoutPair,
    TorusElement,
    bezout,
    derivation,
    element,
    involution,
    monomial,
    mul,
    theta_double_prime,
    theta_prime,
    trace,
    unit,
)
from .connections import (
    ComplexStructure,
    curvature_constant,
    dbar_residual,
    holomorphic_basis,
    leibniz_defect,
    nabla1,
    nabla2,
)
from .errors import (
    DegenerateDenominator,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidS,
    InvalidSigma,
    NCTorusError,
    NoHolomorphicVectors,
    NonConvergent,
    NotCoprime,
    SignAssumptionViolated,
    WrongSide,
)
from .gaussians import (
    PolyGaussTerm,
    PolyGaussVector,
    approx_eq,
    evaluate,
    gaussian,
    l2_pairing,
    vector,
    zero,
)
from .modules import (
    LEFT,
    RIGHT,
    BimoduleProfile,
    ModuleTag,
    act_element,
    act_U1,
    act_U2,
    act_Z1,
    act_Z2,
    bimodule_profile,
    module_tag,
)
from .tensor import (
    ProductClosedForm,
    ProductParams,
    StructureConstants,
    crt_q0,
    product_basis,
    product_params,
    structure_constants,
    tensor_direct,
    tensor_gaussian_closed,
    verify_delta_period,
    verify_identification,
    verify_z_covariance,
)
from .theta import ThetaParams, theta, theta_st, theta_truncated, truncation_radius

__version__ = "0.1.0"

__all__ = [
    "BezoutPair",
    "BimoduleProfile",
    "ComplexStructure",
    "DegenerateDenominator",
    "DimensionMismatch",
    "IndexOutOfRange",
    "InvalidS",
    "InvalidSigma",
    "LEFT",
    "ModuleTag",
    "NCTorusError",
    "NoHolomorphicVectors",
    "NonConvergent",
    "NotCoprime",
    "PolyGaussTerm",
    "PolyGaussVector",
    "ProductClosedForm",
    "ProductParams",
    "RIGHT",
    "SignAssumptionViolated",
    "StructureConstants",
    "ThetaParams",
    "TorusElement",
    "WrongSide",
    "act_U1",
    "act_U2",
    "act_Z1",
    "act_Z2",
    "act_element",
    "approx_eq",
    "bezout",
    "bimodule_profile",
    "crt_q0",
    "curvature_constant",
    "dbar_residual",
    "derivation",
    "element",
    "evaluate",
    "gaussian",
    "holomorphic_basis",
    "involution",
    "l2_pairing",
    "leibniz_defect",
    "module_tag",
    "monomial",
    "mul",
    "nabla1",
    "nabla2",
    "product_basis",
    "product_params",
    "structure_constants",
    "tensor_direct",
    "tensor_gaussian_closed",
    "theta",
    "theta_double_prime",
    "theta_prime",
    "theta_st",
    "theta_truncated",
    "trace",
    "truncation_radius",
    "unit",
    "vector",
    "verify_delta_period",
    "verify_identification",
    "verify_z_covariance",
    "zero",
]
