"""Solvers, explicit approximations and domain sweeps for the Colebrook equation."""

from .approx import ApproxBundle, Variant, approx_friction, approx_x0
from .core import (
    ColebrookError,
    DomainError,
    FlowConditions,
    SingularStepError,
    lambda_from_x,
    residual_lambda,
    residual_x,
    x_from_lambda,
)
from .lambert_w import WMethod, colebrook_via_lambert, lambert_w
from .solvers import IterationTrace, Method, SolverConfig, solve, solve_reference
from .starting_points import StartStrategy
from .sweep import DomainSpec, Estimator, SweepResult, error_map, iteration_map

__all__ = [
    "ApproxBundle",
    "ColebrookError",
    "DomainError",
    "DomainSpec",
    "Estimator",
    "FlowConditions",
    "IterationTrace",
    "Method",
    "SingularStepError",
    "SolverConfig",
    "StartStrategy",
    "SweepResult",
    "Variant",
    "WMethod",
    "approx_friction",
    "approx_x0",
    "colebrook_via_lambert",
    "error_map",
    "iteration_map",
    "lambda_from_x",
    "lambert_w",
    "residual_lambda",
    "residual_x",
    "solve",
    "solve_reference",
    "x_from_lambda",
]
