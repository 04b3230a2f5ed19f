"""Iterative solvers for the Colebrook equation.

Every solver returns an :class:`IterationTrace` holding the full iterate
history, the residual at each iterate and the per-step intermediate values
(derivatives, secant slopes, three-point sub-steps).  Hitting the iteration
cap or stepping outside the residual's domain produces a trace with
``converged=False`` rather than an exception; only a step that would divide
by zero raises :class:`~colebrook.core.SingularStepError`.

Stopping rule: iterate until ``|w[i+1] - w[i]| <= tolerance`` in the working
variable ``w`` (λ or x).  The step that satisfies the rule is counted, so a
start at the exact root converges in one iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from . import core
from .core import (
    LN10,
    ColebrookError,
    DomainError,
    FlowConditions,
    SingularStepError,
    residual_lambda,
    residual_lambda_prime,
    residual_x,
    residual_x_derivatives,
)
from .starting_points import (
    FIXED_HALLEY,
    FIXED_NEWTON,
    FIXED_NEWTON_X0,
    FIXED_THREE_POINT,
    TRADITIONAL,
    StartStrategy,
    initial_lambda,
    initial_x,
    start_traditional,
)


class Method(str, Enum):
    FIXED_POINT = "fixed-point"
    NEWTON_LAMBDA = "newton-lambda"
    NEWTON_X = "newton-x"
    HALLEY_X = "halley-x"
    SCHRODER_X = "schroder-x"
    HOUSEHOLDER3_X = "h3-x"
    SECANT_LAMBDA = "secant-lambda"
    SECANT_X = "secant-x"
    THREE_POINT_X = "3pt"

    @classmethod
    def parse(cls, text: str) -> Method:
        text = text.strip().lower()
        if text in _ALIASES:
            return _ALIASES[text]
        try:
            return cls(text)
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {text!r}; expected one of {names}") from None

    @property
    def in_lambda(self) -> bool:
        return self in (Method.NEWTON_LAMBDA, Method.SECANT_LAMBDA)


_ALIASES = {
    "fixed": Method.FIXED_POINT,
    "newton": Method.NEWTON_X,
    "halley": Method.HALLEY_X,
    "schroder": Method.SCHRODER_X,
    "h3": Method.HOUSEHOLDER3_X,
    "householder3": Method.HOUSEHOLDER3_X,
    "secant": Method.SECANT_X,
    "three-point": Method.THREE_POINT_X,
}

DEFAULT_START = {
    Method.FIXED_POINT: TRADITIONAL,
    Method.NEWTON_LAMBDA: TRADITIONAL,
    Method.NEWTON_X: FIXED_NEWTON,
    Method.HALLEY_X: FIXED_HALLEY,
    Method.SCHRODER_X: FIXED_HALLEY,
    Method.HOUSEHOLDER3_X: TRADITIONAL,
    Method.SECANT_LAMBDA: TRADITIONAL,
    Method.SECANT_X: TRADITIONAL,
    Method.THREE_POINT_X: FIXED_THREE_POINT,
}


class Stop(str, Enum):
    STEP = "step"  # |Δw| in the working variable
    LAMBDA_STEP = "lambda-step"  # |Δλ| whatever the working variable


@dataclass(frozen=True)
class SolverConfig:
    """Solver selection and stopping parameters.

    ``start`` defaults to the method's natural start (see ``DEFAULT_START``).
    For the secant methods ``start`` gives the newer of the two initial points
    and ``secant_prior`` the older one.  ``verify`` appends one control step
    after convergence; it is stored apart and not counted.
    """

    method: Method = Method.NEWTON_X
    start: StartStrategy | None = None
    tolerance: float = 1e-8
    max_iterations: int = 100
    strict_domain: bool = False
    stop: Stop = Stop.STEP
    verify: bool = False
    secant_prior: StartStrategy = FIXED_NEWTON

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations!r}")

    @property
    def effective_start(self) -> StartStrategy:
        return self.start if self.start is not None else DEFAULT_START[self.method]


@dataclass
class IterationTrace:
    method: Method
    fc: FlowConditions
    iterates: list[float]
    residuals: list[float] = field(default_factory=list)
    aux: list[dict[str, float]] = field(default_factory=list)
    converged: bool = False
    prior: float | None = None
    control: dict[str, float] | None = None
    failure: str | None = None

    @property
    def iterations(self) -> int:
        return len(self.iterates) - 1

    @property
    def final(self) -> float:
        return self.iterates[-1]

    @property
    def final_lambda(self) -> float:
        w = self.iterates[-1]
        return w if self.method.in_lambda else 1.0 / (w * w)

    @property
    def final_x(self) -> float:
        w = self.iterates[-1]
        return 1.0 / math.sqrt(w) if self.method.in_lambda else w

    def lambdas(self) -> list[float]:
        if self.method.in_lambda:
            return list(self.iterates)
        return [1.0 / (w * w) for w in self.iterates]


Step = Callable[[float], "tuple[float, float, dict[str, float]]"]


def _run(
    method: Method,
    fc: FlowConditions,
    cfg: SolverConfig,
    w0: float,
    step: Step,
    residual: Callable[[float, FlowConditions], float],
    prior: float | None = None,
) -> IterationTrace:
    if cfg.strict_domain:
        fc.require_domain()
    trace = IterationTrace(method, fc, [w0], prior=prior)
    tol = cfg.tolerance
    as_lambda = cfg.stop is Stop.LAMBDA_STEP and not method.in_lambda
    w = w0
    for _ in range(cfg.max_iterations):
        try:
            w_next, f_w, aux = step(w)
        except (DomainError, OverflowError) as exc:
            trace.failure = str(exc)
            break
        trace.residuals.append(f_w)
        trace.aux.append(aux)
        trace.iterates.append(w_next)
        if not math.isfinite(w_next):
            trace.failure = f"non-finite iterate {w_next!r}"
            break
        if as_lambda:
            if w <= 0 or w_next <= 0:
                trace.failure = "non-positive transmission factor"
                break
            done = abs(1.0 / (w_next * w_next) - 1.0 / (w * w)) <= tol
        else:
            done = abs(w_next - w) <= tol
        w = w_next
        if done:
            trace.converged = True
            break
    else:
        trace.failure = f"no convergence within {cfg.max_iterations} iterations"

    if len(trace.residuals) < len(trace.iterates):
        try:
            trace.residuals.append(residual(trace.iterates[-1], fc))
        except (DomainError, ValueError, OverflowError):
            trace.residuals.append(math.nan)
    if cfg.verify and trace.converged:
        try:
            w_ctrl, f_ctrl, aux = step(trace.iterates[-1])
            trace.control = {"value": w_ctrl, "f": f_ctrl, **aux}
        except (ColebrookError, ZeroDivisionError, OverflowError):
            trace.control = None
    return trace


# --- steps -------------------------------------------------------------------


def _fixed_point_step(fc: FlowConditions) -> Step:
    def step(x: float) -> tuple[float, float, dict[str, float]]:
        u = 2.51 * x / fc.re + fc.rr / 3.7
        if not u > 0:
            raise DomainError(f"log argument {u!r} is not positive (x={x!r})")
        g = -2.0 * math.log(u) / LN10
        return g, x - g, {}

    return step


def _newton_lambda_step(fc: FlowConditions) -> Step:
    def step(lam: float) -> tuple[float, float, dict[str, float]]:
        f = residual_lambda(lam, fc)
        fp = residual_lambda_prime(lam, fc)
        if fp == 0:
            raise SingularStepError(f"f'(lam) = 0 at lam={lam!r}")
        return lam - f / fp, f, {"fp": fp}

    return step


def _newton_x_step(fc: FlowConditions) -> Step:
    def step(x: float) -> tuple[float, float, dict[str, float]]:
        f, fp = residual_x_derivatives(x, fc, 1)
        return x - f / fp, f, {"fp": fp}

    return step


def _halley_x_step(fc: FlowConditions) -> Step:
    def step(x: float) -> tuple[float, float, dict[str, float]]:
        f, fp, fpp = residual_x_derivatives(x, fc, 2)
        den = 2.0 * fp * fp - f * fpp
        if den == 0:
            raise SingularStepError(f"Halley denominator vanished at x={x!r}")
        return x - 2.0 * f * fp / den, f, {"fp": fp, "fpp": fpp}

    return step


def _schroder_x_step(fc: FlowConditions) -> Step:
    def step(x: float) -> tuple[float, float, dict[str, float]]:
        f, fp, fpp = residual_x_derivatives(x, fc, 2)
        return x - f / fp - fpp * f * f / (2.0 * fp**3), f, {"fp": fp, "fpp": fpp}

    return step


def _householder3_x_step(fc: FlowConditions) -> Step:
    def step(x: float) -> tuple[float, float, dict[str, float]]:
        f, fp, fpp, fppp = residual_x_derivatives(x, fc, 3)
        num = 6.0 * f * fp * fp - 3.0 * f * f * fpp
        den = 6.0 * fp**3 - 6.0 * f * fp * fpp + f * f * fppp
        if den == 0:
            raise SingularStepError(f"third-order denominator vanished at x={x!r}")
        return x - num / den, f, {"fp": fp, "fpp": fpp, "fppp": fppp}

    return step


def _secant_step(
    fc: FlowConditions, residual: Callable[[float, FlowConditions], float], prior: float
) -> Step:
    state = {"prev": prior, "f_prev": residual(prior, fc)}

    def step(w: float) -> tuple[float, float, dict[str, float]]:
        prev, f_prev = state["prev"], state["f_prev"]
        f = residual(w, fc)
        if prev == w:
            raise SingularStepError("secant points coincide")
        slope = (f_prev - f) / (prev - w)
        if slope == 0:
            raise SingularStepError(f"secant slope vanished at w={w!r}")
        state["prev"], state["f_prev"] = w, f
        return w - f / slope, f, {"f_prev": f_prev, "slope": slope}

    return step


def _three_point_step(fc: FlowConditions) -> Step:
    def step(x: float) -> tuple[float, float, dict[str, float]]:
        fx, dfx = residual_x_derivatives(x, fc, 1)
        aux = {"fp": dfx}
        if fx == 0:
            return x, fx, aux
        y = x - fx / dfx
        fy = residual_x(y, fc)
        aux.update(y=y, f_y=fy)
        if fy == 0:
            return y, fx, aux
        den = fx - 2.0 * fy
        if den == 0:
            raise SingularStepError(f"three-point corrector denominator vanished at x={x!r}")
        z = y - fx / den * fy / dfx
        fz = residual_x(z, fc)
        aux.update(z=z, f_z=fz)
        if fz == 0:
            return z, fx, aux
        t = fy / fx
        weight = (1.0 - 2.0 * t - t * t) * (1.0 - fz / fy) * (1.0 - 2.0 * fz / fx)
        if weight == 0:
            # fz == fy at the rounding floor: z is converged, a Newton touch-up suffices
            return z - fz / dfx, fx, aux
        return z - fz / (dfx * weight), fx, aux

    return step


# --- public solvers ------------------------------------------------------------


def solve_fixed_point(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    """Substitute ``x <- -2 log10(2.51 x/Re + rr/3.7)`` until the step is small."""
    cfg = cfg or SolverConfig(Method.FIXED_POINT)
    x0 = initial_x(fc, cfg.effective_start)
    return _run(Method.FIXED_POINT, fc, cfg, x0, _fixed_point_step(fc), residual_x)


def solve_newton_lambda(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    """Newton-Raphson directly on λ; negative transient iterates are allowed."""
    cfg = cfg or SolverConfig(Method.NEWTON_LAMBDA)
    lam0 = initial_lambda(fc, cfg.effective_start)
    return _run(Method.NEWTON_LAMBDA, fc, cfg, lam0, _newton_lambda_step(fc), residual_lambda)


def solve_newton_x(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    cfg = cfg or SolverConfig(Method.NEWTON_X)
    x0 = initial_x(fc, cfg.effective_start)
    return _run(Method.NEWTON_X, fc, cfg, x0, _newton_x_step(fc), residual_x)


def solve_halley_x(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    cfg = cfg or SolverConfig(Method.HALLEY_X)
    x0 = initial_x(fc, cfg.effective_start)
    return _run(Method.HALLEY_X, fc, cfg, x0, _halley_x_step(fc), residual_x)


def solve_schroder_x(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    cfg = cfg or SolverConfig(Method.SCHRODER_X)
    x0 = initial_x(fc, cfg.effective_start)
    return _run(Method.SCHRODER_X, fc, cfg, x0, _schroder_x_step(fc), residual_x)


def solve_householder3_x(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    cfg = cfg or SolverConfig(Method.HOUSEHOLDER3_X)
    x0 = initial_x(fc, cfg.effective_start)
    return _run(Method.HOUSEHOLDER3_X, fc, cfg, x0, _householder3_x_step(fc), residual_x)


def solve_secant(
    fc: FlowConditions, cfg: SolverConfig | None = None, space: str = "x"
) -> IterationTrace:
    """Derivative-free secant iteration in λ (``space="lambda"``) or x.

    The older point comes from ``cfg.secant_prior`` (fixed Newton start by
    default) and the newer from ``cfg.start`` (traditional by default).
    """
    if space not in ("x", "lambda"):
        raise ValueError(f"space must be 'x' or 'lambda', got {space!r}")
    method = Method.SECANT_LAMBDA if space == "lambda" else Method.SECANT_X
    if cfg is None:
        cfg = SolverConfig(method)
    start = cfg.start if cfg.start is not None else DEFAULT_START[method]
    if space == "lambda":
        w0 = initial_lambda(fc, start)
        prior = initial_lambda(fc, cfg.secant_prior)
        residual = residual_lambda
    else:
        w0 = initial_x(fc, start)
        prior = initial_x(fc, cfg.secant_prior)
        residual = residual_x
    step = _secant_step(fc, residual, prior)
    return _run(method, fc, cfg, w0, step, residual, prior=prior)


def solve_threepoint_x(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    """Three-point eighth-order method; one outer iteration is three sub-steps."""
    cfg = cfg or SolverConfig(Method.THREE_POINT_X)
    x0 = initial_x(fc, cfg.effective_start)
    return _run(Method.THREE_POINT_X, fc, cfg, x0, _three_point_step(fc), residual_x)


_DISPATCH: dict[Method, Callable[[FlowConditions, SolverConfig], IterationTrace]] = {
    Method.FIXED_POINT: solve_fixed_point,
    Method.NEWTON_LAMBDA: solve_newton_lambda,
    Method.NEWTON_X: solve_newton_x,
    Method.HALLEY_X: solve_halley_x,
    Method.SCHRODER_X: solve_schroder_x,
    Method.HOUSEHOLDER3_X: solve_householder3_x,
    Method.SECANT_LAMBDA: lambda fc, cfg: solve_secant(fc, cfg, "lambda"),
    Method.SECANT_X: lambda fc, cfg: solve_secant(fc, cfg, "x"),
    Method.THREE_POINT_X: solve_threepoint_x,
}


def solve(fc: FlowConditions, cfg: SolverConfig | None = None) -> IterationTrace:
    """Run the method selected by ``cfg.method``."""
    cfg = cfg or SolverConfig()
    return _DISPATCH[cfg.method](fc, cfg)


class OracleError(ColebrookError):
    """The reference solver failed to certify a root."""


REFERENCE_TOL = 1e-15
REFERENCE_MAX_ITER = 200
REFERENCE_RESIDUAL = 1e-13


def reference_x(fc: FlowConditions) -> float:
    """High-accuracy root in x: Newton from the traditional start.

    Iterates until the step falls below ``1e-15`` relative to x or the
    iterate starts cycling at the last bit, then certifies
    ``|residual_x| <= 1e-13``.
    """
    x = start_traditional(fc) if fc.rr > 0 else FIXED_NEWTON_X0
    k = 2.51 / fc.re
    c = 2.0 / LN10
    a = fc.rr / 3.7
    older = math.nan
    for _ in range(REFERENCE_MAX_ITER):
        u = k * x + a
        if not u > 0:
            raise OracleError(f"reference iterate left the domain at {fc}")
        dx = (x + c * math.log(u)) / (1.0 + c * k / u)
        x_new = x - dx
        if abs(dx) <= REFERENCE_TOL * abs(x) or x_new == older:
            x = x_new
            break
        older, x = x, x_new
    else:
        raise OracleError(f"reference solver did not converge at {fc}")
    if not abs(residual_x(x, fc)) <= REFERENCE_RESIDUAL:
        raise OracleError(f"reference root not certified at {fc}: residual {residual_x(x, fc)!r}")
    return x


def solve_reference(fc: FlowConditions) -> float:
    """Reference friction factor used as ground truth for error maps."""
    return core.lambda_from_x(reference_x(fc))
