"""Principal-branch Lambert W by Householder iterations, and Colebrook through W."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from enum import Enum

from .core import LN10, ColebrookError, DomainError, FlowConditions

DEFAULT_Z0 = 15.0
DEFAULT_TOL = 1e-12
LN_FLOAT_MAX = math.log(sys.float_info.max)


class WMethod(str, Enum):
    NEWTON = "newton"
    HALLEY = "halley"
    SCHRODER = "schroder"


class LambertStartError(ColebrookError, ValueError):
    """The initial iterate cannot be used (off-branch or exp overflow)."""


@dataclass
class LambertTrace:
    y: float
    method: WMethod
    iterates: list[float]
    residuals: list[float] = field(default_factory=list)
    converged: bool = False
    failure: str | None = None

    @property
    def iterations(self) -> int:
        return len(self.iterates) - 1

    @property
    def value(self) -> float:
        return self.iterates[-1]


def lambert_w(
    y: float,
    method: WMethod | str = WMethod.HALLEY,
    z0: float = DEFAULT_Z0,
    tol: float = DEFAULT_TOL,
    max_iterations: int = 100,
) -> LambertTrace:
    """Solve ``z e^z = y`` for ``y > 0``.

    Stops at the first iterate with ``|z e^z - y| <= tol * y``.  If ``e^z``
    overflows mid-iteration the trace ends with a non-finite iterate and
    ``converged=False``.
    """
    if not y > 0:
        raise DomainError(f"y must be positive, got {y!r}")
    if not z0 > -1:
        raise LambertStartError(f"z0 must exceed -1 for the principal branch, got {z0!r}")
    if z0 > LN_FLOAT_MAX:
        raise LambertStartError(f"exp(z0) overflows for z0={z0!r}")
    method = WMethod(method)
    trace = LambertTrace(y, method, [float(z0)])
    z = float(z0)
    for _ in range(max_iterations + 1):
        try:
            ez = math.exp(z)
        except OverflowError:
            trace.residuals.append(math.inf)
            trace.failure = f"exp overflow at z={z!r}"
            break
        f = z * ez - y
        trace.residuals.append(f)
        if abs(f) <= tol * y:
            trace.converged = True
            break
        if trace.iterations == max_iterations:
            trace.failure = f"no convergence within {max_iterations} iterations"
            break
        fp = ez * (z + 1.0)
        if method is WMethod.NEWTON:
            z = z - f / fp
        elif method is WMethod.HALLEY:
            fpp = ez * (z + 2.0)
            z = z - f / (fp - f * fpp / (2.0 * fp))
        else:
            fpp = ez * (z + 2.0)
            z = z - f / fp - fpp * f * f / (2.0 * fp**3)
        trace.iterates.append(z)
        if not math.isfinite(z):
            trace.residuals.append(math.nan)
            trace.failure = f"non-finite iterate {z!r}"
            break
    return trace


def lambert_y(re: float) -> float:
    """Argument of W for the smooth-pipe closed form: ``Re ln10 / 5.02``."""
    return re * LN10 / (2.0 * 2.51)


def colebrook_via_lambert(
    fc: FlowConditions, method: WMethod | str = WMethod.HALLEY, tol: float = DEFAULT_TOL
) -> float:
    """Friction factor from the W closed form with the roughness term added back.

    Exact for rr = 0; an explicit approximation (errors of about 2%) otherwise.
    """
    trace = lambert_w(lambert_y(fc.re), method, DEFAULT_Z0, tol)
    if not trace.converged:
        raise ColebrookError(f"Lambert W did not converge for Re={fc.re:g}: {trace.failure}")
    w = trace.value
    x = -2.0 * math.log(2.0 * 2.51 * w / (fc.re * LN10) + fc.rr / 3.7) / LN10
    return 1.0 / (x * x)


@dataclass(frozen=True)
class AlphaArgument:
    alpha: float
    overflow: bool


def alpha_overflows(alpha: float) -> bool:
    """True when ``e**alpha`` exceeds the largest finite double."""
    return alpha > LN_FLOAT_MAX


def alpha_argument(fc: FlowConditions) -> AlphaArgument:
    """Exponent α of the W argument in the roughness-inclusive closed form.

    ``alpha = Re rr ln10 / (2 2.51 3.7) - ln(2 3.7 / (Re ln10))``; only the
    overflow classification is used, ``W(e**alpha)`` itself is not evaluated.
    """
    alpha = fc.re * fc.rr * LN10 / (2.0 * 2.51 * 3.7) - math.log(2.0 * 3.7 / (fc.re * LN10))
    return AlphaArgument(alpha, alpha_overflows(alpha))
