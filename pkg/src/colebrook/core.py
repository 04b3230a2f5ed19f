"""Colebrook residuals in friction-factor and transmission-factor space.

Two working variables are used throughout the package:

* the Darcy friction factor ``lam`` (λ), and
* the transmission factor ``x = 1/sqrt(lam)``.

The Colebrook equation ``1/sqrt(lam) = -2 log10(2.51/(Re sqrt(lam)) + rr/3.7)``
is rewritten as a residual that vanishes at the solution, in either variable.
The x-space residual is strictly increasing and nearly linear, which is why
most solvers in :mod:`colebrook.solvers` iterate on ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LN10 = math.log(10.0)

RE_MIN = 4000.0
RE_MAX = 1e8
RR_MIN = 0.0
RR_MAX = 0.05

# Type aliases; plain floats carry the values.
FrictionFactor = float
TransmissionFactor = float


class ColebrookError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ColebrookError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class SingularStepError(ColebrookError, ArithmeticError):
    """An iteration step would divide by zero."""


@dataclass(frozen=True)
class FlowConditions:
    """One Colebrook instance: Reynolds number and relative roughness ε/D.

    Values outside the validated domain (4000 ≤ Re ≤ 1e8, 0 ≤ ε/D ≤ 0.05) are
    accepted so that sweeps can probe boundaries; check :attr:`in_domain`.
    """

    re: float
    rr: float

    def __post_init__(self) -> None:
        if not (self.re > 0 and math.isfinite(self.re)):
            raise DomainError(f"Reynolds number must be positive and finite, got {self.re!r}")
        if not (self.rr >= 0 and math.isfinite(self.rr)):
            raise DomainError(f"relative roughness must be non-negative, got {self.rr!r}")

    @property
    def in_domain(self) -> bool:
        return RE_MIN <= self.re <= RE_MAX and RR_MIN <= self.rr <= RR_MAX

    def require_domain(self) -> None:
        if not self.in_domain:
            raise DomainError(
                f"(Re={self.re:g}, rr={self.rr:g}) outside 4000 <= Re <= 1e8, 0 <= rr <= 0.05"
            )


def _log10(v: float) -> float:
    return math.log(v) / LN10


def x_from_lambda(lam: float) -> TransmissionFactor:
    """Return the transmission factor ``1/sqrt(lam)``."""
    if not lam > 0:
        raise DomainError(f"friction factor must be positive, got {lam!r}")
    return 1.0 / math.sqrt(lam)


def lambda_from_x(x: float) -> FrictionFactor:
    """Return the friction factor ``x**-2``."""
    if not x > 0:
        raise DomainError(f"transmission factor must be positive, got {x!r}")
    return 1.0 / (x * x)


# --- λ space -----------------------------------------------------------------


def _sqrt_abs(lam: float) -> float:
    if lam == 0:
        raise DomainError("residual is singular at lam = 0")
    return math.sqrt(abs(lam))


def residual_lambda(lam: float, fc: FlowConditions) -> float:
    """Colebrook residual in λ.

    ``|lam|`` is used under the square root, so negative iterates produced by
    a direct Newton step remain evaluable.
    """
    s = _sqrt_abs(lam)
    return 1.0 / s + 2.0 * _log10(2.51 / (fc.re * s) + fc.rr / 3.7)


def residual_lambda_prime(lam: float, fc: FlowConditions) -> float:
    """Derivative of :func:`residual_lambda` with respect to λ (for λ > 0)."""
    s = _sqrt_abs(lam)
    inv = 1.0 / s
    u = 2.51 / (fc.re * s) + fc.rr / 3.7
    return -0.5 * inv**3 * (1.0 + 2.0 * 2.51 / (LN10 * fc.re * u))


# --- x space -----------------------------------------------------------------


def _log_argument(x: float, fc: FlowConditions) -> float:
    u = 2.51 * x / fc.re + fc.rr / 3.7
    if not u > 0:
        raise DomainError(f"log argument 2.51*x/Re + rr/3.7 = {u!r} is not positive (x={x!r})")
    return u


def residual_x(x: float, fc: FlowConditions) -> float:
    """Colebrook residual ``x + 2 log10(2.51 x/Re + rr/3.7)``."""
    return x + 2.0 * _log10(_log_argument(x, fc))


def residual_x_prime(x: float, fc: FlowConditions) -> float:
    """First derivative of :func:`residual_x`; always greater than 1."""
    u = _log_argument(x, fc)
    return 1.0 + 2.0 * (2.51 / (fc.re * LN10)) / u


def residual_x_second(x: float, fc: FlowConditions) -> float:
    """Second derivative of :func:`residual_x`; always negative.

    Equals ``-2*2.51**2 / (Re**2 ln10 u**2)``.  The coefficient is 12.6002;
    the integer form ``-172496738 / (ln10 (9287 x + 1000 rr Re)**2)`` is the
    same expression scaled by 3700**2.
    """
    u = _log_argument(x, fc)
    k = 2.51 / fc.re
    return -(2.0 / LN10) * k * k / (u * u)


def residual_x_third(x: float, fc: FlowConditions) -> float:
    """Third derivative of :func:`residual_x`; always positive."""
    u = _log_argument(x, fc)
    k = 2.51 / fc.re
    return 2.0 * (2.0 / LN10) * k**3 / u**3


def residual_x_derivatives(x: float, fc: FlowConditions, order: int = 1) -> tuple[float, ...]:
    """Return ``(f, f', ...)`` up to ``order`` sharing one log evaluation."""
    u = _log_argument(x, fc)
    k = 2.51 / fc.re
    c = 2.0 / LN10
    out = [x + 2.0 * _log10(u), 1.0 + c * k / u]
    if order >= 2:
        out.append(-c * k * k / (u * u))
    if order >= 3:
        out.append(2.0 * c * k**3 / u**3)
    return tuple(out)


# Integer-coefficient variants, used only to cross-check the forms above.


def residual_x_prime_symbolic(x: float, fc: FlowConditions) -> float:
    ln10 = LN10
    q = 9287.0 * x + 1000.0 * fc.rr * fc.re
    return (9287.0 * ln10 * x + 1000.0 * ln10 * fc.rr * fc.re + 18574.0) / (ln10 * q)


def residual_x_second_symbolic(x: float, fc: FlowConditions) -> float:
    q = 9287.0 * x + 1000.0 * fc.rr * fc.re
    return -172496738.0 / (LN10 * q * q)


def residual_x_third_symbolic(x: float, fc: FlowConditions) -> float:
    q = 9287.0 * x + 1000.0 * fc.rr * fc.re
    return 3203954411612.0 / (LN10 * q**3)
