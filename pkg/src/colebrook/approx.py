"""Explicit friction-factor approximations built from one Householder step.

A single Halley, Schröder or third-order step is taken from a fixed
expansion point, with the residual and its derivatives replaced by
closed-form surrogates ``A``, ``B`` and ``C``.  The resulting one-shot
estimate is then refined by applying the Colebrook right-hand side as a
fixed-point map (one logarithm per application).

Worst-case error over the default error-map domain, relative to the exact root:

======  ===============================  ===========
level   logarithm evaluations (total)    max error
======  ===============================  ===========
0       1                                8.29 %
1       2                                0.69 %
2       3                                0.0617 %
======  ===============================  ===========
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .core import LN10, DomainError, FlowConditions, lambda_from_x

NABLA_OFFSET = 74205.5
B_NUMERATOR = -74914381.46
C_NUMERATOR = 1391459721232.67
# x at which the B and C constants equal f'' and f''' of the x-space residual.
NABLA_EXPANSION_X = NABLA_OFFSET / 9287.0

_log_counter: contextvars.ContextVar[list[int] | None] = contextvars.ContextVar(
    "colebrook_log_counter", default=None
)


def _log10(v: float) -> float:
    counter = _log_counter.get()
    if counter is not None:
        counter[0] += 1
    return math.log(v) / LN10


@contextlib.contextmanager
def count_log_evaluations() -> Iterator[list[int]]:
    """Count logarithm evaluations made by this module inside the block.

    Yields a one-element list whose item is the running count::

        with count_log_evaluations() as n:
            approx_friction(fc, level=2)
        assert n[0] == 3
    """
    box = [0]
    token = _log_counter.set(box)
    try:
        yield box
    finally:
        _log_counter.reset(token)


class Variant(str, Enum):
    HALLEY = "halley"
    SCHRODER = "schroder"
    HOUSEHOLDER3 = "h3"


@dataclass
class ApproxBundle:
    a: float
    b: float
    c: float
    nabla: float
    x_stage: list[float] = field(default_factory=list)

    @property
    def friction(self) -> float:
        return lambda_from_x(self.x_stage[-1])


def approx_intermediates(fc: FlowConditions) -> ApproxBundle:
    """Compute ``A``, ``B``, ``C`` and ``∇`` with their literal constants."""
    a = 8.0 + 2.0 * _log10(16.0 / fc.re + fc.rr / 3.7)
    nabla = NABLA_OFFSET + 1000.0 * fc.rr * fc.re
    b = B_NUMERATOR / nabla**2
    c = C_NUMERATOR / nabla**3
    return ApproxBundle(a=a, b=b, c=c, nabla=nabla)


def _x0_from(bundle: ApproxBundle, variant: Variant) -> float:
    a, b, c = bundle.a, bundle.b, bundle.c
    if variant is Variant.HALLEY:
        den = 2.0 - a * b
        if den == 0:
            raise DomainError("Halley-form denominator vanished")
        return 8.0 - 2.0 * a / den
    if variant is Variant.SCHRODER:
        return 8.0 - a - a * a * b / 2.0
    den = 6.0 - 6.0 * a * b + a * a * c
    if den == 0:
        raise DomainError("third-order denominator vanished")
    return 8.0 - (6.0 * a - 3.0 * a * a * b) / den


def approx_x0(fc: FlowConditions, variant: Variant | str = Variant.HALLEY) -> float:
    """One-shot explicit estimate of ``x = 1/sqrt(lam)``."""
    return _x0_from(approx_intermediates(fc), Variant(variant))


def accelerate_once(fc: FlowConditions, x: float) -> float:
    u = 2.51 * x / fc.re + fc.rr / 3.7
    if not u > 0:
        raise DomainError(f"log argument {u!r} is not positive (x={x!r})")
    return -2.0 * _log10(u)


def approx_accelerate(fc: FlowConditions, x: float, stages: int) -> float:
    """Apply ``x <- -2 log10(2.51 x/Re + rr/3.7)`` exactly ``stages`` times."""
    if stages < 0:
        raise ValueError(f"stages must be non-negative, got {stages}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x!r}")
    for _ in range(stages):
        x = accelerate_once(fc, x)
    return x


def approx_bundle(
    fc: FlowConditions, level: int = 2, variant: Variant | str = Variant.HALLEY
) -> ApproxBundle:
    """Intermediates plus ``x`` after the one-shot step and each acceleration."""
    if level not in (0, 1, 2):
        raise ValueError(f"level must be 0, 1 or 2, got {level}")
    bundle = approx_intermediates(fc)
    x = _x0_from(bundle, Variant(variant))
    bundle.x_stage.append(x)
    for _ in range(level):
        x = accelerate_once(fc, x)
        bundle.x_stage.append(x)
    return bundle


def approx_friction(
    fc: FlowConditions, level: int = 2, variant: Variant | str = Variant.HALLEY
) -> float:
    """Explicit friction factor at accuracy ``level`` 0, 1 or 2."""
    return approx_bundle(fc, level, variant).friction
