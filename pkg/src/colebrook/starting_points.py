"""Initial iterates for the Colebrook solvers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .approx import Variant, approx_x0
from .core import LN10, DomainError, FlowConditions

# Fixed starts, stored to the precision at which they were published.
FIXED_NEWTON_X0 = 6.44569593948452
FIXED_NEWTON_LAMBDA0 = 0.024069128765100981
FIXED_HALLEY_X0 = 7.990256504
FIXED_HALLEY_LAMBDA0 = 0.015663210285978339
FIXED_THREE_POINT_X0 = 7.273124147
FIXED_THREE_POINT_LAMBDA0 = 0.018904186734624


class StartKind(str, Enum):
    TRADITIONAL = "traditional"
    FIXED_NEWTON = "fixed-newton"
    FIXED_HALLEY = "fixed-halley"
    FIXED_THREE_POINT = "fixed-3pt"
    APPROX_SEEDED = "approx"
    USER_VALUE = "value"


_FIXED = {
    StartKind.FIXED_NEWTON: (FIXED_NEWTON_X0, FIXED_NEWTON_LAMBDA0),
    StartKind.FIXED_HALLEY: (FIXED_HALLEY_X0, FIXED_HALLEY_LAMBDA0),
    StartKind.FIXED_THREE_POINT: (FIXED_THREE_POINT_X0, FIXED_THREE_POINT_LAMBDA0),
}


@dataclass(frozen=True)
class StartStrategy:
    """How to pick the first iterate.

    Text form (used on the command line): ``traditional``, ``fixed-newton``,
    ``fixed-halley``, ``fixed-3pt``, ``approx`` or ``value:<x0>``.
    """

    kind: StartKind
    x0: float | None = None

    def __post_init__(self) -> None:
        if self.kind is StartKind.USER_VALUE:
            if self.x0 is None or not (self.x0 > 0 and math.isfinite(self.x0)):
                raise ValueError(f"user start value must be positive, got {self.x0!r}")
        elif self.x0 is not None:
            raise ValueError(f"{self.kind.value} start takes no value")

    @classmethod
    def parse(cls, text: str) -> StartStrategy:
        text = text.strip()
        if text.startswith("value:"):
            return cls(StartKind.USER_VALUE, float(text[len("value:"):]))
        try:
            return cls(StartKind(text))
        except ValueError:
            names = ", ".join(k.value for k in StartKind if k is not StartKind.USER_VALUE)
            raise ValueError(f"unknown start {text!r}; expected {names} or value:<x0>") from None

    @classmethod
    def value(cls, x0: float) -> StartStrategy:
        return cls(StartKind.USER_VALUE, float(x0))

    def __str__(self) -> str:
        if self.kind is StartKind.USER_VALUE:
            return f"value:{self.x0!r}"
        return self.kind.value


TRADITIONAL = StartStrategy(StartKind.TRADITIONAL)
FIXED_NEWTON = StartStrategy(StartKind.FIXED_NEWTON)
FIXED_HALLEY = StartStrategy(StartKind.FIXED_HALLEY)
FIXED_THREE_POINT = StartStrategy(StartKind.FIXED_THREE_POINT)
APPROX_SEEDED = StartStrategy(StartKind.APPROX_SEEDED)


def start_traditional(fc: FlowConditions) -> float:
    """Rough-pipe limit ``x0 = -2 log10(rr/3.7)``; independent of Re."""
    if fc.rr <= 0:
        raise DomainError("traditional start needs rr > 0 (log of zero)")
    return -2.0 * math.log(fc.rr / 3.7) / LN10


def start_fixed(kind: StartKind | StartStrategy) -> float:
    if isinstance(kind, StartStrategy):
        kind = kind.kind
    try:
        return _FIXED[kind][0]
    except KeyError:
        raise ValueError(f"{kind.value!r} is not a fixed start") from None


def start_approx_seeded(fc: FlowConditions) -> float:
    """Halley-form explicit approximation, within 10% of the root in x."""
    return approx_x0(fc, Variant.HALLEY)


def initial_x(fc: FlowConditions, start: StartStrategy) -> float:
    """Resolve ``start`` to an x-space iterate for ``fc``.

    A traditional start on a perfectly smooth pipe (rr = 0) falls back to the
    fixed Newton start.
    """
    kind = start.kind
    if kind is StartKind.TRADITIONAL:
        if fc.rr == 0:
            return FIXED_NEWTON_X0
        return start_traditional(fc)
    if kind is StartKind.APPROX_SEEDED:
        return start_approx_seeded(fc)
    if kind is StartKind.USER_VALUE:
        assert start.x0 is not None
        return start.x0
    return start_fixed(kind)


def initial_lambda(fc: FlowConditions, start: StartStrategy) -> float:
    """Resolve ``start`` to a λ-space iterate; fixed kinds use their published λ."""
    if start.kind in _FIXED:
        return _FIXED[start.kind][1]
    x0 = initial_x(fc, start)
    return 1.0 / (x0 * x0)
