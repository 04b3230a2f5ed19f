import math

import numpy as np
import pytest

from colebrook.core import DomainError, FlowConditions
from colebrook.lambert_w import (
    LN_FLOAT_MAX,
    LambertStartError,
    WMethod,
    alpha_argument,
    alpha_overflows,
    colebrook_via_lambert,
    lambert_w,
    lambert_y,
)
from colebrook.solvers import solve_reference


@pytest.mark.parametrize(
    "re, method, z",
    [
        (5e6, WMethod.NEWTON, 12.14835704),
        (5e6, WMethod.HALLEY, 12.14835704),
        (3e4, WMethod.SCHRODER, 7.512929679),
    ],
)
def test_published_values(re, method, z):
    t = lambert_w(lambert_y(re), method)
    assert t.converged
    assert t.value == pytest.approx(z, abs=5e-9)


def test_published_arguments_are_rounded():
    assert lambert_y(5e6) == pytest.approx(2293411.45, abs=5e-3)
    assert lambert_y(3e4) == pytest.approx(13760.47, abs=5e-3)
    # The two-decimal y moves W in the ninth digit; the printed W uses the unrounded y.
    assert abs(lambert_w(13760.47).value - 7.512929679) > 5e-9


@pytest.mark.parametrize("y, w", [(1835.0, 5.763291081), (45871560.0, 14.93748223)])
def test_extreme_reynolds_values(y, w):
    assert lambert_w(y).value == pytest.approx(w, abs=5e-9)


def test_lambert_y_matches_range_ends():
    assert lambert_y(4000) == pytest.approx(1835, rel=1e-3)
    assert lambert_y(1e8) == pytest.approx(45871560, rel=1e-4)


@pytest.mark.parametrize("method", list(WMethod))
def test_w_of_e_is_one(method):
    assert lambert_w(math.e, method).value == pytest.approx(1.0, abs=1e-12)


def test_argument_and_start_validation():
    for y in (0.0, -1.0):
        with pytest.raises(DomainError):
            lambert_w(y)
    with pytest.raises(LambertStartError):
        lambert_w(10.0, z0=-1.0)
    with pytest.raises(LambertStartError):
        lambert_w(10.0, z0=800.0)


def test_defining_identity_and_method_agreement():
    for y in np.geomspace(1835, 4.6e7, 40):
        values = []
        for method in WMethod:
            t = lambert_w(float(y), method)
            assert t.converged
            assert abs(t.value * math.exp(t.value) - y) <= 1e-12 * y
            values.append(t.value)
        assert max(values) - min(values) <= 1e-10


@pytest.mark.parametrize("re", [5e6, 3e4])
def test_iteration_ordering(re):
    n = {m: lambert_w(lambert_y(re), m).iterations for m in WMethod}
    assert n[WMethod.HALLEY] < n[WMethod.SCHRODER] < n[WMethod.NEWTON]


def test_newton_fails_from_low_start():
    t = lambert_w(45871560.0, WMethod.NEWTON, z0=8.0)
    assert not t.converged
    assert t.failure


def test_iteration_cap():
    t = lambert_w(45871560.0, WMethod.NEWTON, max_iterations=3)
    assert not t.converged
    assert t.iterations == 3


def test_smooth_pipe_is_exact():
    fc = FlowConditions(1e6, 0.0)
    assert colebrook_via_lambert(fc) == pytest.approx(solve_reference(fc), rel=1e-10)


def test_rough_pipe_example_within_two_percent():
    lam = colebrook_via_lambert(FlowConditions(5e6, 2.5e-5))
    assert abs(lam - 0.010279663295529) / 0.010279663295529 <= 0.02


def test_alpha_argument():
    small = alpha_argument(FlowConditions(4000, 1e-6))
    assert not small.overflow and math.isfinite(math.exp(small.alpha))
    big = alpha_argument(FlowConditions(1e8, 0.05))
    assert big.overflow
    assert big.alpha == pytest.approx(1e8 * 0.05 * math.log(10) / (2 * 2.51 * 3.7), rel=1e-4)


def test_alpha_overflow_boundary():
    assert LN_FLOAT_MAX == pytest.approx(709.782712893384)
    assert not alpha_overflows(709.0)
    assert not alpha_overflows(LN_FLOAT_MAX)
    assert alpha_overflows(math.nextafter(LN_FLOAT_MAX, math.inf))
