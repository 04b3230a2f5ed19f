import math

import pytest

from colebrook.approx import (
    NABLA_EXPANSION_X,
    Variant,
    approx_accelerate,
    approx_bundle,
    approx_friction,
    approx_intermediates,
    approx_x0,
    count_log_evaluations,
)
from colebrook.core import DomainError, FlowConditions, residual_x_second, residual_x_third
from colebrook.solvers import solve_reference
from colebrook.sweep import DomainSpec, materialize

C1 = FlowConditions(5e6, 2.5e-5)
C2 = FlowConditions(3e4, 9e-3)
LAM1 = 0.010279663295529
LAM2 = 0.038630738574792
GRID = materialize(DomainSpec.grid(40, 40))


def rel(a, b):
    return abs(a - b) / abs(b)


@pytest.mark.parametrize(
    "fc, nabla",
    [(FlowConditions(1e5, 0.0), 74205.5), (FlowConditions(4000, 0.0), 74205.5), (C1, 199205.5), (C2, 344205.5)],
)
def test_nabla(fc, nabla):
    assert approx_intermediates(fc).nabla == pytest.approx(nabla, abs=1e-9)


def test_intermediate_signs_on_grid():
    for fc in GRID:
        b = approx_intermediates(fc)
        assert b.nabla >= 74205.5
        assert b.b < 0 < b.c


def test_constants_match_residual_derivatives_at_expansion_point():
    # With x fixed at the expansion point, Re*u = nabla/3700 and the
    # surrogates reduce to the exact second and third derivatives.
    for fc in (C1, C2, FlowConditions(4000, 0.05), FlowConditions(1e8, 1e-7), FlowConditions(1e5, 0.0)):
        b = approx_intermediates(fc)
        assert b.b == pytest.approx(residual_x_second(NABLA_EXPANSION_X, fc), rel=1e-6)
        assert b.c == pytest.approx(residual_x_third(NABLA_EXPANSION_X, fc), rel=1e-6)


@pytest.mark.parametrize("fc, lam", [(C1, LAM1), (C2, LAM2)])
def test_one_shot_halley_within_level_zero_bound(fc, lam):
    x0 = approx_x0(fc, Variant.HALLEY)
    assert rel(1.0 / x0**2, lam) <= 0.0829


def test_variants_agree_within_one_percent():
    for fc in GRID:
        lams = [1.0 / approx_x0(fc, v) ** 2 for v in Variant]
        assert (max(lams) - min(lams)) / min(lams) <= 0.01


@pytest.mark.parametrize("fc, lam", [(C1, LAM1), (C2, LAM2)])
def test_level_two_examples(fc, lam):
    assert rel(approx_friction(fc, 2), lam) <= 0.000617


def test_level_one_at_rough_corner():
    fc = FlowConditions(4000, 0.05)
    assert rel(approx_friction(fc, 1), solve_reference(fc)) <= 0.0069


def test_refinement_is_monotone():
    for fc in GRID:
        lam = solve_reference(fc)
        errs = [rel(approx_friction(fc, level), lam) for level in (0, 1, 2)]
        assert errs[2] < errs[1] < errs[0]


def test_accelerate_zero_stages_is_identity():
    assert approx_accelerate(C1, 9.1, 0) == 9.1


def test_accelerate_composes():
    once = approx_accelerate(C1, 9.1, 1)
    assert approx_accelerate(C1, once, 1) == approx_accelerate(C1, 9.1, 2)
    assert rel(once, -2.0 * math.log10(2.51 * 9.1 / 5e6 + 2.5e-5 / 3.7)) <= 1e-15


def test_accelerate_rejects_bad_input():
    with pytest.raises(ValueError):
        approx_accelerate(C1, 9.1, -1)
    with pytest.raises(DomainError):
        approx_accelerate(C1, 0.0, 1)


def test_bundle_stages():
    bundle = approx_bundle(C1, 2)
    assert len(bundle.x_stage) == 3
    assert bundle.x_stage[0] == approx_x0(C1)
    assert bundle.x_stage[2] == approx_accelerate(C1, bundle.x_stage[0], 2)
    assert bundle.friction == approx_friction(C1, 2)
    with pytest.raises(ValueError):
        approx_bundle(C1, 3)


@pytest.mark.parametrize("level", [0, 1, 2])
def test_logarithm_budget(level):
    # One log for A, then one per acceleration.
    with count_log_evaluations() as n:
        approx_friction(C2, level)
    assert n[0] == level + 1


def test_log_counter_is_scoped():
    with count_log_evaluations() as outer:
        approx_friction(C1, 0)
        with count_log_evaluations() as inner:
            approx_friction(C1, 2)
        approx_friction(C1, 1)
    assert inner[0] == 3
    assert outer[0] == 3
