"""Domain sweeps: iteration-count maps and relative-error maps over (Re, ε/D).

Points are laid out log-uniformly in both Re and ε/D, either on a tensor grid
or from a two-dimensional Sobol sequence.  Per-point work is independent;
with ``jobs > 1`` the point list is split into contiguous chunks evaluated in
worker processes and re-assembled in order, so the result is identical to a
sequential run.
"""

from __future__ import annotations

import json
import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

import numpy as np
from scipy.stats import qmc

from .approx import approx_friction
from .core import ColebrookError, FlowConditions, lambda_from_x
from .lambert_w import colebrook_via_lambert
from .solvers import Method, OracleError, SolverConfig, solve, solve_reference
from .starting_points import StartStrategy, start_approx_seeded, start_traditional

NONCONVERGED = -1.0


class SweepError(ColebrookError):
    pass


class MetricKind(str, Enum):
    ITERATION_COUNT = "IterationCount"
    RELATIVE_ERROR_PCT = "RelativeErrorPct"


@dataclass(frozen=True)
class DomainSpec:
    """Sampled rectangle of the (Re, ε/D) plane, log10-scaled on both axes."""

    re_min: float = 4000.0
    re_max: float = 1e8
    rr_min: float = 1e-7
    rr_max: float = 0.05
    sampler: str = "grid"
    n: int = 65536
    nx: int = 256
    ny: int = 256

    def __post_init__(self) -> None:
        if not 0 < self.re_min < self.re_max:
            raise ValueError(f"need 0 < re_min < re_max, got {self.re_min}, {self.re_max}")
        if not 0 < self.rr_min < self.rr_max:
            raise ValueError(f"need 0 < rr_min < rr_max, got {self.rr_min}, {self.rr_max}")
        if self.sampler not in ("grid", "sobol"):
            raise ValueError(f"sampler must be 'grid' or 'sobol', got {self.sampler!r}")
        if self.sampler == "sobol" and self.n < 2:
            raise ValueError(f"Sobol sample size must be >= 2, got {self.n}")
        if self.sampler == "grid" and (self.nx < 2 or self.ny < 2):
            raise ValueError(f"grid needs nx, ny >= 2, got {self.nx}x{self.ny}")

    @classmethod
    def grid(cls, nx: int = 256, ny: int = 256, **bounds: float) -> DomainSpec:
        return cls(sampler="grid", nx=nx, ny=ny, **bounds)

    @classmethod
    def sobol(cls, n: int = 65536, **bounds: float) -> DomainSpec:
        return cls(sampler="sobol", n=n, **bounds)

    def with_bounds(self, **bounds: float) -> DomainSpec:
        return replace(self, **bounds)

    @property
    def size(self) -> int:
        return self.n if self.sampler == "sobol" else self.nx * self.ny


# Narrower rectangle on which the explicit approximations reach their
# 8.29 % / 0.69 % / 0.0617 % worst-case errors.
ERROR_MAP_BOUNDS = {"re_min": 1e4, "re_max": 1e8, "rr_min": 1e-6, "rr_max": 0.05}


def sobol_2d(n: int) -> np.ndarray:
    """First ``n`` points of the unscrambled 2-D Sobol sequence, origin skipped."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = math.ceil(math.log2(n + 1))
    sampler = qmc.Sobol(d=2, scramble=False)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        pts = sampler.random_base2(m)
    return pts[1 : n + 1]


def _log_scale(u: float, lo: float, hi: float) -> float:
    if u == 0.0:
        return lo
    if u == 1.0:
        return hi
    return 10.0 ** (math.log10(lo) + u * (math.log10(hi) - math.log10(lo)))


def materialize(spec: DomainSpec) -> list[FlowConditions]:
    """Flow conditions for every sample; grids are ordered Re-major."""
    if spec.sampler == "sobol":
        unit = sobol_2d(spec.n).tolist()
    else:
        us = [i / (spec.nx - 1) for i in range(spec.nx)]
        vs = [j / (spec.ny - 1) for j in range(spec.ny)]
        unit = [(u, v) for u in us for v in vs]
    return [
        FlowConditions(
            _log_scale(u, spec.re_min, spec.re_max), _log_scale(v, spec.rr_min, spec.rr_max)
        )
        for u, v in unit
    ]


@dataclass
class SweepResult:
    conditions: list[FlowConditions]
    metrics: list[float]
    metric_kind: MetricKind
    label: str = ""

    def _valid(self) -> np.ndarray:
        m = np.asarray(self.metrics, dtype=float)
        return np.where(m == NONCONVERGED, -np.inf, m)

    @property
    def n_points(self) -> int:
        return len(self.metrics)

    @property
    def n_nonconverged(self) -> int:
        return sum(1 for m in self.metrics if m == NONCONVERGED)

    @property
    def argmax_index(self) -> int:
        if self.n_nonconverged == self.n_points:
            raise ValueError("no converged points")
        return int(np.argmax(self._valid()))

    @property
    def max_value(self) -> float:
        return float(self.metrics[self.argmax_index])

    @property
    def argmax(self) -> FlowConditions:
        return self.conditions[self.argmax_index]

    @property
    def mean(self) -> float:
        vals = [m for m in self.metrics if m != NONCONVERGED]
        if not vals:
            raise ValueError("mean of an empty sweep result")
        return math.fsum(vals) / len(vals)

    def summary(self) -> dict[str, object]:
        arg = self.argmax
        return {
            "metric_kind": self.metric_kind.value,
            "n_points": self.n_points,
            "max_value": self.max_value,
            "argmax_re": arg.re,
            "argmax_rr": arg.rr,
            "mean": self.mean,
            "n_nonconverged": self.n_nonconverged,
        }

    def write_csv(self, path: str | os.PathLike[str]) -> None:
        lines = ["re,rr,metric"]
        lines += [f"{c.re:.16e},{c.rr:.16e},{m:.16e}" for c, m in zip(self.conditions, self.metrics)]
        Path(path).write_text("\n".join(lines) + "\n")

    def write_summary(self, path: str | os.PathLike[str]) -> None:
        Path(path).write_text(json.dumps(self.summary(), indent=2) + "\n")


def mean_iterations(result: SweepResult) -> float:
    """Average iteration count over converged points."""
    if result.metric_kind is not MetricKind.ITERATION_COUNT:
        raise ValueError("mean_iterations needs an iteration-count result")
    return result.mean


# --- estimators ----------------------------------------------------------------


@dataclass(frozen=True)
class Estimator:
    """Explicit friction estimate compared against the reference root.

    Text forms: ``approx:0``, ``approx:1``, ``approx:2``, ``traditional``,
    ``approx-seeded``, ``lambert``.
    """

    kind: str
    level: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("approx", "traditional", "approx-seeded", "lambert"):
            raise ValueError(f"unknown estimator {self.kind!r}")
        if self.kind == "approx" and self.level not in (0, 1, 2):
            raise ValueError(f"approx level must be 0, 1 or 2, got {self.level}")

    @classmethod
    def parse(cls, text: str) -> Estimator:
        text = text.strip().lower()
        if text.startswith("approx:"):
            return cls("approx", int(text.split(":", 1)[1]))
        return cls(text)

    def __str__(self) -> str:
        return f"approx:{self.level}" if self.kind == "approx" else self.kind

    def __call__(self, fc: FlowConditions) -> float:
        if self.kind == "approx":
            return approx_friction(fc, self.level)
        if self.kind == "traditional":
            return lambda_from_x(start_traditional(fc))
        if self.kind == "approx-seeded":
            return lambda_from_x(start_approx_seeded(fc))
        return colebrook_via_lambert(fc)


# --- per-point workers -----------------------------------------------------------


def _iteration_chunk(args: tuple[SolverConfig, list[FlowConditions]]) -> list[float]:
    cfg, points = args
    out = []
    for fc in points:
        try:
            trace = solve(fc, cfg)
        except ColebrookError:
            out.append(NONCONVERGED)
            continue
        out.append(float(trace.iterations) if trace.converged else NONCONVERGED)
    return out


def _error_chunk(args: tuple[Estimator, list[FlowConditions]]) -> list[float]:
    estimator, points = args
    out = []
    for fc in points:
        try:
            ref = solve_reference(fc)
        except OracleError as exc:
            raise SweepError(f"reference solver failed at Re={fc.re!r}, rr={fc.rr!r}: {exc}") from exc
        try:
            est = estimator(fc)
        except ColebrookError:
            out.append(NONCONVERGED)
            continue
        out.append(100.0 * abs(est - ref) / ref)
    return out


def _evaluate(worker, payload, points: list[FlowConditions], jobs: int) -> list[float]:
    if jobs <= 1 or len(points) < 2:
        return worker((payload, points))
    n_chunks = min(len(points), jobs * 4)
    bounds = [round(i * len(points) / n_chunks) for i in range(n_chunks + 1)]
    chunks = [(payload, points[a:b]) for a, b in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(worker, chunks))
    return [m for part in parts for m in part]


def iteration_map(
    method: Method | str,
    start: StartStrategy | str | None = None,
    spec: DomainSpec | None = None,
    tol: float = 1e-8,
    max_iterations: int = 100,
    jobs: int = 1,
) -> SweepResult:
    """Iterations to convergence at every sample point."""
    method = Method.parse(method) if isinstance(method, str) else method
    if isinstance(start, str):
        start = StartStrategy.parse(start)
    spec = spec or DomainSpec()
    cfg = SolverConfig(method, start, tolerance=tol, max_iterations=max_iterations)
    points = materialize(spec)
    metrics = _evaluate(_iteration_chunk, cfg, points, jobs)
    label = f"{method.value}/{cfg.effective_start}"
    return SweepResult(points, metrics, MetricKind.ITERATION_COUNT, label)


def error_map(
    estimator: Estimator | str, spec: DomainSpec | None = None, jobs: int = 1
) -> SweepResult:
    """Relative error ``100 |λ_est - λ_ref| / λ_ref`` in percent at every point."""
    if isinstance(estimator, str):
        estimator = Estimator.parse(estimator)
    spec = spec or DomainSpec.sobol(**ERROR_MAP_BOUNDS)
    points = materialize(spec)
    metrics = _evaluate(_error_chunk, estimator, points, jobs)
    return SweepResult(points, metrics, MetricKind.RELATIVE_ERROR_PCT, str(estimator))
