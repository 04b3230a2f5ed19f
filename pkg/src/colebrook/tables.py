"""Published worked examples, embedded as data, and their from-scratch replay.

Each fixture holds the printed numbers as strings so the comparison tolerance
can follow the printed precision: a cell matches when the recomputed value is
within half a unit of its last printed digit, or within 1e-9 absolute,
whichever is looser.

Row ``Iteration k`` lists the residual and derivatives at iterate ``k-1``
followed by iterate ``k``; ``Control step`` is one further step taken from
the converged value.  Printed iteration counts follow display convergence:
the count is the first iterate whose value, shown at the printed precision,
equals the converged value shown the same way.

A handful of printed cells are known misprints.  They are listed per case
with a reason and reported as skipped rather than compared.  Secant slopes
formed from residuals near 1e-9 carry cancellation noise, so their tolerance
is widened by the conditioning of the difference quotient.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from typing import Callable

from .core import FlowConditions, residual_x, residual_x_prime
from .lambert_w import WMethod, lambert_w, lambert_y
from .solvers import Method, SolverConfig, solve
from .starting_points import (
    FIXED_HALLEY,
    FIXED_NEWTON,
    FIXED_THREE_POINT,
    TRADITIONAL,
    StartStrategy,
)

CASE_1 = FlowConditions(5e6, 2.5e-5)
CASE_2 = FlowConditions(3e4, 9e-3)

# Fixed Newton start as printed in the x-space tables (rounded to 9 decimals).
PRINTED_NEWTON_X0 = StartStrategy.value(6.445695939)

LAMBDA_DISPLAY_DECIMALS = 15
W_DISPLAY_DIGITS = 10
ABS_FLOOR = 1e-9

HALLEY_LAMBDA0_MISPRINT = (
    "printed lambda0 is not 1/x0^2 (1/7.990256504^2 = 0.0156631302); the iterates follow x0"
)


@dataclass(frozen=True)
class Replay:
    rows: dict[str, dict[str, float]]
    iterations: int
    # Rounding-noise floor for cells whose value is ill-conditioned.
    noise: dict[tuple[str, str], float] = field(default_factory=dict)


@dataclass(frozen=True)
class CaseFixture:
    label: str
    columns: tuple[str, ...]
    header: dict[str, str]
    body: tuple[tuple[str, ...], ...]
    iterations: int
    runner: Callable[[], Replay] = field(compare=False, repr=False)
    skips: dict[tuple[str, str], str] = field(default_factory=dict)
    # When set, the body is a single row with this label instead of an
    # iteration sequence closed by a control step.
    single_row: str | None = None
    prior: dict[str, str] = field(default_factory=dict)

    def expected_rows(self) -> dict[str, dict[str, str]]:
        rows = {"Start": dict(self.header)} if self.header else {}
        if self.prior:
            rows["Prior"] = dict(self.prior)
        for i, values in enumerate(self.body, start=1):
            if len(values) != len(self.columns):
                raise ValueError(f"{self.label}: row {i} has {len(values)} cells")
            if self.single_row is not None:
                label = self.single_row
            else:
                label = "Control step" if i == len(self.body) else f"Iteration {i}"
            rows[label] = dict(zip(self.columns, values))
        return rows


@dataclass(frozen=True)
class TableFixture:
    table_id: str
    title: str
    cases: tuple[CaseFixture, ...]


@dataclass(frozen=True)
class CellCheck:
    case: str
    row: str
    column: str
    printed: str
    computed: float | None
    tolerance: float
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        if self.skipped is not None:
            return True
        if self.computed is None or not math.isfinite(self.computed):
            return False
        return abs(self.computed - float(self.printed)) <= self.tolerance


@dataclass
class TableReport:
    table: TableFixture
    cells: list[CellCheck]
    counts: list[tuple[str, int, int]]  # (case, printed, replayed)

    @property
    def mismatches(self) -> list[CellCheck]:
        return [c for c in self.cells if not c.ok]

    @property
    def count_mismatches(self) -> list[tuple[str, int, int]]:
        return [c for c in self.counts if c[1] != c[2]]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.count_mismatches

    def render(self) -> str:
        lines = [f"Table {self.table.table_id}: {self.table.title}"]
        for case in self.table.cases:
            lines.append(f"  {case.label}")
            for c in (c for c in self.cells if c.case == case.label):
                got = "n/a" if c.computed is None else f"{c.computed:.15g}"
                mark = "skip" if c.skipped else ("ok" if c.ok else "MISMATCH")
                line = f"    {c.row:<14} {c.column:<6} printed {c.printed:>20}  replayed {got:>22}  {mark}"
                if c.skipped:
                    line += f" ({c.skipped})"
                lines.append(line)
            for name, printed, got in self.counts:
                if name == case.label:
                    mark = "ok" if printed == got else "MISMATCH"
                    lines.append(f"    iterations: printed {printed}, replayed {got}  {mark}")
        return "\n".join(lines)


def tolerance_for(printed: str) -> float:
    """Half a unit in the last printed decimal, floored at ``ABS_FLOOR``."""
    text = printed.strip().lstrip("+-")
    decimals = len(text.split(".", 1)[1]) if "." in text else 0
    half_unit = 0.5 * 10.0**-decimals
    # A few ulps of headroom so exact half-way cases are not rejected.
    return max(half_unit * (1 + 1e-9), ABS_FLOOR)


def replay_table(table: TableFixture) -> TableReport:
    cells: list[CellCheck] = []
    counts: list[tuple[str, int, int]] = []
    for case in table.cases:
        replay = case.runner()
        counts.append((case.label, case.iterations, replay.iterations))
        for row, expected in case.expected_rows().items():
            got_row = replay.rows.get(row, {})
            for col, printed in expected.items():
                cells.append(
                    CellCheck(
                        case.label,
                        row,
                        col,
                        printed,
                        got_row.get(col),
                        max(tolerance_for(printed), replay.noise.get((row, col), 0.0)),
                        case.skips.get((row, col)),
                    )
                )
    return TableReport(table, cells, counts)


# --- replay drivers ------------------------------------------------------------


def _display_count(values: list[float], fmt: Callable[[float], str]) -> int:
    final = fmt(values[-1])
    return next(k for k, v in enumerate(values) if fmt(v) == final)


def _slope_noise(rec: dict[str, float], in_lambda: bool) -> float:
    """Rounding noise of a secant slope ``(f_prev - f) / (w_prev - w)``.

    Each residual carries an absolute error of a few ulps of its largest
    term (about ``2 x``); dividing by the point spacing amplifies it.  The
    factor 4 covers both the replay and the printed computation.
    """
    x = 1.0 / math.sqrt(abs(rec["w"])) if in_lambda else rec["w"]
    spacing = abs(rec["f_prev"] - rec["f"]) / abs(rec["slope"])
    if spacing == 0:
        return math.inf
    return 4.0 * sys.float_info.epsilon * 2.0 * x / spacing


def _colebrook_runner(fc: FlowConditions, cfg: SolverConfig) -> Callable[[], Replay]:
    def run() -> Replay:
        # Iterate well past the printed precision so the converged value is exact.
        tight = 1e-16 if cfg.method.in_lambda else 1e-13
        trace = solve(fc, SolverConfig(**{**cfg.__dict__, "tolerance": tight, "verify": True}))
        if not trace.converged:
            raise RuntimeError(f"replay did not converge: {trace.failure}")
        lams = trace.lambdas()
        count = _display_count(lams, lambda v: f"{v:.{LAMBDA_DISPLAY_DECIMALS}f}")

        records = [
            {"f": trace.residuals[i], **trace.aux[i], "w": trace.iterates[i + 1]}
            for i in range(trace.iterations)
        ]
        if count == trace.iterations:
            if trace.control is None:
                raise RuntimeError("control step could not be taken")
            records.append({**trace.control, "w": trace.control["value"]})

        def with_lambda(rec: dict[str, float]) -> dict[str, float]:
            w = rec["w"]
            out = dict(rec)
            if cfg.method.in_lambda:
                out["lam"] = w
            else:
                out["x"] = w
                out["lam"] = 1.0 / (w * w)
            return out

        rows = {"Start": with_lambda({"w": trace.iterates[0]})}
        if trace.prior is not None:
            rows["Prior"] = with_lambda({"w": trace.prior})
        noise = {}
        for k in range(1, count + 2):
            label = f"Iteration {k}" if k <= count else "Control step"
            rec = records[k - 1]
            rows[label] = with_lambda(rec)
            if "slope" in rec:
                noise[(label, "slope")] = _slope_noise(rec, cfg.method.in_lambda)
        return Replay(rows, count, noise)

    return run


def _lambert_runner(re: float, method: WMethod) -> Callable[[], Replay]:
    def run() -> Replay:
        y = lambert_y(re)
        trace = lambert_w(y, method, z0=15.0, tol=1e-15, max_iterations=40)
        zs = [z for z in trace.iterates if math.isfinite(z)]
        count = _display_count(zs, lambda v: f"{v:.{W_DISPLAY_DIGITS}g}")
        rows = {"Start": {"y": y, "z": zs[0]}}
        for k in range(1, count + 1):
            rows[f"Iteration {k}"] = {"z": zs[k]}
        if count + 1 < len(zs):
            control = zs[count + 1]
        else:
            control = lambert_w(y, method, z0=zs[count], tol=0.0, max_iterations=1).value
        rows["Control step"] = {"z": control}
        return Replay(rows, count)

    return run


def _three_point_runner() -> Replay:
    fc = CASE_1
    trace = solve(fc, SolverConfig(Method.THREE_POINT_X, FIXED_THREE_POINT, tolerance=1e-13))
    aux = trace.aux[0]
    x0, x1 = trace.iterates[0], trace.iterates[1]
    row = {
        "x0": x0,
        "f_x0": residual_x(x0, fc),
        "fp_x0": residual_x_prime(x0, fc),
        "y0": aux["y"],
        "f_y0": aux["f_y"],
        "z0": aux["z"],
        "f_z0": aux["f_z"],
        "x1": x1,
        "lam1": 1.0 / (x1 * x1),
    }
    count = _display_count(trace.lambdas(), lambda v: f"{v:.{LAMBDA_DISPLAY_DECIMALS}f}")
    return Replay({"Step": row}, count)


def _body(text: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(line.split()) for line in text.strip().splitlines())


def _cfg(method: Method, start: StartStrategy, prior: StartStrategy = FIXED_NEWTON) -> SolverConfig:
    return SolverConfig(method, start, secant_prior=prior)


LAM_COLS = ("f", "fp", "lam")
NEWTON_X_COLS = ("f", "fp", "x", "lam")
HALLEY_X_COLS = ("f", "fp", "fpp", "x", "lam")
H3_X_COLS = ("f", "fp", "fpp", "fppp", "x", "lam")

_C1 = "Re=5e6, rr=2.5e-5"
_C2 = "Re=3e4, rr=9e-3"


TABLE_1 = TableFixture(
    "1",
    "Newton-Raphson on lambda, rough-law start",
    (
        CaseFixture(
            _C1, LAM_COLS, {"lam": "0.009352225155363"},
            _body("""
                0.495092014  -573.0134258  0.010216239839661
                0.031705666  -502.2190127  0.010279370993451
                0.000145453  -497.622807   0.010279663289327
                0.000000003  -497.6016902  0.010279663295529
                0.000000000  -497.6016898  0.010279663295529
            """),
            4, _colebrook_runner(CASE_1, _cfg(Method.NEWTON_LAMBDA, TRADITIONAL)),
        ),
        CaseFixture(
            _C2, LAM_COLS, {"lam": "0.036588313752304"},
            _body("""
                0.143632267  -73.25157738  0.038549121591193
                0.005520057  -67.74092562  0.038630609361351
                0.000008725  -67.52696208  0.038630738574469
                0.000000000  -67.5266237   0.038630738574792
                0.000000000  -67.5266237   0.038630738574792
            """),
            4, _colebrook_runner(CASE_2, _cfg(Method.NEWTON_LAMBDA, TRADITIONAL)),
        ),
    ),
)

TABLE_2 = TableFixture(
    "2",
    "Newton-Raphson on lambda, fixed start lambda0=0.024069128765101",
    (
        CaseFixture(
            _C1, LAM_COLS, {"lam": "0.024069128765101"},
            _body("""
                -3.554956084   -139.7424853  -0.001370207567104
                17.630891548   -10069.59089  0.000380696888310
                42.275315189   -68216.8306   0.001000416608714
                22.325487096   -16105.99979  0.002386576262278
                10.932300910   -4398.30144   0.004872149626988
                4.615550920    -1516.202309  0.007916302041016
                1.426053458    -734.846953   0.009856914916156
                0.217044469    -529.7853757  0.010266598684182
                0.006507144    -498.5470019  0.010279650902858
                0.000006167    -497.602585   0.010279663295518
                0.000000000    -497.6016898  0.010279663295529
                0.000000000    -497.6016898  0.010279663295529
            """),
            11, _colebrook_runner(CASE_1, _cfg(Method.NEWTON_LAMBDA, FIXED_NEWTON)),
        ),
        CaseFixture(
            _C2, LAM_COLS, {"lam": "0.024069128765101"},
            _body("""
                1.391712394  -137.1740994  0.034214720386916
                0.326434508  -80.9945153   0.038245048943635
                0.026240732  -68.54940037  0.038627849256271
                0.000195117  -67.53419088  0.038630738412914
                0.000000011  -67.52662412  0.038630738574792
                0.000000000  -67.5266237   0.038630738574792
            """),
            5, _colebrook_runner(CASE_2, _cfg(Method.NEWTON_LAMBDA, FIXED_NEWTON)),
        ),
    ),
)

TABLE_3 = TableFixture(
    "3",
    "Newton-Raphson on x, fixed start x0=6.445695939",
    (
        CaseFixture(
            _C1, NEWTON_X_COLS, {"x": "6.445695939", "lam": "0.024069128768719"},
            _body("""
                -3.554956085  1.043635910  9.852014225862620  0.010302673560706
                -0.011430857  1.037259804  9.863034470914730  0.010279663490514
                -0.000000097  1.037242198  9.863034564455800  0.010279663295529
                0.000000000   1.037242198  9.863034564455800  0.010279663295529
            """),
            3, _colebrook_runner(CASE_1, _cfg(Method.NEWTON_X, PRINTED_NEWTON_X0)),
        ),
        CaseFixture(
            _C2, NEWTON_X_COLS, {"x": "6.445695939", "lam": "0.024069128768719"},
            _body("""
                1.391712393   1.024454486  5.087204750239650  0.038640395682209
                -0.000651990  1.025427001  5.087840572945700  0.038630738577020
                0.000000000   1.025426528  5.087840573092420  0.038630738574792
                0.000000000   1.046830475  5.087840573092420  0.038630738574792
            """),
            3, _colebrook_runner(CASE_2, _cfg(Method.NEWTON_X, PRINTED_NEWTON_X0)),
            skips={("Control step", "fp"): "misprint; the converged derivative is 1.025426528"},
        ),
    ),
)

TABLE_4 = TableFixture(
    "4",
    "Newton-Raphson on x, rough-law start",
    (
        CaseFixture(
            _C1, NEWTON_X_COLS, {"x": "10.34052343", "lam": "0.009352225155363"},
            _body("""
                0.495092014   1.036495031  9.862863625818000  0.010280019623455
                -0.000177305  1.037242471  9.863034564433310  0.010279663295576
                0.000000000   1.037242198  9.863034564455800  0.010279663295529
                0.000000000   1.037242198  9.863034564455800  0.010279663295529
            """),
            3, _colebrook_runner(CASE_1, _cfg(Method.NEWTON_X, TRADITIONAL)),
        ),
        CaseFixture(
            _C2, NEWTON_X_COLS, {"x": "5.227918429", "lam": "0.036588313752304"},
            _body("""
                0.143632267   1.025322691  5.087833489750430  0.038630846139210
                -0.000007263  1.025426533  5.087840573092400  0.038630738574793
                0.000000000   1.025426528  5.087840573092420  0.038630738574792
                0.000000000   1.025426528  5.087840573092420  0.038630738574792
            """),
            3, _colebrook_runner(CASE_2, _cfg(Method.NEWTON_X, TRADITIONAL)),
        ),
    ),
)

TABLE_5 = TableFixture(
    "5",
    "Halley on x, fixed start x0=7.990256504",
    (
        CaseFixture(
            _C1, HALLEY_X_COLS, {"x": "7.990256504", "lam": "0.015663210285978"},
            _body("""
                -1.945484250  1.040493788  -0.001887828  9.863203600915390  0.010279310950983
                0.000175332   1.037241928  -0.001596798  9.863034564455800  0.010279663295529
                0.000000000   1.037242198  -0.001596821  9.863034564455800  0.010279663295529
            """),
            2, _colebrook_runner(CASE_1, _cfg(Method.HALLEY_X, FIXED_HALLEY)),
            skips={("Start", "lam"): HALLEY_LAMBDA0_MISPRINT},
        ),
        CaseFixture(
            _C2, HALLEY_X_COLS, {"x": "7.990256504", "lam": "0.015663210285978"},
            _body("""
                2.973246188   1.023435376  -0.000632309  5.087698791122220  0.038632891696967
                -0.000145387  1.025426633  -0.000744326  5.087840573092420  0.038630738574792
                0.000000000   1.025426528  -0.000744320  5.087840573092420  0.038630738574792
            """),
            2, _colebrook_runner(CASE_2, _cfg(Method.HALLEY_X, FIXED_HALLEY)),
            skips={("Start", "lam"): HALLEY_LAMBDA0_MISPRINT},
        ),
    ),
)

TABLE_6 = TableFixture(
    "6",
    "Third-order Householder on x, rough-law start",
    (
        CaseFixture(
            _C1, H3_X_COLS, {"x": "10.34052343", "lam": "0.009352225155363"},
            _body("""
                0.495092014   1.036495031  -0.001533392  0.000128855  9.863034531578420  0.010279663364062
                -0.000000034  1.037242198  -0.001596821  0.000136933  9.863034564455800  0.010279663295529
                0.000000000   1.037242198  -0.001596821  0.000136933  9.863034564455800  0.010279663295529
            """),
            2, _colebrook_runner(CASE_1, _cfg(Method.HOUSEHOLDER3_X, TRADITIONAL)),
        ),
        CaseFixture(
            _C2, H3_X_COLS, {"x": "10.34052343", "lam": "0.009352225155363"},
            _body("""
                0.143632267  1.025322691  -0.000738253  0.000043046  5.087840573035260  0.038630738575660
                0.000000000  1.025426528  -0.000744320  0.000043578  5.087840573092420  0.038630738574792
                0.000000000  1.025426528  -0.000744320  0.000043578  5.087840573092420  0.038630738574792
            """),
            2, _colebrook_runner(CASE_2, _cfg(Method.HOUSEHOLDER3_X, TRADITIONAL)),
            skips={
                ("Start", "x"): "header repeats the first case; the start used is 5.227918429",
                ("Start", "lam"): "header repeats the first case; the start used is 0.036588313752304",
            },
        ),
    ),
)

TABLE_7 = TableFixture(
    "7",
    "Schroder on x, fixed start x0=7.990256504",
    (
        CaseFixture(
            _C1, HALLEY_X_COLS, {"x": "7.990256504", "lam": "0.015663210285978"},
            _body("""
                -1.945484250  1.040493788  -0.001887828  9.863198212166060  0.010279322183170
                0.000169742   1.037241937  -0.001596799  9.863034564455800  0.010279663295529
                0.000000000   1.037242198  -0.001596821  9.863034564455800  0.010279663295529
            """),
            2, _colebrook_runner(CASE_1, _cfg(Method.SCHRODER_X, FIXED_HALLEY)),
            skips={("Start", "lam"): HALLEY_LAMBDA0_MISPRINT},
        ),
        CaseFixture(
            _C2, HALLEY_X_COLS, {"x": "7.990256504", "lam": "0.015663210285978"},
            _body("""
                2.973246188   1.023435376  -0.000632309  5.087701128882780  0.038632856193927
                -0.000142990  1.025426632  -0.000744326  5.087840573092420  0.038630738574792
                0.000000000   1.025426528  -0.000744320  5.087840573092420  0.038630738574792
            """),
            2, _colebrook_runner(CASE_2, _cfg(Method.SCHRODER_X, FIXED_HALLEY)),
            skips={("Start", "lam"): HALLEY_LAMBDA0_MISPRINT},
        ),
    ),
)

TABLE_8 = TableFixture(
    "8",
    "Secant on lambda, fixed older point and rough-law newer point",
    (
        # The first case prints the two residual columns newest-first.
        CaseFixture(
            _C1, ("f", "f_prev", "slope", "lam"), {"lam": "0.009352225155363"},
            _body("""
                0.495092014   -3.554956084  -275.1970255  0.011151270814558
                -0.408071981  0.495092014   -502.0239429  0.010338417191085
                -0.029111936  -0.408071981  -466.2094551  0.010275973292109
                0.001836644   -0.029111936  -495.6221591  0.010279679026163
                -0.000007828  0.001836644   -497.734448   0.010279663299743
                -0.000000002  -0.000007828  -497.6011214  0.010279663295529
                0.000000000   -0.000000002  -497.6012179  0.010279663295529
            """),
            6, _colebrook_runner(CASE_1, _cfg(Method.SECANT_LAMBDA, TRADITIONAL)),
            prior={"lam": "0.024069128765101"},
        ),
        CaseFixture(
            _C2, ("f_prev", "f", "slope", "lam"), {"lam": "0.036588313752304"},
            _body("""
                1.391712394  0.143632267  -99.69340079  0.038029053721052
                0.143632267  0.041110009  -71.15944585  0.038606770549177
                0.041110009  0.001619232  -68.35663251  0.038630458556837
                0.001619232  0.000018909  -67.5583902   0.038630738444645
                0.000018909  0.000000009  -67.52699052  0.038630738574792
                0.000000009  0.000000000  -67.52662212  0.038630738574792
            """),
            5, _colebrook_runner(CASE_2, _cfg(Method.SECANT_LAMBDA, TRADITIONAL)),
            prior={"lam": "0.024069128765101"},
        ),
    ),
)

TABLE_9 = TableFixture(
    "9",
    "Secant on x, fixed older point x=6.445695939 and rough-law newer point",
    (
        CaseFixture(
            _C1, ("f_prev", "f", "slope", "x", "lam"), {"x": "10.34052343", "lam": "0.009352225155363"},
            _body("""
                -3.554956084  0.495092014   1.039853012  9.864406125318800  0.010276804896656
                0.495092014   0.001422639   1.03686501   9.863034066961850  0.010279664332547
                0.001422639   -0.000000516  1.037241104  9.863034564456330  0.010279663295528
                -0.000000516  0.000000000   1.0372422    9.863034564455800  0.010279663295529
                0.000000000   0.000000000   1.037162162  9.863034564455800  0.010279663295529
            """),
            4, _colebrook_runner(CASE_1, _cfg(Method.SECANT_X, TRADITIONAL, PRINTED_NEWTON_X0)),
            prior={"x": "6.445695939", "lam": "0.024069128765101"},
        ),
        CaseFixture(
            _C2, ("f_prev", "f", "slope", "x", "lam"), {"x": "5.227918429", "lam": "0.036588313752304"},
            _body("""
                1.391712394   0.143632267   1.024883541  5.087773465040530  0.038631757665255
                0.143632267   -0.000068814  1.025374564  5.087840576494990  0.038630738523123
                -0.000068814  0.000000003   1.025426553  5.087840573092420  0.038630738574792
                0.000000003   0.000000000   1.025426591  5.087840573092420  0.038630738574792
            """),
            3, _colebrook_runner(CASE_2, _cfg(Method.SECANT_X, TRADITIONAL, PRINTED_NEWTON_X0)),
            prior={"x": "6.445695939", "lam": "0.024069128765101"},
        ),
    ),
)


def _lambert_case(re: float, method: WMethod, y: str, zs: str, count: int) -> CaseFixture:
    return CaseFixture(
        f"Re={re:g}, {method.value}",
        ("z",),
        {"y": y, "z": "15"},
        _body(zs.replace(" ", "\n")),
        count,
        _lambert_runner(re, method),
    )


TABLE_10 = TableFixture(
    "10",
    "Lambert W(y), y = Re ln10 / 5.02, from z0=15",
    (
        _lambert_case(
            5e6, WMethod.NEWTON, "2293411.45",
            "14.10634749 13.28604947 12.62863905 12.25343232 12.15407754 12.14837461 "
            "12.14835704 12.14835704",
            7,
        ),
        _lambert_case(
            5e6, WMethod.HALLEY, "2293411.45",
            "13.29860556 12.2757343 12.14855784 12.14835704 12.14835704",
            4,
        ),
        _lambert_case(
            5e6, WMethod.SCHRODER, "2293411.45",
            "13.68208338 12.62556802 12.17738057 12.14836628 12.14835704 12.14835704",
            5,
        ),
        _lambert_case(
            3e4, WMethod.NEWTON, "13760.47",
            "14.06276308 13.12986539 12.20257063 11.28354302 10.37904335 9.504505014 "
            "8.697314341 8.037456295 7.640105762 7.52154464 7.512971011 7.51292968 "
            "7.512929679 7.512929679",
            13,
        ),
        _lambert_case(
            3e4, WMethod.HALLEY, "13760.47",
            "13.1333396 11.29171838 9.520829163 8.068323472 7.530266826 7.512930233 "
            "7.512929679 7.512929679",
            7,
        ),
        _lambert_case(
            3e4, WMethod.SCHRODER, "13760.47",
            "13.59610616 12.20340124 10.83006437 9.505729616 8.341483562 7.637280252 "
            "7.513654122 7.512929679 7.512929679",
            8,
        ),
    ),
)

THREE_POINT_COLS = ("x0", "f_x0", "fp_x0", "y0", "f_y0", "z0", "f_z0", "x1", "lam1")

THREE_POINT_EXAMPLE = TableFixture(
    "3pt",
    "Three-point method, one outer iteration from x0=7.273124147",
    (
        CaseFixture(
            _C1, THREE_POINT_COLS, {},
            _body(
                "7.273124147 -2.692152546 1.041894438 9.857025593360860 -0.006232787 "
                "9.863035589 -0.006232787 9.863034564 0.010279663295529"
            ),
            1, _three_point_runner,
            skips={("Step", "f_z0"): "misprint; repeats f(y0), the true residual is about 1.06e-6"},
            single_row="Step",
        ),
    ),
)

TABLES: dict[str, TableFixture] = {
    t.table_id: t
    for t in (TABLE_1, TABLE_2, TABLE_3, TABLE_4, TABLE_5, TABLE_6, TABLE_7, TABLE_8, TABLE_9, TABLE_10, THREE_POINT_EXAMPLE)
}
