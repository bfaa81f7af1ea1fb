"""Batch experiment driver: declarative JSON configs in, deterministic CSV
and JSON reports out.

Config schema (JSON object; any numeric value may be written as a string
"pi*<x>" to avoid truncating pi in golden files):

    mode: "table1" | "convergence" | "compare"        (required)
    tolerance: number                                  (optional, per mode)

    table1:       cos_theta (required), mu_T (default pi), N (default 100000)
    convergence:  cos_theta (required, nonzero), a (must be pi),
                  sweep {variable: "N", ...} (required, dyadic)
    compare:      compare_mode: "ideal"|"hamiltonian"|"imperfect" (required),
                  N (required), a (default pi),
                  cos_theta or n_axis [x, y, z] (one of, required),
                  mu_T / b_axis        (hamiltonian only; b_axis defaults to n),
                  b_ratio              (imperfect only, > 0),
                  sweep                (optional)

    sweep: {variable: "N"|"cos_theta"|"a"|"mu_T"|"b_ratio",
            values: [...]}                      explicit list, or
           {variable, start, stop, count, scale: "linear"|"log"}, or
           {variable, start, stop, scale: "dyadic"}   integer doubling only

Exit codes: 0 all comparisons pass, 1 tolerance failure (worst row named),
2 parse error (line/column), 3 validation error (field named).  The CSV body
is byte-identical across runs of the same config; timestamps appear only in
the JSON metadata.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import closed_forms, engine, geometry
from .engine import HamiltonianSpec, UnsupportedModeError, ZenoConfig
from .projections import PolarizerModel, ProjectionFamily
from .su2 import UP, rot, unit_vector

__all__ = ["ConfigError", "ReportRow", "compare", "load_config", "run"]

REPORT_VERSION = "zenophase-report/1"

CSV_COLUMNS = [
    "mode",
    "scenario",
    "N",
    "a",
    "cos_theta",
    "mu_T",
    "b_ratio",
    "rho",
    "beta",
    "survival_prob",
    "total_phase",
    "geom_phase",
    "dyn_phase",
    "beta_err",
    "rho_loss",
    "beta_err_ratio",
    "rho_loss_ratio",
    "oracle_error",
    "tolerance",
    "pass",
    "config_hash",
]

DEFAULT_TOL = {"ideal": 1e-6, "hamiltonian": 1e-3, "imperfect": 1e-3, "table1": 1e-9}
BETA_RATIO_WINDOW = (3.6, 4.4)
RHO_RATIO_WINDOW = (1.8, 2.2)
RATIO_FLOOR_N = 256  # dyadic ratio windows apply from this N upward

SWEEP_VARIABLES = ("N", "cos_theta", "a", "mu_T", "b_ratio")


class ConfigError(ValueError):
    """Validation failure, carrying the offending field name."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"field '{field}': {message}")


@dataclass
class ReportRow:
    """One evaluated configuration with its oracle comparison."""

    mode: str
    scenario: str
    N: int | None = None
    a: float | None = None
    cos_theta: float | None = None
    mu_T: float | None = None
    b_ratio: float | None = None
    rho: float | None = None
    beta: float | None = None
    survival_prob: float | None = None
    total_phase: float | None = None
    geom_phase: float | None = None
    dyn_phase: float | None = None
    beta_err: float | None = None
    rho_loss: float | None = None
    beta_err_ratio: float | None = None
    rho_loss_ratio: float | None = None
    oracle_error: float = 0.0
    tolerance: float = 0.0
    passed: bool = True
    config_hash: str = ""


# ---------------------------------------------------------------------------
# config loading and validation


def load_config(path) -> dict:
    """Parse a JSON config file.  json.JSONDecodeError carries line/column."""
    text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


def _as_number(value, field: str) -> float:
    if isinstance(value, str):
        txt = value.strip().lower().replace(" ", "")
        if txt.startswith("pi*"):
            try:
                return math.pi * float(txt[3:])
            except ValueError:
                raise ConfigError(field, f"bad pi-literal {value!r}") from None
        raise ConfigError(field, f"expected a number or 'pi*<x>', got {value!r}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field, f"expected a number, got {type(value).__name__}")
    if not math.isfinite(value):
        raise ConfigError(field, "must be finite")
    return float(value)


def _as_int(value, field: str) -> int:
    num = _as_number(value, field)
    if num != int(num):
        raise ConfigError(field, f"expected an integer, got {value!r}")
    return int(num)


def _as_axis(value, field: str) -> np.ndarray:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise ConfigError(field, "expected a 3-component list")
    comps = [_as_number(v, field) for v in value]
    try:
        return unit_vector(*comps)
    except ValueError as exc:
        raise ConfigError(field, str(exc)) from None


def _check_keys(cfg: dict, allowed: set[str]) -> None:
    for key in cfg:
        if key not in allowed:
            raise ConfigError(key, "unknown key for this mode")


def _sweep_values(spec, variable_owner: str) -> tuple[str, list[float]]:
    field = "sweep"
    if not isinstance(spec, dict):
        raise ConfigError(field, "expected an object")
    var = spec.get("variable")
    if var not in SWEEP_VARIABLES:
        raise ConfigError("sweep.variable", f"expected one of {SWEEP_VARIABLES}")
    if "values" in spec:
        _check_keys(spec, {"variable", "values"})
        raw = spec["values"]
        if not isinstance(raw, list) or not raw:
            raise ConfigError("sweep.values", "expected a nonempty list")
        vals = [_as_number(v, "sweep.values") for v in raw]
    else:
        _check_keys(spec, {"variable", "start", "stop", "count", "scale"})
        if "start" not in spec or "stop" not in spec:
            raise ConfigError("sweep.start", "start and stop are required")
        start = _as_number(spec["start"], "sweep.start")
        stop = _as_number(spec["stop"], "sweep.stop")
        scale = spec.get("scale", "linear")
        if scale == "dyadic":
            s = _as_int(spec["start"], "sweep.start")
            e = _as_int(spec["stop"], "sweep.stop")
            if s < 1 or e < s:
                raise ConfigError("sweep.start", "dyadic needs 1 <= start <= stop")
            ratio = e // s
            if s * ratio != e or ratio & (ratio - 1) != 0:
                raise ConfigError(
                    "sweep.stop", "dyadic scale requires stop = start * 2^k"
                )
            vals = [float(s * (1 << i)) for i in range(ratio.bit_length())]
        elif scale in ("linear", "log"):
            if "count" not in spec:
                raise ConfigError("sweep.count", "required for linear/log scales")
            count = _as_int(spec["count"], "sweep.count")
            if count < 1:
                raise ConfigError("sweep.count", "must be >= 1")
            if scale == "log":
                if start <= 0 or stop <= 0:
                    raise ConfigError("sweep.start", "log scale needs positive bounds")
                vals = list(np.geomspace(start, stop, count))
            else:
                vals = list(np.linspace(start, stop, count))
        else:
            raise ConfigError("sweep.scale", "expected linear, log or dyadic")
    if var == "N":
        out = []
        for v in vals:
            if v != int(v) or v < 1:
                raise ConfigError("sweep.values", "N values must be positive integers")
            out.append(float(int(v)))
        vals = out
    return var, vals


def _axis_from_cos(cos_theta: float) -> np.ndarray:
    s = math.sqrt(max(0.0, 1.0 - cos_theta * cos_theta))
    return np.array([s, 0.0, cos_theta])


def _validate(cfg: dict) -> dict:
    """Resolve literals and check the schema; returns a normalized plan."""
    if not isinstance(cfg, dict):
        raise ConfigError("<root>", "top level must be a JSON object")
    mode = cfg.get("mode")
    if mode not in ("table1", "convergence", "compare"):
        raise ConfigError("mode", "expected 'table1', 'convergence' or 'compare'")
    plan: dict = {"mode": mode}

    if mode == "table1":
        _check_keys(cfg, {"mode", "cos_theta", "mu_T", "N", "tolerance"})
        if "cos_theta" not in cfg:
            raise ConfigError("cos_theta", "required for table1 mode")
        c = _as_number(cfg["cos_theta"], "cos_theta")
        if not -1.0 <= c <= 1.0:
            raise ConfigError("cos_theta", "must lie in [-1, 1]")
        plan["cos_theta"] = c
        plan["mu_T"] = _as_number(cfg.get("mu_T", math.pi), "mu_T")
        plan["N"] = _as_int(cfg.get("N", 100000), "N")
        if plan["N"] < 3:
            raise ConfigError("N", "must be >= 3")
        plan["tolerance"] = _as_number(
            cfg.get("tolerance", DEFAULT_TOL["table1"]), "tolerance"
        )
        return plan

    if mode == "convergence":
        _check_keys(cfg, {"mode", "cos_theta", "a", "sweep", "tolerance"})
        if "cos_theta" not in cfg:
            raise ConfigError("cos_theta", "required for convergence mode")
        c = _as_number(cfg["cos_theta"], "cos_theta")
        if not (0.0 < abs(c) < 1.0):
            raise ConfigError(
                "cos_theta", "convergence rates need 0 < |cos_theta| < 1"
            )
        plan["cos_theta"] = c
        a = _as_number(cfg.get("a", math.pi), "a")
        if abs(a - math.pi) > 1e-12:
            raise ConfigError("a", "convergence reference requires a = pi")
        plan["a"] = a
        if "sweep" not in cfg:
            raise ConfigError("sweep", "required for convergence mode")
        var, vals = _sweep_values(cfg["sweep"], mode)
        if var != "N":
            raise ConfigError("sweep.variable", "convergence sweeps over N")
        ns = [int(v) for v in vals]
        if any(n < 3 for n in ns):
            raise ConfigError("sweep.values", "N values must be >= 3")
        if any(b != 2 * s for s, b in zip(ns, ns[1:])):
            raise ConfigError("sweep.values", "convergence needs a doubling sequence")
        plan["sweep_values"] = ns
        return plan

    # compare
    _check_keys(
        cfg,
        {
            "mode",
            "compare_mode",
            "N",
            "a",
            "cos_theta",
            "n_axis",
            "mu_T",
            "b_axis",
            "b_ratio",
            "tolerance",
            "sweep",
        },
    )
    sub = cfg.get("compare_mode")
    if sub not in ("ideal", "hamiltonian", "imperfect"):
        raise ConfigError(
            "compare_mode", "expected 'ideal', 'hamiltonian' or 'imperfect'"
        )
    plan["compare_mode"] = sub
    if "N" not in cfg:
        raise ConfigError("N", "required for compare mode")
    plan["N"] = _as_int(cfg["N"], "N")
    if plan["N"] < 1:
        raise ConfigError("N", "must be >= 1")
    plan["a"] = _as_number(cfg.get("a", math.pi), "a")
    if "n_axis" in cfg and "cos_theta" in cfg:
        raise ConfigError("n_axis", "give either n_axis or cos_theta, not both")
    if "n_axis" in cfg:
        plan["n_axis"] = _as_axis(cfg["n_axis"], "n_axis")
        plan["cos_theta"] = float(plan["n_axis"][2])
    elif "cos_theta" in cfg:
        c = _as_number(cfg["cos_theta"], "cos_theta")
        if not -1.0 <= c <= 1.0:
            raise ConfigError("cos_theta", "must lie in [-1, 1]")
        plan["cos_theta"] = c
        plan["n_axis"] = _axis_from_cos(c)
    else:
        raise ConfigError("cos_theta", "compare mode needs cos_theta or n_axis")

    if sub == "hamiltonian":
        plan["mu_T"] = _as_number(cfg.get("mu_T", 0.0), "mu_T")
        plan["b_axis"] = (
            _as_axis(cfg["b_axis"], "b_axis") if "b_axis" in cfg else plan["n_axis"]
        )
    else:
        for key in ("mu_T", "b_axis"):
            if key in cfg:
                raise ConfigError(key, f"not supported in {sub} compare mode")
    if sub == "imperfect":
        if "b_ratio" not in cfg:
            raise ConfigError("b_ratio", "required for imperfect compare mode")
        plan["b_ratio"] = _as_number(cfg["b_ratio"], "b_ratio")
        if plan["b_ratio"] <= 0:
            raise ConfigError("b_ratio", "must be > 0")
    elif "b_ratio" in cfg:
        raise ConfigError("b_ratio", f"not supported in {sub} compare mode")

    plan["tolerance"] = _as_number(
        cfg.get("tolerance", DEFAULT_TOL[sub]), "tolerance"
    )
    if "sweep" in cfg:
        var, vals = _sweep_values(cfg["sweep"], mode)
        if var == "mu_T" and sub != "hamiltonian":
            raise ConfigError("sweep.variable", "mu_T sweeps need hamiltonian mode")
        if var == "b_ratio" and sub != "imperfect":
            raise ConfigError("sweep.variable", "b_ratio sweeps need imperfect mode")
        plan["sweep_variable"] = var
        plan["sweep_values"] = vals
    return plan


def _config_hash(plan: dict) -> str:
    def default(o):
        if isinstance(o, np.ndarray):
            return list(map(float, o))
        raise TypeError(f"unhashable plan entry {type(o).__name__}")

    blob = json.dumps(plan, sort_keys=True, separators=(",", ":"), default=default)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


# ---------------------------------------------------------------------------
# oracle comparisons


def compare(mode: str, cfg: ZenoConfig, tol: float) -> ReportRow:
    """Run the brute-force evolution for ``cfg`` and measure the worst
    entrywise deviation between its final state and the matching closed-form
    prediction.

    * ideal: prediction is the exact finite-N closed form; the states are
      compared after global-phase alignment and, for closed loops, the
      stagewise loop phase is checked against its closed form as well.
    * hamiltonian: prediction is the continuum split into dynamical phase and
      reference state (no alignment; the phase is the content).  mu_T = 0 is
      delegated to the ideal route, so its error equals the ideal-mode error
      exactly.
    * imperfect: prediction is the exact absorber operator at the ratio
      implied by the per-stage transmission.
    """
    fam = cfg.fam
    n, a, big_n = fam.n, fam.a, fam.N
    nz = float(n[2])
    closed = abs(a - math.pi) <= 1e-12
    row = ReportRow(
        mode="compare",
        scenario=mode,
        N=big_n,
        a=a,
        cos_theta=nz,
        tolerance=tol,
    )

    if mode == "hamiltonian" and cfg.hamiltonian is not None and cfg.hamiltonian.mu_T == 0.0:
        ideal_cfg = ZenoConfig(fam=fam)
        row = compare("ideal", ideal_cfg, tol)
        row.scenario = "hamiltonian"
        row.mu_T = 0.0
        return row

    if mode == "ideal":
        res = engine.evolve_ideal(cfg)
        step = complex(math.cos(a / big_n), nz * math.sin(a / big_n))
        pred = (step**big_n) * (rot(a, n) @ UP)
        z = complex(np.vdot(pred, res.final))
        if abs(z) > 0:
            pred = pred * (z / abs(z))
        err = float(np.max(np.abs(res.final - pred)))
        rho = math.sqrt(res.survival_prob)
        row.rho = rho
        row.survival_prob = res.survival_prob
        row.total_phase = res.total_phase
        row.beta = res.beta_closed
        if closed and big_n != 2:
            rho_cf, beta_cf = closed_forms.rho_beta(big_n, nz)
            err = max(err, abs(rho - rho_cf), abs(res.beta_closed - beta_cf))
        row.oracle_error = err
    elif mode == "hamiltonian":
        if cfg.hamiltonian is None:
            raise UnsupportedModeError("hamiltonian compare needs a field term")
        res = engine.evolve_with_hamiltonian(cfg)
        dyn, ref = closed_forms.final_phase_with_H(
            a, n, cfg.hamiltonian.b_axis, cfg.hamiltonian.mu_T
        )
        pred = np.exp(-1j * dyn) * ref
        row.mu_T = cfg.hamiltonian.mu_T
        row.rho = math.sqrt(res.survival_prob)
        row.survival_prob = res.survival_prob
        row.total_phase = res.total_phase
        row.beta = res.beta_closed
        row.dyn_phase = dyn
        if closed:
            row.geom_phase = math.pi * (1.0 - nz)
        row.oracle_error = float(np.max(np.abs(res.final - pred)))
    elif mode == "imperfect":
        if cfg.polarizer is None:
            raise UnsupportedModeError("imperfect compare needs a polarizer model")
        eps = cfg.polarizer.epsilon
        if eps <= 0.0:
            raise ConfigError("b_ratio", "imperfect compare needs epsilon > 0")
        b_ratio = 0.0 if eps == 1.0 else -big_n * math.log(eps) / (2.0 * a)
        res = engine.evolve_imperfect(cfg)
        pred = rot(a, n) @ closed_forms.m_matrix(a, n, b_ratio) @ UP
        row.b_ratio = b_ratio
        row.rho = math.sqrt(res.survival_prob)
        row.survival_prob = res.survival_prob
        row.total_phase = res.total_phase
        row.beta = res.beta_closed
        row.oracle_error = float(np.max(np.abs(res.final - pred)))
    else:
        raise ConfigError("compare_mode", f"unknown mode {mode!r}")

    row.passed = row.oracle_error <= tol
    return row


# ---------------------------------------------------------------------------
# row builders


def _table1_rows(plan: dict) -> list[ReportRow]:
    c = plan["cos_theta"]
    mu_t = plan["mu_T"]
    big_n = plan["N"]
    tol = plan["tolerance"]
    n = _axis_from_cos(c)
    rows = []

    # cycle driven by projections alone, engine at finite N
    t1 = geometry.phase_table("projections_only", c)
    res = engine.evolve_ideal(ZenoConfig(fam=ProjectionFamily(n, math.pi, big_n)))
    err1 = abs(t1.total - res.beta_closed)
    rows.append(
        ReportRow(
            mode="table1",
            scenario="projections_only",
            N=big_n,
            a=math.pi,
            cos_theta=c,
            rho=math.sqrt(res.survival_prob),
            beta=res.beta_closed,
            survival_prob=res.survival_prob,
            total_phase=t1.total,
            geom_phase=t1.geom,
            dyn_phase=t1.dyn,
            oracle_error=err1,
            tolerance=tol,
            passed=err1 <= tol,
        )
    )

    # cycle driven by the field alone; cyclic only at mu_T = pi, field along n
    t2 = geometry.phase_table("field_only", c, math.pi)
    psi = rot(math.pi, n) @ UP
    err2 = abs(t2.total - engine.closed_loop_phase(psi))
    rows.append(
        ReportRow(
            mode="table1",
            scenario="field_only",
            a=math.pi,
            cos_theta=c,
            mu_T=math.pi,
            total_phase=t2.total,
            geom_phase=t2.geom,
            dyn_phase=t2.dyn,
            oracle_error=err2,
            tolerance=tol,
            passed=err2 <= tol,
        )
    )

    # both drives, field along the guiding axis, mu_T arbitrary
    t3 = geometry.phase_table("field_plus_projections", c, mu_t)
    dyn, ref = closed_forms.final_phase_with_H(math.pi, n, n, mu_t)
    total_engine = engine.closed_loop_phase(ref) + dyn
    err3 = abs(t3.total - total_engine)
    rows.append(
        ReportRow(
            mode="table1",
            scenario="field_plus_projections",
            a=math.pi,
            cos_theta=c,
            mu_T=mu_t,
            total_phase=t3.total,
            geom_phase=t3.geom,
            dyn_phase=t3.dyn,
            oracle_error=err3,
            tolerance=tol,
            passed=err3 <= tol,
        )
    )
    return rows


def _window_deviation(x: float, window: tuple[float, float]) -> float:
    lo, hi = window
    return max(0.0, lo - x, x - hi)


def _convergence_rows(plan: dict) -> list[ReportRow]:
    c = plan["cos_theta"]
    n = _axis_from_cos(c)
    ref = math.pi * (1.0 - c)
    rows = []
    prev: tuple[int, float, float] | None = None
    for big_n in plan["sweep_values"]:
        res = engine.evolve_ideal(ZenoConfig(fam=ProjectionFamily(n, math.pi, big_n)))
        rho = math.sqrt(res.survival_prob)
        beta = res.beta_closed
        beta_err = abs(beta - ref)
        rho_loss = 1.0 - rho
        row = ReportRow(
            mode="convergence",
            scenario="ideal",
            N=big_n,
            a=math.pi,
            cos_theta=c,
            rho=rho,
            beta=beta,
            survival_prob=res.survival_prob,
            total_phase=res.total_phase,
            beta_err=beta_err,
            rho_loss=rho_loss,
            tolerance=0.0,
        )
        if prev is not None:
            prev_n, prev_be, prev_rl = prev
            row.beta_err_ratio = prev_be / beta_err if beta_err > 0 else math.inf
            row.rho_loss_ratio = prev_rl / rho_loss if rho_loss > 0 else math.inf
            if prev_n >= RATIO_FLOOR_N:
                row.oracle_error = max(
                    _window_deviation(row.beta_err_ratio, BETA_RATIO_WINDOW),
                    _window_deviation(row.rho_loss_ratio, RHO_RATIO_WINDOW),
                )
        row.passed = row.oracle_error <= row.tolerance
        rows.append(row)
        prev = (big_n, beta_err, rho_loss)
    return rows


def _compare_row(plan: dict, override: dict) -> ReportRow:
    p = {**plan, **override}
    sub = p["compare_mode"]
    big_n = int(p["N"])
    a = p["a"]
    if "cos_theta" in override:
        n = _axis_from_cos(p["cos_theta"])
    else:
        n = p["n_axis"]
    fam = ProjectionFamily(n, a, big_n)
    if sub == "ideal":
        cfg = ZenoConfig(fam=fam)
    elif sub == "hamiltonian":
        cfg = ZenoConfig(
            fam=fam, hamiltonian=HamiltonianSpec(p["mu_T"], p["b_axis"])
        )
    else:
        eps = math.exp(-2.0 * a * p["b_ratio"] / big_n)
        cfg = ZenoConfig(fam=fam, polarizer=PolarizerModel(eps))
    return compare(sub, cfg, p["tolerance"])


def _compare_rows(plan: dict, threads: int) -> list[ReportRow]:
    if "sweep_variable" not in plan:
        return [_compare_row(plan, {})]
    var = plan["sweep_variable"]
    overrides = [{var: v} for v in plan["sweep_values"]]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda ov: _compare_row(plan, ov), overrides))
    else:
        rows = [_compare_row(plan, ov) for ov in overrides]
    return rows


# ---------------------------------------------------------------------------
# report output


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


_ROW_FIELDS = [c if c != "pass" else "passed" for c in CSV_COLUMNS]


def _csv_text(rows: list[ReportRow]) -> str:
    lines = [f"# {REPORT_VERSION}", ",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(_fmt(getattr(row, f)) for f in _ROW_FIELDS))
    return "\n".join(lines) + "\n"


def _json_payload(rows, plan, passed, worst) -> dict:
    def clean(obj):
        if isinstance(obj, np.ndarray):
            return list(map(float, obj))
        if isinstance(obj, dict):
            return {k: clean(v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [clean(v) for v in obj]
        return obj

    return {
        "version": REPORT_VERSION,
        "passed": passed,
        "config": clean(plan),
        "rows": [clean(asdict(r)) for r in rows],
        "metadata": {
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "worst_row": worst,
        },
    }


def _write_trajectory(path: Path, plan: dict) -> None:
    fam = ProjectionFamily(plan["n_axis"], plan["a"], int(plan["N"]))
    res = engine.evolve_ideal(ZenoConfig(fam=fam), record_trajectory=True)
    lines = [f"# {REPORT_VERSION}", "step,re_up,im_up,re_down,im_down"]
    for k, state in enumerate(res.trajectory):
        lines.append(
            ",".join(
                [str(k)]
                + [_fmt(v) for v in (state[0].real, state[0].imag, state[1].real, state[1].imag)]
            )
        )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def run(
    config_path,
    out_dir=".",
    tolerance_override: float | None = None,
    threads: int = 1,
    emit_trajectory: bool = False,
) -> int:
    """Execute one config file; write report.csv and report.json; return the
    exit status (0 ok, 1 tolerance failure, 2 parse error, 3 validation)."""
    try:
        raw = load_config(config_path)
    except FileNotFoundError:
        print(f"parse error: no such config file: {config_path}")
        return 2
    except json.JSONDecodeError as exc:
        print(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}")
        return 2

    try:
        plan = _validate(raw)
        if tolerance_override is not None:
            if tolerance_override <= 0:
                raise ConfigError("tolerance", "override must be > 0")
            if plan["mode"] == "convergence":
                raise ConfigError(
                    "tolerance", "convergence windows cannot be overridden"
                )
            plan["tolerance"] = float(tolerance_override)
        if threads < 1:
            raise ConfigError("threads", "must be >= 1")
        if emit_trajectory and (
            plan["mode"] != "compare"
            or plan.get("compare_mode") != "ideal"
            or "sweep_variable" in plan
        ):
            raise ConfigError(
                "emit-trajectory", "only supported for single-row ideal compare"
            )
        if plan["mode"] == "table1":
            rows = _table1_rows(plan)
        elif plan["mode"] == "convergence":
            rows = _convergence_rows(plan)
        else:
            rows = _compare_rows(plan, threads)
    except (ConfigError, UnsupportedModeError, ValueError) as exc:
        print(f"validation error: {exc}")
        return 3

    chash = _config_hash(plan)
    for row in rows:
        row.config_hash = chash
    passed = all(r.passed for r in rows)
    worst = None
    if rows:
        idx = max(range(len(rows)), key=lambda i: rows[i].oracle_error)
        worst = {
            "index": idx,
            "scenario": rows[idx].scenario,
            "oracle_error": rows[idx].oracle_error,
            "tolerance": rows[idx].tolerance,
        }

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "report.csv"
    json_path = out / "report.json"
    csv_path.write_text(_csv_text(rows), encoding="utf-8")
    json_path.write_text(
        json.dumps(_json_payload(rows, plan, passed, worst), indent=2) + "\n",
        encoding="utf-8",
    )
    if emit_trajectory:
        _write_trajectory(out / "trajectory.csv", plan)

    print(f"wrote {csv_path} and {json_path} ({len(rows)} rows)")
    if not passed:
        print(
            "tolerance failure: worst row "
            f"{worst['index']} ({worst['scenario']}): "
            f"oracle_error={worst['oracle_error']:.3e} > tol={worst['tolerance']:.3e}"
        )
        return 1
    return 0
