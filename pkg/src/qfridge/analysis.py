"""Parameter sweeps, maximization of chi over the efficiency, and the
high-temperature closed forms (F-function, approximate chi, and the
efficiency-at-maximal-chi root formula with its scaling limit).
"""

import csv
import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import BoundaryMaximumError, FridgeError, PoleError
from .steady import carnot_cop, steady_state
from .qsl import qsl_time

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

_KNOBS = ("g", "p_equal", "eta", "kappa")

# CSV schema: column name -> SweepRecord attribute
_CSV_FIELDS = (("Q_c", "q_cool"), ("tau", "tau"), ("chi", "chi"),
               ("gamma", "gamma"), ("delta", "delta"),
               ("is_fridge", "is_fridge"))


class HighTemperatureValidityWarning(UserWarning):
    """Some x_i = E_i/T_i is not small: the high-T forms lose accuracy."""


# ----------------------------------------------------------------------
# sweeps
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRecord:
    """One sweep row: the swept value plus steady/speed-limit outputs.

    Rows where the point computation failed carry NaNs and the error
    message in `warnings`; a sweep never aborts on a single bad point.
    """
    knob_value: float
    q_cool: float
    tau: float
    chi: float
    gamma: float
    delta: float
    is_fridge: bool
    warnings: tuple


@dataclass(frozen=True)
class SweepSpec:
    """A one-knob sweep: base parameters, the knob name, and the grid.

    knob is one of g, p_equal (all three reset rates together), eta,
    kappa. outputs optionally restricts which report columns the CSV
    writer emits (records themselves always carry every field).
    """
    base: object
    knob: str
    grid: tuple
    outputs: tuple = None

    def __post_init__(self):
        if self.knob not in _KNOBS:
            raise ValueError(f"unknown sweep knob {self.knob!r}; "
                             f"expected one of {_KNOBS}")
        grid = tuple(float(v) for v in self.grid)
        if len(grid) == 0:
            raise ValueError("sweep grid is empty")
        diffs = np.diff(grid)
        if len(grid) > 1 and not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ValueError("sweep grid must be strictly monotone")
        if self.knob == "eta":
            eta_c = carnot_cop(self.base.T_c, self.base.T_r, self.base.T_h)
            if min(grid) <= 0.0 or max(grid) > eta_c:
                raise ValueError(
                    f"eta grid must lie in (0, {eta_c:.6g}] (Carnot bound)")
        if self.knob == "kappa":
            if min(grid) < 0.0 or max(grid) > 1.0:
                raise ValueError("kappa grid must lie in [0, 1]")
            if max(grid) > 0.0 and self.base.coh_subspace is None:
                raise ValueError(
                    "kappa sweep with nonzero values needs base.coh_subspace")
        object.__setattr__(self, "grid", grid)
        if self.outputs is not None:
            outs = tuple(self.outputs)
            known = tuple(name for name, _ in _CSV_FIELDS)
            for name in outs:
                if name not in known:
                    raise ValueError(f"unknown output field {name!r}; "
                                     f"expected a subset of {known}")
            object.__setattr__(self, "outputs", outs)


def _point_params(base, knob, value):
    if knob == "g":
        return replace(base, g=value)
    if knob == "p_equal":
        return replace(base, p_c=value, p_r=value, p_h=value)
    if knob == "eta":
        return replace(base, eta=value)
    return replace(base, kappa=value)


def run_sweep(spec):
    """Evaluate the sweep, one SweepRecord per grid point in grid order.

    Per-point failures (singular rates, undefined chi, ...) become NaN
    rows tagged with the error text; warnings raised during a point
    (non-cooling, trivial evolution, perturbative regime) are collected
    into that row's `warnings` tuple. Fully deterministic: fixed grid
    order, no randomness.
    """
    records = []
    for value in spec.grid:
        msgs = []
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            try:
                pt = _point_params(spec.base, spec.knob, value)
                srep = steady_state(pt)
                qrep = qsl_time(pt, srep)
                row = SweepRecord(
                    knob_value=value, q_cool=srep.q_cool, tau=qrep.tau,
                    chi=qrep.chi, gamma=srep.gamma, delta=srep.delta,
                    is_fridge=srep.is_fridge, warnings=())
            except (FridgeError, ValueError) as exc:
                nan = float("nan")
                row = SweepRecord(
                    knob_value=value, q_cool=nan, tau=nan, chi=nan,
                    gamma=nan, delta=nan, is_fridge=False,
                    warnings=(f"error: {exc}",))
        msgs.extend(str(w.message) for w in caught)
        if msgs:
            row = replace(row, warnings=row.warnings + tuple(msgs))
        records.append(row)
    return records


def write_sweep_csv(records, fileobj, outputs=None):
    """Write sweep records as CSV: knob_value, selected fields, warnings.

    Floats are rendered with %.17g (round-trip exact); is_fridge as 0/1;
    the warnings column is semicolon-joined.
    """
    fields = _CSV_FIELDS if outputs is None else tuple(
        (name, attr) for name, attr in _CSV_FIELDS if name in outputs)
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(["knob_value"] + [name for name, _ in fields]
                    + ["warnings"])
    for rec in records:
        row = ["%.17g" % rec.knob_value]
        for name, attr in fields:
            val = getattr(rec, attr)
            row.append("%d" % val if name == "is_fridge" else "%.17g" % val)
        row.append(";".join(rec.warnings))
        writer.writerow(row)


# ----------------------------------------------------------------------
# maximization of chi over the efficiency
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Optimum:
    """Result of maximizing chi over eta inside the cooling window."""
    eta_star: float
    chi_star: float
    method: str
    f_value: float


def _chi_at_eta(params, eta):
    pt = replace(params, eta=eta)
    srep = steady_state(pt)
    return qsl_time(pt, srep).chi


def maximize_chi_over_eta(params, bracket=None):
    """Locate the interior maximum of chi(eta) on the bracket.

    A 64-point scan selects the best grid cell; golden-section search
    then narrows it to |d eta| <= 1e-8 (ties broken toward smaller eta).
    If the scan puts the maximum on a bracket endpoint the function
    raises BoundaryMaximumError with the endpoint values, since a
    boundary argmax means the bracket does not contain the claimed
    interior optimum. The returned f_value is the high-temperature
    F-function at eta_star (NaN at its pole), recorded as a diagnostic
    whatever the temperature regime.

    chi is maximized exactly as defined. On parameter sets where the
    purity gap crosses zero inside the bracket the speed-limit bound
    degenerates (tau -> 0) and chi has a pole there; the search will
    converge onto it and report an extreme chi_star. An interior
    optimum is physically meaningful where the gap keeps one sign
    across the bracket.
    """
    eta_c = carnot_cop(params.T_c, params.T_r, params.T_h)
    if bracket is None:
        bracket = (1e-2 * eta_c, (1.0 - 1e-6) * eta_c)
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0.0 < lo < hi < eta_c):
        raise ValueError(f"bracket must satisfy 0 < lo < hi < {eta_c:.6g}")

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        xs = np.linspace(lo, hi, 64)
        raw = np.array([_chi_at_eta(params, x) for x in xs])
        finite = np.isfinite(raw)
        if not finite.any():
            raise FridgeError("chi is not finite anywhere on the bracket")
        vals = np.where(finite, raw, -np.inf)
        i = int(np.argmax(vals))
        # an argmax at an endpoint, or next to a point where chi is not
        # finite (tau -> 0 near the Carnot edge), cannot be bracketed
        if i == 0 or i == len(xs) - 1 or not (finite[i - 1] and finite[i + 1]):
            raise BoundaryMaximumError(
                "chi has no bracketable interior maximum: best grid point "
                f"eta={xs[i]:.8g} (index {i} of {len(xs)}); "
                f"chi(lo)={raw[0]:.6g}, chi(hi)={raw[-1]:.6g}, "
                f"chi(best)={vals[i]:.6g}")

        a, b = float(xs[i - 1]), float(xs[i + 1])
        c = b - _GOLDEN * (b - a)
        d = a + _GOLDEN * (b - a)
        fc = _chi_at_eta(params, c)
        fd = _chi_at_eta(params, d)
        while b - a > 1e-8:
            if fc >= fd:
                b, d, fd = d, c, fc
                c = b - _GOLDEN * (b - a)
                fc = _chi_at_eta(params, c)
            else:
                a, c, fc = c, d, fd
                d = a + _GOLDEN * (b - a)
                fd = _chi_at_eta(params, d)
        eta_star = 0.5 * (a + b)
        chi_star = _chi_at_eta(params, eta_star)
        method = "golden_section"
        if chi_star + 1e-15 < vals[i]:
            # non-unimodal cell: fall back to a dense scan of the cell
            xs2 = np.linspace(xs[i - 1], xs[i + 1], 256)
            vals2 = np.array([_chi_at_eta(params, x) for x in xs2])
            j = int(np.argmax(vals2))
            eta_star, chi_star = float(xs2[j]), float(vals2[j])
            method = "grid_refine"
        try:
            f_val = f_function(eta_star, params)
        except PoleError:
            f_val = float("nan")
    return Optimum(eta_star=eta_star, chi_star=chi_star, method=method,
                   f_value=f_val)


# ----------------------------------------------------------------------
# high-temperature forms
# ----------------------------------------------------------------------

def _excitation_ratios(eta, params):
    """x_i = E_i/T_i at the given efficiency (holding E_c fixed)."""
    x_c = params.E_c / params.T_c
    x_r = (params.E_c / params.T_r) * (1.0 + 1.0 / eta)
    x_h = params.E_c / (eta * params.T_h)
    return x_c, x_r, x_h


def _warn_if_not_high_t(x_c, x_r, x_h):
    worst = max(x_c, x_r, x_h)
    if worst > 0.1:
        warnings.warn(
            f"max(E_i/T_i) = {worst:.3g} is not small: high-temperature "
            "forms are inaccurate here", HighTemperatureValidityWarning,
            stacklevel=3)


def f_function(eta, params):
    """High-temperature shape function F(eta).

        F = x_c x_r (x_c - x_r) / (x_c - x_r + x_h)

    with x_c = E_c/T_c, x_r = (E_c/T_r)(1 + 1/eta), x_h = E_c/(eta T_h).
    chi_highT is monotone increasing in F, so maximizing chi in the
    high-temperature regime is maximizing F. Independent of the reset
    rates and of g.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    x_c, x_r, x_h = _excitation_ratios(eta, params)
    _warn_if_not_high_t(x_c, x_r, x_h)
    den = x_c - x_r + x_h
    if den == 0.0:
        raise PoleError("F undefined: x_c - x_r + x_h = 0 at this eta")
    return x_c * x_r * (x_c - x_r) / den


def chi_highT(eta, params):
    """Leading high-temperature approximation of chi at equal reset rates.

        chi ~= 3 sqrt(2) g p E_c / (3 - F/3)

    Reduces to sqrt(2) g p E_c as all x_i -> 0 (F -> 0). Warns when the
    regime assumption max(x_i) << 1 fails; PoleError where F = 9.
    """
    if not (params.p_c == params.p_r == params.p_h):
        raise ValueError("high-temperature chi requires equal reset rates")
    f_val = f_function(eta, params)
    den = 3.0 - f_val / 3.0
    if den == 0.0:
        raise PoleError("chi_highT undefined: F = 9 at this eta")
    return 3.0 * math.sqrt(2.0) * params.g * params.p_c * params.E_c / den


def eta_opt_asymptotic(T_c, T_r, T_h):
    """(exact root, scaling limit) for the efficiency at maximal chi.

    The exact expression is the quadratic root

        eta_opt = (-T_c^2 T_r + T_c^2 T_h - T_c T_r T_h
                   +/- sqrt(T_c^4 T_r^2 + T_c^3 T_r^2 T_h))
                  / (2 T_c^2 T_r - T_c T_r^2 - T_c^2 T_h
                     + 2 T_c T_r T_h - T_r^2 T_h)

    of which the branch inside the cooling window (0, eta_Carnot) is
    returned; for T_h >> T_r >> T_c with T_c/T_r ~ T_r/T_h it approaches

        eta_limit = (T_c/T_r) (1 - sqrt(T_c/T_h)).
    """
    if not (0 < T_c < T_r < T_h):
        raise ValueError("temperatures must satisfy 0 < T_c < T_r < T_h")
    num0 = -T_c ** 2 * T_r + T_c ** 2 * T_h - T_c * T_r * T_h
    disc = T_c ** 4 * T_r ** 2 + T_c ** 3 * T_r ** 2 * T_h
    den = (2.0 * T_c ** 2 * T_r - T_c * T_r ** 2 - T_c ** 2 * T_h
           + 2.0 * T_c * T_r * T_h - T_r ** 2 * T_h)
    if den == 0.0:
        raise PoleError("root formula denominator vanishes")
    root = math.sqrt(disc)
    candidates = ((num0 + root) / den, (num0 - root) / den)
    eta_limit = (T_c / T_r) * (1.0 - math.sqrt(T_c / T_h))
    eta_c = carnot_cop(T_c, T_r, T_h)
    inside = [e for e in candidates if 0.0 < e < eta_c]
    if len(inside) == 1:
        eta_exact = inside[0]
    else:
        # degenerate bracketing: pick the branch nearest the limit form
        eta_exact = min(candidates, key=lambda e: abs(e - eta_limit))
    return eta_exact, eta_limit
