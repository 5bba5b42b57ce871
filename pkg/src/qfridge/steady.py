"""Analytic steady state of the reset master equation and derived
steady-state quantities: rate combinations, the population bias Delta, the
amplitude gamma, the correction matrix sigma, the cooling rate Q_c, and the
Carnot coefficient of performance.

The steady state has the closed form rho_f = rho0 + gamma * sigma where
rho0 is the thermal product state and sigma is a fixed traceless Hermitian
matrix built from the thermal populations and the reset-rate combinations.
Both gamma's sign convention and the population pairing inside lambda were
pinned against an independent 64x64 null-space solve of the generator
(residuals at machine precision across equal and unequal rate sets); the
unit tests keep that cross-check alive.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import SingularRatesError
from .linalg import partial_trace, tensor
from .model import IDX_INNER, thermal_populations, thermal_qubit

Z_C = np.diag([1.0, -1.0]).astype(complex)
Z_R = np.diag([-1.0, 1.0]).astype(complex)
Z_H = np.diag([1.0, -1.0]).astype(complex)


class NoCouplingWarning(UserWarning):
    """g = 0: the interaction is off and gamma is returned as its limit 0."""


@dataclass(frozen=True)
class ResetCombos:
    """Rate combinations entering the steady state.

    q = p_c + p_r + p_h; q_i = p_i/(q - p_i);
    Q_jk = (p_j q_k + p_k q_j)/(q - p_j - p_k).
    Identity used by the heat-current consistency test:
    p_c (1 + q_r + q_h + Q_rh) = q.
    """
    q: float
    q_c: float
    q_r: float
    q_h: float
    Q_cr: float
    Q_ch: float
    Q_rh: float


@dataclass(frozen=True)
class SteadyReport:
    """Everything the steady state determines at one parameter point."""
    delta: float
    omega_cr: float
    omega_ch: float
    omega_rh: float
    gamma: float
    sigma: np.ndarray
    rho_f: np.ndarray
    q_cool: float
    eta: float
    eta_carnot: float
    is_fridge: bool


# ----------------------------------------------------------------------
# scalar building blocks
# ----------------------------------------------------------------------

def reset_combos(p_c, p_r, p_h):
    """ResetCombos from the three reset rates.

    Raises SingularRatesError when any needed denominator vanishes
    (e.g. two of the three rates zero).
    """
    ps = np.array([p_c, p_r, p_h], dtype=float)
    if np.any(ps < 0):
        raise ValueError("reset rates must be nonnegative")
    q = float(ps.sum())
    if q <= 0:
        raise SingularRatesError("all reset rates vanish")
    denom_single = q - ps
    if np.any(denom_single <= 0):
        raise SingularRatesError("q - p_i vanishes for some i")
    qi = ps / denom_single
    pair = [(0, 1), (0, 2), (1, 2)]   # (c,r), (c,h), (r,h)
    Q = []
    for j, k in pair:
        den = q - ps[j] - ps[k]
        if den <= 0:
            raise SingularRatesError("q - p_j - p_k vanishes for pair (%d, %d)" % (j, k))
        Q.append((ps[j] * qi[k] + ps[k] * qi[j]) / den)
    return ResetCombos(q, qi[0], qi[1], qi[2], Q[0], Q[1], Q[2])


def bias_delta(r):
    """Population bias Delta = r_c(1-r_r)r_h - (1-r_c)r_r(1-r_h).

    Delta vanishes exactly at global equilibrium and at the Carnot point;
    the machine cools when Delta < 0 (equivalently gamma > 0).
    """
    return r.r_c * (1.0 - r.r_r) * r.r_h - (1.0 - r.r_c) * r.r_r * (1.0 - r.r_h)


def _primed(r):
    """Primed populations: r' flips only the middle (r) qubit."""
    return np.array([r.r_c, 1.0 - r.r_r, r.r_h])


def omega_weights(r):
    """Pair weights Omega_jk = r'_j r'_k + (1-r'_j)(1-r'_k) over {cr, ch, rh}.

    This is the same-state (XNOR) combination in the primed populations; it
    is the unique variant under which rho0 + gamma*sigma annihilates the
    generator (the printed asymmetric form and its symmetrization both fail
    the residual test by many orders of magnitude).
    """
    rp = _primed(r)
    pairs = [(0, 1), (0, 2), (1, 2)]
    return tuple(rp[j] * rp[k] + (1.0 - rp[j]) * (1.0 - rp[k]) for j, k in pairs)


def lambda_weight(combos, r):
    """lambda = 2 + sum_i q_i + sum_jk Q_jk Omega_jk."""
    om = omega_weights(r)
    return (2.0 + combos.q_c + combos.q_r + combos.q_h
            + combos.Q_cr * om[0] + combos.Q_ch * om[1] + combos.Q_rh * om[2])


def gamma_amplitude(params, combos, r):
    """Steady-state correction amplitude gamma = -Delta/(lambda + q^2/(2g^2)).

    gamma > 0 is the cooling regime. For g = 0 the denominator diverges and
    the limit value 0 is returned with a no-coupling warning.
    """
    if params.g == 0:
        warnings.warn("g = 0: no coupling, gamma = 0 (limit value)",
                      NoCouplingWarning, stacklevel=2)
        return 0.0
    lam = lambda_weight(combos, r)
    return -bias_delta(r) / (lam + combos.q ** 2 / (2.0 * params.g ** 2))


# ----------------------------------------------------------------------
# matrix building blocks
# ----------------------------------------------------------------------

def _z_crh():
    """|010><010| - |101><101| on the full three-qubit space."""
    Z = np.zeros((8, 8), dtype=complex)
    i, j = IDX_INNER
    Z[i, i] = 1.0
    Z[j, j] = -1.0
    return Z


def _y_crh():
    """Y = i|101><010| - i|010><101|."""
    Y = np.zeros((8, 8), dtype=complex)
    i, j = IDX_INNER
    Y[j, i] = 1j
    Y[i, j] = -1j
    return Y


def _embed_mid(mid, outer4):
    """Tensor a 2x2 operator at the middle slot with a 4x4 on qubits (c, h)."""
    out = np.zeros((8, 8), dtype=complex)
    for i0 in range(2):
        for j0 in range(2):
            for i1 in range(2):
                for j1 in range(2):
                    for i2 in range(2):
                        for j2 in range(2):
                            out[4 * i0 + 2 * i1 + i2, 4 * j0 + 2 * j1 + j2] = \
                                mid[i1, j1] * outer4[2 * i0 + i2, 2 * j0 + j2]
    return out


def sigma_matrix(combos, r, params):
    """The traceless Hermitian steady-state correction matrix sigma.

    sigma = Q_rh Zc x tau_r x tau_h + Q_ch tau_c x Zr x tau_h
          + Q_cr tau_c x tau_r x Zh + q_c tau_c x Z_rh
          + q_r (tau_r at the middle slot) Z_ch + q_h Z_cr x tau_h
          + Z_crh + (q/2g) Y,
    where Z_ij = tr_k Z_crh and each two-qubit Z_ij sits on its own qubits
    with the thermal state on the remaining one.
    """
    if params.g <= 0:
        raise ValueError("sigma_matrix requires g > 0 (the Y term carries q/2g)")
    tau_c = thermal_qubit(r.r_c)
    tau_r = thermal_qubit(r.r_r)
    tau_h = thermal_qubit(r.r_h)
    Zcrh = _z_crh()
    Z_rh = partial_trace(Zcrh, "c")
    Z_ch = partial_trace(Zcrh, "r")
    Z_cr = partial_trace(Zcrh, "h")
    sig = (combos.Q_rh * tensor(Z_C, tensor(tau_r, tau_h))
           + combos.Q_ch * tensor(tau_c, tensor(Z_R, tau_h))
           + combos.Q_cr * tensor(tau_c, tensor(tau_r, Z_H))
           + combos.q_c * tensor(tau_c, Z_rh)
           + combos.q_r * _embed_mid(tau_r, Z_ch)
           + combos.q_h * tensor(Z_cr, tau_h)
           + Zcrh
           + (combos.q / (2.0 * params.g)) * _y_crh())
    return sig


def carnot_cop(T_c, T_r, T_h):
    """Carnot coefficient of performance (1/T_r - 1/T_h)/(1/T_c - 1/T_r).

    The efficiency at which the bias Delta vanishes given E_r = E_c + E_h.
    Requires strictly ordered temperatures.
    """
    if not (T_c < T_r < T_h):
        raise ValueError("carnot_cop requires T_c < T_r < T_h strictly")
    return (1.0 / T_r - 1.0 / T_h) / (1.0 / T_c - 1.0 / T_r)


def steady_state(params):
    """Full SteadyReport: rho_f = rho0(kappa=0) + gamma*sigma and friends.

    The steady state does not depend on kappa (the generator is
    kappa-independent; only the initial state is). Q_c = q*gamma*E_c.
    """
    if params.g <= 0:
        raise ValueError("steady_state requires g > 0")
    for p in params.ps:
        if p <= 0:
            raise ValueError("steady_state requires all reset rates positive")
    combos = reset_combos(*params.ps)
    r = thermal_populations(params)
    gamma = gamma_amplitude(params, combos, r)
    sigma = sigma_matrix(combos, r, params)
    rho0 = tensor(thermal_qubit(r.r_c),
                  tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
    rho_f = rho0 + gamma * sigma
    om = omega_weights(r)
    if params.T_c < params.T_r < params.T_h:
        eta_car = carnot_cop(params.T_c, params.T_r, params.T_h)
    else:
        eta_car = float("nan")   # degenerate temperatures: no Carnot point
    return SteadyReport(
        delta=bias_delta(r),
        omega_cr=om[0], omega_ch=om[1], omega_rh=om[2],
        gamma=gamma,
        sigma=sigma,
        rho_f=rho_f,
        q_cool=combos.q * gamma * params.E_c,
        eta=params.eta,
        eta_carnot=eta_car,
        is_fridge=bool(gamma > 0),
    )
