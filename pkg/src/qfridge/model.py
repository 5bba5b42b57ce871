"""Machine construction: parameters, thermal populations, Hamiltonian,
and the (optionally coherent) initial state.

The machine is three qubits (c, r, h) with energies E_c, E_r = E_c + E_h,
E_h = E_c/eta, each coupled to its own bath at temperature T_c <= T_r <= T_h
through a reset channel of rate p_i. A resonant three-body interaction of
strength g couples |010> and |101>. Units: hbar = k_B = 1.
"""

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import tensor

N_UP = np.diag([0.0, 1.0]).astype(complex)   # excited-state projector
IDX_INNER = (2, 5)   # |010>, |101>  (k = 4c + 2r + h)
IDX_OUTER = (0, 7)   # |000>, |111>


class PerturbativeRegimeWarning(UserWarning):
    """Parameters outside the g, p_i << E_i regime the model is derived in."""


class CohSubspace(str, Enum):
    """Which density-matrix element pair carries the initial coherence.

    OUTER_DIAG is the |000><111| pair (matrix element (1,8) in 1-based
    labels), INNER_DIAG the |010><101| pair (element (3,6)).
    """
    OUTER_DIAG = "outer_diag"
    INNER_DIAG = "inner_diag"


@dataclass(frozen=True)
class FridgeParams:
    """Full machine specification.

    eta is the design efficiency E_c/E_h; the remaining energies are derived
    as E_h = E_c/eta and E_r = E_c + E_h (energy-conserving interaction).
    kappa in [0, 1] scales the initial coherence amplitude on coh_subspace.
    """
    E_c: float
    eta: float
    T_c: float
    T_r: float
    T_h: float
    p_c: float
    p_r: float
    p_h: float
    g: float
    kappa: float = 0.0
    coh_subspace: CohSubspace | None = None

    def __post_init__(self):
        if not self.E_c > 0:
            raise ValueError("E_c must be positive")
        if not self.eta > 0:
            raise ValueError("eta must be positive")
        if not (0 < self.T_c <= self.T_r <= self.T_h):
            raise ValueError("temperatures must satisfy 0 < T_c <= T_r <= T_h")
        for name in ("p_c", "p_r", "p_h"):
            if getattr(self, name) < 0:
                raise ValueError("%s must be nonnegative" % name)
        if self.g < 0:
            raise ValueError("g must be nonnegative")
        if not 0 <= self.kappa <= 1:
            raise ValueError("kappa must lie in [0, 1]")
        if self.coh_subspace is not None:
            object.__setattr__(self, "coh_subspace", CohSubspace(self.coh_subspace))
        if self.kappa > 0 and self.coh_subspace is None:
            raise ValueError("kappa > 0 requires a coherence subspace")
        # local-bath / reset description is perturbative in g and the rates
        if self.g >= 0.1 * self.E_c or max(self.p_c, self.p_r, self.p_h) >= 0.1 * self.E_c:
            warnings.warn(
                "parameters outside the perturbative regime "
                "(g or max p_i >= 0.1 E_c); local reset description is approximate",
                PerturbativeRegimeWarning, stacklevel=2)

    # derived energies -------------------------------------------------
    @property
    def E_h(self):
        return self.E_c / self.eta

    @property
    def E_r(self):
        return self.E_c + self.E_h

    @property
    def energies(self):
        """(E_c, E_r, E_h) in subsystem order (c, r, h)."""
        return (self.E_c, self.E_r, self.E_h)

    @property
    def temperatures(self):
        return (self.T_c, self.T_r, self.T_h)

    @property
    def ps(self):
        return (self.p_c, self.p_r, self.p_h)

    @property
    def q(self):
        """Total reset rate p_c + p_r + p_h."""
        return self.p_c + self.p_r + self.p_h


@dataclass(frozen=True)
class ThermalPopulations:
    """Ground-state occupations r_i of the three qubits at their baths."""
    r_c: float
    r_r: float
    r_h: float

    @property
    def rbar_c(self):
        return 1.0 - self.r_c

    @property
    def rbar_r(self):
        return 1.0 - self.r_r

    @property
    def rbar_h(self):
        return 1.0 - self.r_h

    def as_array(self):
        return np.array([self.r_c, self.r_r, self.r_h])


def ground_pop(E, T):
    """Thermal ground-state probability (1 + exp(-E/T))^{-1} in (1/2, 1)."""
    if not E > 0:
        raise ValueError("ground_pop: E must be positive")
    if not T > 0:
        raise ValueError("ground_pop: T must be positive")
    return 1.0 / (1.0 + math.exp(-E / T))


def thermal_populations(params):
    """ThermalPopulations of the three qubits for the given machine."""
    E = params.energies
    T = params.temperatures
    return ThermalPopulations(*(ground_pop(E[i], T[i]) for i in range(3)))


def thermal_qubit(r):
    """Single-qubit thermal state diag(r, 1-r)."""
    return np.diag([r, 1.0 - r]).astype(complex)


def build_hamiltonian(params):
    """H = sum_i E_i |1><1|_i + g(|101><010| + |010><101|), 8x8 Hermitian."""
    E_c, E_r, E_h = params.energies
    H = np.zeros((8, 8), dtype=complex)
    for k in range(8):
        c, r, h = (k >> 2) & 1, (k >> 1) & 1, k & 1
        H[k, k] = c * E_c + r * E_r + h * E_h
    i, j = IDX_INNER
    H[j, i] = params.g
    H[i, j] = params.g
    return H


def interaction_hamiltonian(params):
    """Just the g(|101><010| + h.c.) part of the Hamiltonian."""
    H = np.zeros((8, 8), dtype=complex)
    i, j = IDX_INNER
    H[j, i] = params.g
    H[i, j] = params.g
    return H


def coherence_matrix(params, r=None):
    """The initial off-diagonal injection mu (zero matrix when kappa = 0).

    mu places the real amplitude kappa * sqrt(prod_i r_i rbar_i) on the
    chosen subspace's element pair and its conjugate. The same magnitude
    formula is used for both subspaces so equal-kappa comparisons are
    comparisons of equal coherence.
    """
    mu = np.zeros((8, 8), dtype=complex)
    if params.kappa == 0 or params.coh_subspace is None:
        return mu
    if r is None:
        r = thermal_populations(params)
    rv = r.as_array()
    a = params.kappa * math.sqrt(float(np.prod(rv * (1.0 - rv))))
    i, j = IDX_OUTER if params.coh_subspace is CohSubspace.OUTER_DIAG else IDX_INNER
    mu[i, j] = a
    mu[j, i] = a
    return mu


def initial_state(params):
    """rho0 = tau_c (x) tau_r (x) tau_h + mu; Hermitian, unit trace, PSD.

    For OUTER_DIAG the coupled 2x2 block has determinant
    (1 - kappa^2) prod_i r_i rbar_i >= 0, so PSD is guaranteed analytically;
    positivity is still checked numerically and a ValueError raised if the
    spectrum dips below -1e-12 (cannot happen for kappa <= 1).
    """
    r = thermal_populations(params)
    rho = tensor(thermal_qubit(r.r_c),
                 tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
    mu = coherence_matrix(params, r)
    if params.kappa > 0:
        rho = rho + mu
        if float(np.linalg.eigvalsh(rho).min()) < -1e-12:
            raise ValueError("initial state not positive semidefinite")
    return rho
