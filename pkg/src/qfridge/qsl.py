"""Quantum-speed-limit time tau, the cooling figure of merit
chi = Q_c/tau, its closed forms, and the trade-off coefficients.

tau lower-bounds the time to evolve from the initial state rho0 to the
steady state rho_f under the reset generator:

    tau = |tr(rho0 rho_f) - tr(rho0^2)| / ||L[rho0]||_HS.

chi multiplies the steady cooling rate by the maximal evolution speed; it
upper-bounds the time-averaged transient cooling acceleration.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import FridgeError, PoleError, UndefinedChiError
from .linalg import commutator, hs_norm, tensor, trace_product
from .model import (build_hamiltonian, coherence_matrix,
                    initial_state, thermal_populations, thermal_qubit)
from .dynamics import liouvillian_apply
from .steady import reset_combos, lambda_weight, bias_delta, steady_state


class TrivialEvolutionWarning(UserWarning):
    """rho0 is already the steady state: tau = 0 and chi is undefined."""


class NonCoolingWarning(UserWarning):
    """Outside the cooling window: chi carries the (negative) sign of Q_c."""


@dataclass(frozen=True)
class QslReport:
    """Speed-limit quantities at one parameter point.

    tau = purity_gap / generator_norm; chi = Q_c/tau (NaN when tau = 0).
    """
    tau: float
    purity_gap: float
    generator_norm: float
    chi: float


@dataclass(frozen=True)
class TradeoffCoeffs:
    """Coefficients (xi1, xi2, ups1, ups2) of the parametric trade-off

        Q_c = xi1/(ups1 + ups2/g^2),  tau = (xi2/g)/(ups1 + ups2/g^2),

    which eliminate g into tau^2 = (xi2^2/xi1) Q_c - ups1 (xi2/xi1)^2 Q_c^2.
    The parametrization is invariant under joint rescaling of all four
    coefficients; they are normalized here so that ups2 = 1, which is the
    unique normalization under which all three identities hold exactly.
    lam is the bare population-weighted rate sum 2 + sum q_i + sum Q Omega.
    """
    xi1: float
    xi2: float
    ups1: float
    ups2: float
    lam: float


# ----------------------------------------------------------------------
# generator action and the speed limit
# ----------------------------------------------------------------------

def lindblad_adjoint_initial(params):
    """Action of the generator on the initial state, L[rho0].

    For kappa = 0 this is exactly -i[H_int, rho0] (the diagonal part of H
    commutes with the diagonal product state and each reset channel fixes
    its own thermal state). With coherence it equals -i[H, rho0 + mu] - q mu
    because mu is traceless on every qubit.
    """
    return liouvillian_apply(params, initial_state(params))


def qsl_time(params, steady):
    """QslReport for the machine: tau, its two factors, and chi.

    purity_gap is |tr(rho0 rho_f) - tr(rho0^2)|, evaluated through its
    exact factorization gamma tr(rho_diag sigma) - tr(mu^2) (the cross
    terms tr(mu sigma) and tr(rho_diag mu) vanish identically). The
    factored form matters: at weak coupling the gap is ~ 1e-10 while the
    two traces are ~ 0.1, so the direct difference loses eight digits to
    cancellation. No arccos anywhere (avoids domain rounding at
    near-coincident states). chi = Q_c/tau is NaN (with a
    trivial-evolution warning) when the initial state is stationary.
    """
    r = thermal_populations(params)
    rho_diag = tensor(thermal_qubit(r.r_c),
                      tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
    mu = coherence_matrix(params, r)
    gen = lindblad_adjoint_initial(params)
    norm = hs_norm(gen)
    trs = float(trace_product(rho_diag, steady.sigma).real)
    gap = abs(steady.gamma * trs - float(trace_product(mu, mu).real))
    if norm == 0.0:
        if gap > 1e-14:
            raise FridgeError(
                "zero generator norm with nonzero purity gap: inconsistent inputs")
        warnings.warn("initial state is stationary: tau = 0",
                      TrivialEvolutionWarning, stacklevel=2)
        return QslReport(tau=0.0, purity_gap=gap, generator_norm=0.0,
                         chi=float("nan"))
    tau = gap / norm
    if tau == 0.0:
        warnings.warn("initial state coincides with the steady state: tau = 0",
                      TrivialEvolutionWarning, stacklevel=2)
        chi = float("nan")
    else:
        chi = steady.q_cool / tau
    return QslReport(tau=tau, purity_gap=gap, generator_norm=norm, chi=chi)


def bsocr(params):
    """chi = Q_c/tau for the machine (signed).

    chi > 0 in the cooling window; outside it chi carries the sign of Q_c
    and a warning is emitted. tau = 0 raises UndefinedChiError.
    """
    srep = steady_state(params)
    rep = qsl_time(params, srep)
    if rep.tau == 0.0:
        raise UndefinedChiError("tau = 0: chi undefined at a stationary start")
    if not srep.is_fridge:
        warnings.warn("outside the cooling window: chi <= 0",
                      NonCoolingWarning, stacklevel=2)
    return rep.chi


# ----------------------------------------------------------------------
# closed forms (equal reset rates)
# ----------------------------------------------------------------------

def _require_equal_p(params):
    if not (params.p_c == params.p_r == params.p_h):
        raise ValueError("closed form requires equal reset rates")
    if params.p_c <= 0:
        raise ValueError("closed form requires positive reset rates")
    return params.p_c


def bsocr_closed_equal_p(params):
    """Closed-form chi for equal reset rates and no initial coherence.

    Rational function of the excited-state probabilities rbar_i:

        chi = 3 sqrt(2) g p E_c * num / |den|,
        num = rbar_c rbar_h - rbar_r (1 - rbar_c - rbar_h + 2 rbar_c rbar_h),
        den = the cubic polynomial below (equal to tr(rho0 sigma)).

    num equals -Delta identically, so the sign of chi is the sign of -Delta
    (positive exactly in the cooling window). chi/(g p) is independent of
    both g and p: exact linearity in each knob.
    """
    p = _require_equal_p(params)
    if params.kappa != 0:
        raise ValueError("closed form requires kappa = 0")
    r = thermal_populations(params)
    bc, br, bh = r.rbar_c, r.rbar_r, r.rbar_h
    num = bc * bh - br * (1.0 - bc - bh + 2.0 * bc * bh)
    den = (1.5 - 3.0 * bh
           + br * (-1.0 + 3.0 * bh + bh ** 2)
           + br ** 2 * (5.0 - 9.0 * bh + 4.0 * bh ** 2)
           + bc ** 2 * (br + br ** 2 * (4.0 - 8.0 * bh) + 8.0 * br * bh ** 2
                        - bh * (1.0 + 4.0 * bh))
           - bc * (3.0 - 5.0 * bh + bh ** 2 + 6.0 * br * bh - 3.0 * br
                   + br ** 2 * (9.0 - 16.0 * bh + 8.0 * bh ** 2)))
    if den == 0.0:
        raise UndefinedChiError("closed form denominator vanishes (tau = 0)")
    return 3.0 * math.sqrt(2.0) * params.g * p * params.E_c * num / abs(den)


@dataclass(frozen=True)
class CoherentCoeffs:
    """Coefficients of the two rational closed forms of chi with coherence.

    Reset-rate form (equal rates p, q = 3p):
        chi = 3 p E_c sqrt((n1 p^2 + n2 p + n3)/(d1 p^4 + d2 p^2 + d3)),
    with every coefficient independent of p. Coupling form:
        chi = g E_c sqrt(g^2 (n1g g^2 + n2g g + n3g)
                         /(d1g g^4 + d2g g^2 + d3g)),
    with every coefficient independent of g (the leading g^2 inside the
    root does not factor into the quoted coefficients). n2 and n2g vanish
    identically; they are kept so the quadratic shape is explicit.
    """
    n1: float
    n2: float
    n3: float
    d1: float
    d2: float
    d3: float
    n1g: float
    n2g: float
    n3g: float
    d1g: float
    d2g: float
    d3g: float


def bsocr_coherent_coeffs(params):
    """CoherentCoeffs at the given parameter point (equal reset rates).

    Built from the traces n1 = 9 tr(mu^2), n2 = -6 tr(M mu), n3 = tr(M^2)
    with M = -i[H, rho0_diag + mu], and pi1 = tr(rho0_diag sigma + mu sigma),
    pi2 = tr(rho0_diag mu + mu^2); raises PoleError at Delta = 0 where the
    reset-rate-form denominators lose meaning.
    """
    p = _require_equal_p(params)
    combos = reset_combos(*params.ps)
    r = thermal_populations(params)
    delta = bias_delta(r)
    if delta == 0.0:
        raise PoleError("coefficients undefined where the bias Delta vanishes")
    lam = lambda_weight(combos, r)
    q = combos.q
    g = params.g

    from .steady import sigma_matrix   # local import to avoid cycle at module load
    sigma = sigma_matrix(combos, r, params)
    rho_diag = tensor(thermal_qubit(r.r_c),
                      tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
    mu = coherence_matrix(params, r)
    H = build_hamiltonian(params)
    M = -1j * commutator(H, rho_diag + mu)

    pi1 = float((trace_product(rho_diag, sigma) + trace_product(mu, sigma)).real)
    pi2 = float((trace_product(rho_diag, mu) + trace_product(mu, mu)).real)
    n1 = 9.0 * float(trace_product(mu, mu).real)
    n2 = -6.0 * float(trace_product(M, mu).real)
    n3 = float(trace_product(M, M).real)

    d1 = 81.0 * pi2 ** 2 / (4.0 * g ** 4 * delta ** 2)
    d2 = 18.0 * (pi1 + lam * pi2 / delta) * pi2 / (2.0 * g ** 2 * delta)
    d3 = (pi1 + lam * pi2 / delta) ** 2

    # coupling form: W = tr(M^2) + q^2 pi2 - 2 g^2 Delta^2 is g-independent
    W = n3 + q ** 2 * pi2 - 2.0 * g ** 2 * delta ** 2
    n1g = 8.0 * q ** 2 * delta ** 4
    n2g = 0.0
    n3g = 4.0 * q ** 2 * delta ** 2 * W
    base = delta * pi1 + lam * pi2
    d1g = 4.0 * base ** 2
    d2g = 4.0 * base * q ** 2 * pi2
    d3g = q ** 4 * pi2 ** 2
    return CoherentCoeffs(n1, n2, n3, d1, d2, d3,
                          n1g, n2g, n3g, d1g, d2g, d3g)


def chi_from_p_form(coeffs, p, E_c):
    """Evaluate the reset-rate rational form at rate p (magnitude of chi)."""
    num = coeffs.n1 * p ** 2 + coeffs.n2 * p + coeffs.n3
    den = coeffs.d1 * p ** 4 + coeffs.d2 * p ** 2 + coeffs.d3
    if den <= 0:
        raise PoleError("reset-rate form denominator nonpositive")
    return 3.0 * p * E_c * math.sqrt(num / den)


def chi_from_g_form(coeffs, g, E_c):
    """Evaluate the coupling rational form at strength g (magnitude of chi)."""
    num = g ** 2 * (coeffs.n1g * g ** 2 + coeffs.n2g * g + coeffs.n3g)
    den = coeffs.d1g * g ** 4 + coeffs.d2g * g ** 2 + coeffs.d3g
    if den <= 0:
        raise PoleError("coupling form denominator nonpositive")
    return g * E_c * math.sqrt(num / den)


# ----------------------------------------------------------------------
# trade-off coefficients
# ----------------------------------------------------------------------

def tradeoff_coeffs(params):
    """TradeoffCoeffs for a thermal-product start (kappa = 0).

    Normalized so that ups2 = 1 (see TradeoffCoeffs); with that choice

        Q_c  = xi1/(ups1 + ups2/g^2)
        tau  = (xi2/g)/(ups1 + ups2/g^2)
        tau^2 = (xi2^2/xi1) Q_c - ups1 (xi2/xi1)^2 Q_c^2

    all hold exactly for every g.
    """
    if params.kappa != 0:
        raise ValueError("trade-off coefficients are defined for kappa = 0")
    combos = reset_combos(*params.ps)
    r = thermal_populations(params)
    delta = bias_delta(r)
    lam = lambda_weight(combos, r)
    q = combos.q
    from .steady import sigma_matrix
    sigma = sigma_matrix(combos, r, params)
    rho0 = tensor(thermal_qubit(r.r_c),
                  tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
    trs = float(trace_product(rho0, sigma).real)
    return TradeoffCoeffs(
        xi1=-2.0 * params.E_c * delta / q,
        xi2=math.sqrt(2.0) * abs(trs) / q ** 2,
        ups1=2.0 * lam / q ** 2,
        ups2=1.0,
        lam=lam,
    )
