import numpy as np
import pytest

import dataclasses

from qfridge import (FridgeParams, NoCouplingWarning, SingularRatesError,
                     bias_delta, carnot_cop, gamma_amplitude, hs_norm,
                     lambda_weight, omega_weights, reset_combos,
                     steady_state, tensor, thermal_populations,
                     thermal_qubit, trace_product)
from qfridge.dynamics import liouvillian_apply, liouvillian_matrix
from qfridge.linalg import null_space_1d
from conftest import random_params


# ----------------------------------------------------------------------
# rate combinations
# ----------------------------------------------------------------------

def test_reset_combos_formulas():
    pc, pr, ph = 0.01, 0.02, 0.05
    c = reset_combos(pc, pr, ph)
    q = pc + pr + ph
    assert c.q == pytest.approx(q)
    assert c.q_c == pytest.approx(pc / (q - pc))
    assert c.q_r == pytest.approx(pr / (q - pr))
    assert c.q_h == pytest.approx(ph / (q - ph))
    assert c.Q_cr == pytest.approx((pc * c.q_r + pr * c.q_c) / (q - pc - pr))
    assert c.Q_ch == pytest.approx((pc * c.q_h + ph * c.q_c) / (q - pc - ph))
    assert c.Q_rh == pytest.approx((pr * c.q_h + ph * c.q_r) / (q - pr - ph))


def test_reset_combos_heat_current_identity(rng):
    # p_c (1 + q_r + q_h + Q_rh) = q, the contraction behind J_c = q gamma E_c
    for _ in range(20):
        pc, pr, ph = rng.uniform(0.001, 0.2, size=3)
        c = reset_combos(pc, pr, ph)
        assert pc * (1.0 + c.q_r + c.q_h + c.Q_rh) == pytest.approx(
            c.q, rel=1e-12)


def test_zero_rate_rejected_at_solve_time():
    # a vanishing rate passes construction (it is merely nonnegative) but
    # violates the solver precondition that every reset rate be positive
    p = FridgeParams(E_c=1.0, eta=0.5, T_c=1.0, T_r=2.0, T_h=10.0,
                     p_c=0.0, p_r=0.05, p_h=0.05, g=0.05)
    with pytest.raises(ValueError, match="positive"):
        steady_state(p)


def test_reset_combos_singular_cases():
    with pytest.raises(SingularRatesError):
        reset_combos(0.0, 0.0, 0.0)
    with pytest.raises(SingularRatesError):
        reset_combos(0.0, 0.0, 0.05)        # q - p_h = 0
    with pytest.raises(SingularRatesError):
        reset_combos(0.0, 0.02, 0.05)       # q - p_r - p_h = 0
    with pytest.raises(ValueError):
        reset_combos(-0.01, 0.02, 0.05)


# ----------------------------------------------------------------------
# scalar pieces
# ----------------------------------------------------------------------

def test_bias_sign_tracks_operating_regime(cooling_params, heating_params):
    assert bias_delta(thermal_populations(cooling_params)) < 0   # fridge
    assert bias_delta(thermal_populations(heating_params)) > 0   # heater


def test_omega_weights_are_primed_xnor(cooling_params):
    r = thermal_populations(cooling_params)
    rp = np.array([r.r_c, 1.0 - r.r_r, r.r_h])     # prime flips only r
    om = omega_weights(r)
    pairs = [(0, 1), (0, 2), (1, 2)]
    for w, (j, k) in zip(om, pairs):
        assert w == pytest.approx(rp[j] * rp[k]
                                  + (1 - rp[j]) * (1 - rp[k]), rel=1e-14)
        assert 0.0 < w < 1.0


def test_gamma_zero_coupling_warns():
    p = FridgeParams(E_c=1.0, eta=0.5, T_c=1.0, T_r=2.0, T_h=10.0,
                     p_c=0.05, p_r=0.05, p_h=0.05, g=0.0)
    combos = reset_combos(*p.ps)
    r = thermal_populations(p)
    with pytest.warns(NoCouplingWarning):
        assert gamma_amplitude(p, combos, r) == 0.0


def test_carnot_cop():
    assert carnot_cop(1.0, 2.0, 10.0) == pytest.approx(0.8)
    assert carnot_cop(1.0, 5.0, 10.0) == pytest.approx(0.125)
    with pytest.raises(ValueError):
        carnot_cop(2.0, 2.0, 10.0)


# ----------------------------------------------------------------------
# the steady state itself
# ----------------------------------------------------------------------

def _check_point(params):
    rep = steady_state(params)
    # fixed point of the generator, at machine precision
    residual = hs_norm(liouvillian_apply(params, rep.rho_f))
    assert residual <= 1e-12
    # physical state
    assert np.trace(rep.rho_f).real == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(rep.rho_f, rep.rho_f.conj().T, atol=1e-13)
    assert np.linalg.eigvalsh(rep.rho_f).min() >= -1e-12
    # sigma is traceless; rho_f = thermal product + gamma sigma
    assert abs(np.trace(rep.sigma)) <= 1e-13
    r = thermal_populations(params)
    prod = tensor(thermal_qubit(r.r_c),
                  tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
    assert np.allclose(rep.rho_f, prod + rep.gamma * rep.sigma, atol=1e-14)
    # scalar bookkeeping
    assert rep.q_cool == pytest.approx(params.q * rep.gamma * params.E_c,
                                       rel=1e-12, abs=1e-300)
    assert rep.is_fridge == (rep.gamma > 0) == (rep.delta < 0)
    assert rep.is_fridge == (rep.eta < rep.eta_carnot)
    return rep


def test_steady_state_fixed_point_and_report(cooling_params, heating_params,
                                             unequal_rate_params):
    rep = _check_point(cooling_params)
    assert rep.is_fridge and rep.gamma > 0 and rep.q_cool > 0
    rep = _check_point(heating_params)
    assert not rep.is_fridge and rep.gamma < 0 and rep.q_cool < 0
    _check_point(unequal_rate_params)


def test_steady_state_random_points(rng):
    for _ in range(20):
        _check_point(random_params(rng))


def test_steady_state_matches_null_space_oracle(rng):
    # independent route: kernel of the vectorized generator
    for _ in range(8):
        params = random_params(rng)
        rep = steady_state(params)
        oracle = null_space_1d(liouvillian_matrix(params))
        assert np.abs(rep.rho_f - oracle).max() <= 1e-9


def test_coherence_element_of_steady_state(cooling_params):
    # the only off-diagonal structure is gamma * (q/2g) * Y on the swap pair
    rep = steady_state(cooling_params)
    expected = rep.gamma * cooling_params.q / (2.0 * cooling_params.g)
    assert rep.rho_f[5, 2] == pytest.approx(1j * expected, abs=1e-12)
    assert rep.rho_f[2, 5] == pytest.approx(-1j * expected, abs=1e-12)
    off = rep.rho_f - np.diag(np.diag(rep.rho_f))
    off[2, 5] = off[5, 2] = 0.0
    assert np.abs(off).max() <= 1e-15


def test_steady_state_independent_of_kappa(cooling_params, coherent_params):
    # the generator does not depend on the initial coherence
    a = steady_state(cooling_params)
    b = steady_state(coherent_params)
    assert np.allclose(a.rho_f, b.rho_f, atol=1e-15)


def test_overlap_closed_form_matches_trace(rng):
    # tr(rho_diag sigma) via the polynomial used by the tau closed forms
    for _ in range(10):
        params = random_params(rng)
        rep = steady_state(params)
        r = thermal_populations(params)
        combos = reset_combos(*params.ps)
        rho_diag = tensor(thermal_qubit(r.r_c),
                          tensor(thermal_qubit(r.r_r), thermal_qubit(r.r_h)))
        direct = trace_product(rho_diag, rep.sigma).real
        pi = lambda ri: ri * ri + (1 - ri) * (1 - ri)
        pc, pr, ph = pi(r.r_c), pi(r.r_r), pi(r.r_h)
        closed = (combos.Q_rh * (r.r_c - r.rbar_c) * pr * ph
                  + combos.Q_ch * (r.rbar_r - r.r_r) * pc * ph
                  + combos.Q_cr * (r.r_h - r.rbar_h) * pc * pr
                  + combos.q_c * pc * (r.rbar_r * r.r_h - r.r_r * r.rbar_h)
                  + combos.q_r * pr * (r.r_c * r.r_h - r.rbar_c * r.rbar_h)
                  + combos.q_h * ph * (r.r_c * r.rbar_r - r.rbar_c * r.r_r)
                  + bias_delta(r))
        assert direct == pytest.approx(closed, rel=1e-11, abs=1e-15)


def test_small_g_limit_gamma_vanishes(cooling_params):
    # gamma ~ 2 g^2 (-Delta)/q^2 as g -> 0: quadratic suppression
    gs = [1e-3, 1e-4, 1e-5]
    gammas = [steady_state(dataclasses.replace(cooling_params, g=g)).gamma
              for g in gs]
    for g, gam in zip(gs, gammas):
        assert gam == pytest.approx(
            2.0 * g ** 2 * (-bias_delta(thermal_populations(cooling_params)))
            / cooling_params.q ** 2, rel=1e-3)


def test_lambda_weight_positive(rng):
    for _ in range(10):
        params = random_params(rng)
        lam = lambda_weight(reset_combos(*params.ps),
                            thermal_populations(params))
        assert lam > 2.0
