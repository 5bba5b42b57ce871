import dataclasses

import numpy as np
import pytest

from qfridge import (CohSubspace, NonCoolingWarning, bsocr,
                     bsocr_closed_equal_p, bsocr_coherent_coeffs,
                     chi_from_g_form, chi_from_p_form, initial_state,
                     lindblad_adjoint_initial, qsl_time, steady_state,
                     tradeoff_coeffs, trace_product)
from qfridge.dynamics import liouvillian_apply
from conftest import random_params


def _chi(params):
    return qsl_time(params, steady_state(params)).chi


# ----------------------------------------------------------------------
# the speed-limit report
# ----------------------------------------------------------------------

def test_report_internal_consistency(cooling_params):
    rep = steady_state(cooling_params)
    qrep = qsl_time(cooling_params, rep)
    assert qrep.tau > 0
    assert qrep.tau == pytest.approx(qrep.purity_gap / qrep.generator_norm,
                                     rel=1e-14)
    # chi * tau = Q_c identically
    assert qrep.chi * qrep.tau == pytest.approx(rep.q_cool, rel=1e-12)


def test_purity_gap_equals_overlap_difference(cooling_params, rng):
    # the factored gap equals |tr(rho0 rho_f) - tr(rho0^2)| where the
    # difference is well conditioned
    for params in [cooling_params] + [random_params(rng) for _ in range(6)]:
        rep = steady_state(params)
        qrep = qsl_time(params, rep)
        rho0 = initial_state(params)
        naive = abs(trace_product(rho0, rep.rho_f).real
                    - trace_product(rho0, rho0).real)
        assert qrep.purity_gap == pytest.approx(naive, rel=1e-8, abs=1e-18)


def test_generator_norm_is_initial_speed(cooling_params):
    qrep = qsl_time(cooling_params, steady_state(cooling_params))
    gen = lindblad_adjoint_initial(cooling_params)
    assert np.allclose(gen,
                       liouvillian_apply(cooling_params,
                                         initial_state(cooling_params)),
                       atol=1e-16)
    assert qrep.generator_norm == pytest.approx(
        float(np.linalg.norm(gen, "fro")), rel=1e-14)


def test_chi_scaling_dimensions(cooling_params):
    # (E, T, g, p) -> s*(E, T, g, p) scales Q_c by s^2, tau by 1/s, chi s^3
    s = 10.0
    scaled = dataclasses.replace(
        cooling_params, E_c=cooling_params.E_c * s,
        T_c=cooling_params.T_c * s, T_r=cooling_params.T_r * s,
        T_h=cooling_params.T_h * s, p_c=cooling_params.p_c * s,
        p_r=cooling_params.p_r * s, p_h=cooling_params.p_h * s,
        g=cooling_params.g * s)
    a = qsl_time(cooling_params, steady_state(cooling_params))
    b = qsl_time(scaled, steady_state(scaled))
    assert b.chi == pytest.approx(s ** 3 * a.chi, rel=1e-10)
    assert b.tau == pytest.approx(a.tau / s, rel=1e-10)


def test_bsocr_convenience_and_warning(cooling_params, heating_params):
    assert bsocr(cooling_params) == pytest.approx(_chi(cooling_params),
                                                  rel=1e-14)
    with pytest.warns(NonCoolingWarning):
        chi = bsocr(heating_params)
    assert chi < 0    # signed in the heating regime


# ----------------------------------------------------------------------
# closed forms (equal rates, diagonal start)
# ----------------------------------------------------------------------

def test_closed_form_matches_direct(cooling_params, heating_params):
    assert bsocr_closed_equal_p(cooling_params) == pytest.approx(
        _chi(cooling_params), rel=1e-10)
    # also exact in the heating regime, where chi < 0
    assert bsocr_closed_equal_p(heating_params) == pytest.approx(
        _chi(heating_params), rel=1e-10)


def test_closed_form_requires_equal_rates(unequal_rate_params):
    with pytest.raises(ValueError):
        bsocr_closed_equal_p(unequal_rate_params)


def test_chi_linear_in_g_and_p(cooling_params):
    base = _chi(cooling_params)
    for s in (0.2, 0.5, 2.0):
        scaled_g = dataclasses.replace(cooling_params,
                                       g=cooling_params.g * s)
        assert _chi(scaled_g) == pytest.approx(s * base, rel=1e-10)
        scaled_p = dataclasses.replace(
            cooling_params, p_c=cooling_params.p_c * s,
            p_r=cooling_params.p_r * s, p_h=cooling_params.p_h * s)
        assert _chi(scaled_p) == pytest.approx(s * base, rel=1e-10)


def test_chi_over_g_flat_at_tiny_coupling(cooling_params):
    # the conditioning-sensitive regime: chi/g must stay flat down to 1e-4
    ratios = []
    for g in np.geomspace(1e-4, 1e-2, 5):
        p = dataclasses.replace(cooling_params, g=float(g))
        ratios.append(_chi(p) / g)
    spread = (max(ratios) - min(ratios)) / abs(ratios[0])
    assert spread <= 1e-10


# ----------------------------------------------------------------------
# coherent-start coefficient forms
# ----------------------------------------------------------------------

@pytest.mark.parametrize("sub", [CohSubspace.OUTER_DIAG,
                                 CohSubspace.INNER_DIAG])
def test_coefficients_reproduce_chi_at_shifted_p(cooling_params, sub):
    base = dataclasses.replace(cooling_params, kappa=0.8, coh_subspace=sub)
    coeffs = bsocr_coherent_coeffs(base)
    assert coeffs.n2 == 0.0
    assert coeffs.n2g == 0.0
    # the polynomial coefficients do not depend on p: evaluate at other p
    for p_new in (0.01, 0.03, 0.08):
        shifted = dataclasses.replace(base, p_c=p_new, p_r=p_new, p_h=p_new)
        direct = abs(_chi(shifted))
        from_form = chi_from_p_form(coeffs, p_new, base.E_c)
        assert from_form == pytest.approx(direct, rel=1e-10)
        # and the g-polynomial coefficients do not depend on g
        coeffs_shifted = bsocr_coherent_coeffs(shifted)
        for g_new in (0.01, 0.04, 0.09):
            moved = dataclasses.replace(shifted, g=g_new)
            assert chi_from_g_form(coeffs_shifted, g_new, base.E_c) == \
                pytest.approx(abs(_chi(moved)), rel=1e-10)


def test_coherent_coeffs_require_equal_rates(unequal_rate_params):
    with pytest.raises(ValueError):
        bsocr_coherent_coeffs(unequal_rate_params)


# ----------------------------------------------------------------------
# trade-off coefficients
# ----------------------------------------------------------------------

def test_tradeoff_identities(cooling_params, heating_params):
    for params in (cooling_params, heating_params):
        # the coefficients do not depend on g: compute once, test across g
        co = tradeoff_coeffs(params)
        for g in (0.003, 0.01, 0.05):
            pp = dataclasses.replace(params, g=g)
            rep = steady_state(pp)
            qrep = qsl_time(pp, rep)
            den = co.ups1 + co.ups2 / g ** 2
            assert co.xi1 / den == pytest.approx(rep.q_cool, rel=1e-10)
            assert (co.xi2 / g) / den == pytest.approx(qrep.tau, rel=1e-10)
            quad = (co.xi2 ** 2 / co.xi1) * rep.q_cool \
                - co.ups1 * (co.xi2 / co.xi1) ** 2 * rep.q_cool ** 2
            assert quad == pytest.approx(qrep.tau ** 2, rel=1e-10)


def test_tradeoff_rejects_coherent_start(coherent_params):
    with pytest.raises(ValueError):
        tradeoff_coeffs(coherent_params)


def test_tradeoff_identities_hold_for_unequal_rates(unequal_rate_params):
    # the reconstructions need no equal-rate assumption
    co = tradeoff_coeffs(unequal_rate_params)
    g = unequal_rate_params.g
    rep = steady_state(unequal_rate_params)
    qrep = qsl_time(unequal_rate_params, rep)
    den = co.ups1 + co.ups2 / g ** 2
    assert co.xi1 / den == pytest.approx(rep.q_cool, rel=1e-10)
    assert (co.xi2 / g) / den == pytest.approx(qrep.tau, rel=1e-10)
