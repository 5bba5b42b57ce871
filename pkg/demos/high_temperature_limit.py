# -*- coding: utf-8 -*-
"""
The high-temperature scaling regime: a flat chi plateau and a closed-form
efficiency at maximal chi.

When every gap is small against its bath temperature (x_i = E_i/T_i << 1)
the figure of merit collapses onto the simple plateau

    chi  ~=  3 sqrt(2) g p E_c / (3 - F(eta)/3)  ->  sqrt(2) g p E_c,

with all the eta dependence carried by the shape function F.  Setting
dF/deta = 0 gives a closed quadratic root for the efficiency at maximal
chi which, in the limit T_h >> T_r >> T_c with T_c/T_r ~ T_r/T_h, tends to

    eta_opt  ->  (T_c/T_r) (1 - sqrt(T_c/T_h)),

a square-root-of-temperature-ratio form of the same family as the
classical efficiency at maximum power.

This script pins the plateau numerically, evaluates the exact root and
its scaling limit, and then shows the honest flip side: at the scaling
point the full model's chi(eta) is flat to parts in 1e7, its residual
tilt leans on the Carnot edge, and the numerical maximizer refuses to
report an interior optimum rather than manufacture one.

Run:  python3 demos/high_temperature_limit.py
"""

import math
import warnings

from qfridge import (BoundaryMaximumError, FridgeParams, bsocr, carnot_cop,
                     chi_highT, eta_opt_asymptotic, f_function,
                     maximize_chi_over_eta)

# ----------------------------
# Model parameters (edit here)
# ----------------------------
E_c = 1e-3
T_c, T_r, T_h = 1.0, 30.0, 900.0   # T_c/T_r = T_r/T_h = 1/30
p = 1e-3                           # common reset rate
g = 1e-4


def make_params(eta):
    # in this scaling regime p is pushed up to E_c itself, so the
    # perturbative advisory fires on every construction; silence it once
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return FridgeParams(E_c=E_c, eta=eta, T_c=T_c, T_r=T_r, T_h=T_h,
                            p_c=p, p_r=p, p_h=p, g=g)


eta_c = carnot_cop(T_c, T_r, T_h)
plateau = math.sqrt(2.0) * g * p * E_c

# ----------------------------------------------------------------------
# 1. how small are the x_i, and how flat is chi?
# ----------------------------------------------------------------------
print("=" * 72)
print("regime check and the sqrt(2) g p E_c plateau")
print("=" * 72)
pr = make_params(0.02)
print(f"  x_c = E_c/T_c = {pr.E_c / T_c:.2e}   x_r = E_r/T_r = "
      f"{pr.E_r / T_r:.2e}   x_h = E_h/T_h = {pr.E_h / T_h:.2e}")
print(f"  eta_C = {eta_c:.7f}")
print(f"  plateau sqrt(2) g p E_c = {plateau:.6e}")
print()
print(f"{'eta':>8} {'exact chi':>14} {'high-T formula':>14} "
      f"{'vs formula':>11} {'vs plateau':>11}")
for eta in (0.005, 0.010, 0.020, 0.029, 0.032):
    pp = make_params(eta)
    exact = bsocr(pp)
    approx = chi_highT(eta, pp)
    print(f"{eta:>8.3f} {exact:>14.6e} {approx:>14.6e} "
          f"{abs(approx / exact - 1.0):>11.1e} "
          f"{abs(exact / plateau - 1.0):>11.1e}")
print()
print("over the body of the cooling window chi moves only in its seventh")
print("digit: the plateau is the physics, the eta dependence is a ripple.")

# ----------------------------------------------------------------------
# 2. the closed-form efficiency at maximal chi
# ----------------------------------------------------------------------
print()
print("=" * 72)
print("efficiency at maximal chi: exact root vs scaling limit")
print("=" * 72)
eta_exact, eta_limit = eta_opt_asymptotic(T_c, T_r, T_h)
print(f"  exact quadratic root      : {eta_exact:.10f}")
print(f"  (T_c/T_r)(1-sqrt(T_c/T_h)): {eta_limit:.10f}")
print(f"  relative gap              : {abs(eta_exact / eta_limit - 1.0):.2%}")
print(f"  as a fraction of Carnot   : root at {eta_exact / eta_c:.3%}, "
      f"limit at {eta_limit / eta_c:.3%}")
print(f"  F at the root             : {f_function(eta_exact, make_params(0.02)):.3e}")
print()
print("at this temperature ladder the optimal efficiency crowds the")
print("Carnot point; the limit form undershoots the exact root by the")
print("same 1/30 that separates the rungs of the ladder.")

# ----------------------------------------------------------------------
# 3. the honest flip side: no bracketable interior maximum here
# ----------------------------------------------------------------------
print()
print("=" * 72)
print("what the numerical maximizer says at the scaling point")
print("=" * 72)
try:
    maximize_chi_over_eta(make_params(0.029))
    print("  unexpected: an interior maximum was bracketed")
except BoundaryMaximumError as err:
    print(f"  BoundaryMaximumError: {err}")
print()
print("the plateau hides a thin boundary layer: within 1e-5 of eta_C the")
print("full-model chi climbs above the plateau (+0.2% at 1e-5, +2% at")
print("1e-6, +7.5% at 1e-8 of the window) before cancellation in the")
print("vanishing bias swamps the arithmetic, so the scan's best sample is")
print("always the one nearest the edge and there is no interior maximum")
print("to bracket.  the refusal is the correct report; the quadratic root")
print("above describes the ripple of the high-temperature formula, which")
print("the plateau flatness makes unresolvable in the full model here.")
