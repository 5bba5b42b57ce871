# -*- coding: utf-8 -*-
"""
How initial coherence changes the power-speed figure of merit chi.

Seeding the three-qubit start state with a real off-diagonal element
between |000> and |111> (amplitude kappa times the largest value the
thermal populations allow) leaves the steady state untouched, but it
changes both ingredients of chi = Q_c / tau: the extra purity widens the
distance the state must travel, and the coherence feeds the generator
norm through the Hamiltonian commutator.

The net effect is not a simple "coherence helps":

  * against the coupling g, the coherent curves start BELOW the
    incoherent one and overtake it only past a crossover coupling
    (near g = 0.0089 for kappa = 0.5 and g = 0.020 for kappa = 1 with
    the parameters below);

  * at fixed g the optimum sits at small kappa: a faint coherence
    (kappa ~ 0.06 here) beats both the fully coherent and the
    incoherent start by an order of magnitude, because the commutator
    feeds the generator norm linearly in kappa while the purity gap
    only grows quadratically, so tau dips hard before the gap
    catches up;

  * where the coherence lives matters: the same kappa placed on the
    degenerate |010>/|101> pair (the pair the interaction couples)
    barely moves chi at all.

Run:  python3 demos/coherence_boost.py
"""

import numpy as np

from qfridge import (CohSubspace, FridgeParams, bsocr, bsocr_coherent_coeffs,
                     chi_from_g_form)

# ----------------------------
# Model parameters (edit here)
# ----------------------------
E_c = 1.0
eta = 0.5
T_c, T_r, T_h = 1.0, 2.0, 10.0
p = 0.05                      # common reset rate
g_fixed = 0.05                # coupling used in the kappa and rate scans


def make_params(g=g_fixed, p_all=p, kappa=0.0, sub=None):
    return FridgeParams(E_c=E_c, eta=eta, T_c=T_c, T_r=T_r, T_h=T_h,
                        p_c=p_all, p_r=p_all, p_h=p_all, g=g,
                        kappa=kappa, coh_subspace=sub)


OUTER = CohSubspace.OUTER_DIAG
INNER = CohSubspace.INNER_DIAG

# ----------------------------------------------------------------------
# 1. chi vs g for kappa = 0, 0.5, 1 (coherence on the |000>,|111> pair)
# ----------------------------------------------------------------------
print("=" * 72)
print("chi against the coupling g (coherence on the outer pair)")
print("=" * 72)
print(f"{'g':>8} {'kappa=0':>12} {'kappa=0.5':>12} {'kappa=1':>12}")
for g in (0.002, 0.005, 0.009, 0.015, 0.021, 0.03, 0.05, 0.09):
    row = [bsocr(make_params(g=g, kappa=k, sub=OUTER if k else None))
           for k in (0.0, 0.5, 1.0)]
    marks = "".join(" <" if row[j] > row[0] else "  " for j in (1, 2))
    print(f"{g:>8.3f} {row[0]:>12.4e} {row[1]:>12.4e} {row[2]:>12.4e}{marks}")
print()
print("('<' marks a coherent column beating the incoherent one)")

# bisect the crossover g where each coherent curve meets the incoherent one
def crossover(kappa, lo=1e-3, hi=0.1):
    """Smallest g where chi(kappa) - chi(0) changes sign, by bisection."""
    f = lambda g: (bsocr(make_params(g=g, kappa=kappa, sub=OUTER))
                   - bsocr(make_params(g=g)))
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


print(f"crossover for kappa = 0.5 : g = {crossover(0.5):.6f}")
print(f"crossover for kappa = 1.0 : g = {crossover(1.0):.6f}")

# the closed rational forms reproduce the swept values exactly
co = bsocr_coherent_coeffs(make_params(kappa=1.0, sub=OUTER))
g_chk = 0.03
closed = chi_from_g_form(co, g_chk, E_c)
direct = bsocr(make_params(g=g_chk, kappa=1.0, sub=OUTER))
print(f"closed-form check at g = {g_chk}: |closed/direct - 1| = "
      f"{abs(closed / abs(direct) - 1.0):.2e}")

# ----------------------------------------------------------------------
# 2. chi against kappa at fixed g: the faint-coherence optimum
# ----------------------------------------------------------------------
print()
print("=" * 72)
print(f"chi against kappa at g = {g_fixed}")
print("=" * 72)
kappas = np.concatenate([np.linspace(0.0, 0.2, 21), [0.4, 0.6, 0.8, 1.0]])
chis = np.array([bsocr(make_params(kappa=k, sub=OUTER if k else None))
                 for k in kappas])
peak = chis.max()
for k, c in zip(kappas, chis):
    bar = "#" * int(round(40 * c / peak))
    print(f"  kappa={k:5.2f}  chi={c:.4e}  {bar}")
i = int(np.argmax(chis))
print(f"\npeak near kappa = {kappas[i]:.2f}: chi = {chis[i]:.4e}, "
      f"{chis[i] / chis[0]:.0f}x the incoherent value "
      f"and {chis[i] / chis[-1]:.0f}x the fully coherent one")

# ----------------------------------------------------------------------
# 3. placement matters: outer pair vs the degenerate inner pair
# ----------------------------------------------------------------------
print()
print("=" * 72)
print("same kappa, different placement (g = %.2f, kappa = 1)" % g_fixed)
print("=" * 72)
chi_out = bsocr(make_params(kappa=1.0, sub=OUTER))
chi_in = bsocr(make_params(kappa=1.0, sub=INNER))
print(f"  coherence on |000>,|111> : chi = {chi_out:.4e}")
print(f"  coherence on |010>,|101> : chi = {chi_in:.4e}")
print(f"  ratio: {chi_out / chi_in:.0f}x in favour of the outer pair")
print("the inner pair is degenerate under the bare Hamiltonian, so its")
print("coherence commutes into a much smaller generator-norm gain.")

# ----------------------------------------------------------------------
# 4. chi against the reset rate with full coherence: an interior peak
# ----------------------------------------------------------------------
print()
print("=" * 72)
print(f"chi against the reset rate p (kappa = 1, g = {g_fixed})")
print("=" * 72)
ps = np.linspace(0.02, 0.09, 15)
chis = np.array([bsocr(make_params(p_all=pp, kappa=1.0, sub=OUTER))
                 for pp in ps])
peak = chis.max()
for pp, c in zip(ps, chis):
    bar = "#" * int(round(40 * c / peak))
    print(f"  p={pp:5.3f}  chi={c:.4e}  {bar}")
i = int(np.argmax(chis))
print(f"\nwithout coherence chi grows linearly in p; with kappa = 1 the")
print(f"curve turns over at p ~ {ps[i]:.3f} (a genuinely flat maximum),")
print("because the purity gap in tau loses ground to the generator norm")
print("once the resets dominate the coherent stirring.")
