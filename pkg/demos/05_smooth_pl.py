"""Beyond quadratics: per-coordinate smoothness and the smoothness-dependent
PL condition.

The objective class: |grad f(y)_i - grad f(x)_i| <= L_i |y_i - x_i| per
coordinate, plus sum_i (grad f_i)^2 / sqrt(2 L_i) >= sqrt(2 mu~) (f - f*).
Two instances ship: any diagonal quadratic (L_i = lambda_i, mu~ = 1) and a
separable log-cosh objective (L_i = s_i, mu~ certified numerically on a box).

The demo verifies the descent lemma and the per-coordinate gradient bound by
sampling, then runs Adam with the smooth-PL schedule and checks it lands
within the frozen iteration budget.

Run: python demos/05_smooth_pl.py
"""

import numpy as np

from adamprecond import (
    InitSpec,
    PLConstants,
    StopRule,
    check_descent_lemma,
    check_grad_bound,
    check_plc,
    initialization_constants,
    make_diagonal,
    pl_from_quadratic,
    pl_separable_logcosh,
    run,
    sample_init,
    schedule_pl,
)
from adamprecond.bench import log_spectrum
from adamprecond.schedules import C_KSTAR_BUDGET, pl_budget

quad_prob = make_diagonal(8, log_spectrum(8, 1e4))
instances = [
    ("diagonal quadratic (kappa=1e4)", pl_from_quadratic(quad_prob)),
    ("log-cosh, scales 1..4", pl_separable_logcosh(5, np.linspace(1, 4, 5))),
]

print("== Sampled verification of the definitions ==")
for name, p in instances:
    d1 = check_descent_lemma(p, 5000, seed=1)
    d2 = check_grad_bound(p, 500, seed=2)
    d3 = check_plc(p, 5000, seed=3)
    print(f"{name:<32} L = [{p.l_min:g}, {p.l_max:g}]  mu~ = {p.mu_tilde:.4g}")
    print(f"    descent lemma: ok={d1.ok}  max violation {d1.max_violation:.1e}")
    print(f"    gradient bound: ok={d2.ok}  (1D line minima via golden section)")
    print(f"    PL certificate: ok={d3.ok}  certified mu~ = {d3.certified['mu_tilde']:.4g}")

print()
print("== Adam with the smooth-PL schedule on the quadratic instance ==")
p = instances[0][1]
x0 = sample_init(quad_prob, InitSpec(b=1.0, p=0.75, seed=4), mode="uniform_box")
c0 = initialization_constants(p, x0)
consts = PLConstants(l_min=p.l_min, l_max=p.l_max, mu_tilde=p.mu_tilde,
                     kappa_max0=c0["kappa_max0"], delta0=c0["delta0"])
eps = 1e-4 * c0["delta0"]
rep = schedule_pl(consts, eps, g0=c0["g0"], l_coords=p.l_coords)
budget = pl_budget(consts, eps, C_KSTAR_BUDGET)
print(f"kappa_max0 at x0 = {c0['kappa_max0']:.4g}  (vs L_max/L_min = {p.l_max / p.l_min:g})")
print(f"alpha = {rep.hp.alpha:.4g}, beta2 = {rep.hp.beta2:.8f}, phi = {rep.hp.phi:.4g}")
print(f"budget factor = {rep.kappa_adam:.4g}; frozen budget = {budget} iterations")
trace = run(p, "adam_variant", rep.hp, x0, StopRule(eps=eps, max_iter=budget))
print(f"run: {trace.status} after {trace.iterations} iterations "
      f"(f - f* = {trace.f[-1]:.3e} <= eps = {eps:.3e})")
gd_factor = consts.l_max / np.sqrt(consts.mu_tilde * consts.l_min)
print(f"GD's comparable factor is L_max/sqrt(mu~ L_min) = {gd_factor:.4g}; "
      f"with a box-uniform x0 the min() picks L_max/L_min, so the factors tie.")

print()
print("== Same problem, balanced-energy initialization ==")
print("kappa_max0 is an initialization quantity: starting with equal per-coordinate")
print("energy lambda_i z_i^2 makes kappa_max0 = d exactly, and Adam's budget factor")
print("drops below GD's.")
z_bal = 1.0 / np.sqrt(p.l_coords)
x0b = quad_prob.x_star + z_bal
c0b = initialization_constants(p, x0b)
constsb = PLConstants(l_min=p.l_min, l_max=p.l_max, mu_tilde=p.mu_tilde,
                      kappa_max0=c0b["kappa_max0"], delta0=c0b["delta0"])
epsb = 1e-4 * c0b["delta0"]
repb = schedule_pl(constsb, epsb, g0=c0b["g0"], l_coords=p.l_coords)
budgetb = pl_budget(constsb, epsb, C_KSTAR_BUDGET)
traceb = run(p, "adam_variant", repb.hp, x0b, StopRule(eps=epsb, max_iter=budgetb))
print(f"kappa_max0 = {c0b['kappa_max0']:.4g} (= d = {p.dim})")
print(f"Adam budget factor = {repb.kappa_adam:.4g}  vs GD factor = {gd_factor:.4g} "
      f"({gd_factor / repb.kappa_adam:.0f}x smaller)")
print(f"run: {traceb.status} after {traceb.iterations} iterations (budget {budgetb})")
