"""Fixed points of constant-delta Adam.

Adam need not converge to the minimizer: depending on delta it can stall at a
point with a provably-large gradient. The three regimes:

  delta = 0                 : a non-trivial fixed point exists with
                              ||g||_1 >= alpha d sqrt(1 - beta2) / 2
  delta < alpha / (2 Rbar)  : ||g||_inf >= sqrt((1-beta2)(alpha^2/4 - Rbar^2 delta^2))
  delta > kappa alpha/(2 rbar): the minimizer is the only fixed point

where Rbar / rbar are the max/min over coordinates of max(|g0_j|, phi).
A striking detail: f dips far below its eventual limit before rebounding.

Run: python demos/04_fixed_points.py
"""

import numpy as np

from adamprecond import AdamHyperParams, InitSpec, make_diagonal, sample_init
from adamprecond.bench import fixed_point_probe, log_spectrum
from adamprecond.optimizers import CONSTANT

d, kappa = 5, 50.0
prob = make_diagonal(d, log_spectrum(d, kappa))
x0 = sample_init(prob, InitSpec(b=1.0, p=0.75, seed=2), mode="uniform_box")
_, g0 = prob.value_and_grad(x0)
phi = 1.0
r_j = np.maximum(np.abs(g0), phi)
r_bar, r_small = float(np.max(r_j)), float(np.min(r_j))

cases = [
    ("delta = 0", AdamHyperParams(alpha=0.3, beta2=0.9, phi=phi,
                                  delta_schedule=CONSTANT, delta=0.0)),
    ("small delta", AdamHyperParams(alpha=0.3, beta2=0.9, phi=phi, delta_schedule=CONSTANT,
                                    delta=0.5 * 0.3 / (2.0 * r_bar))),
    ("large delta", AdamHyperParams(alpha=0.05, beta2=0.99, phi=phi, delta_schedule=CONSTANT,
                                    delta=1.05 * kappa * 0.05 / (2.0 * r_small))),
]

print(f"problem: diagonal, d = {d}, kappa = {kappa:g};  Rbar = {r_bar:.3f}, rbar = {r_small:.3f}")
print()
for name, hp in cases:
    rep = fixed_point_probe(prob, hp, x0, budget=150_000)
    print(f"== {name} (delta = {hp.delta:.4g}) ==")
    print(f"   classification : {rep.classification}  (case '{rep.delta_case}', "
          f"{rep.iterations} iterations)")
    print(f"   terminal f     : {rep.terminal_f:.4e}")
    print(f"   ||g||_1 = {rep.grad_l1:.4e}   ||g||_inf = {rep.grad_inf:.4e}")
    if rep.delta_case in ("zero", "small"):
        norm = rep.grad_l1 if rep.delta_case == "zero" else rep.grad_inf
        print(f"   theorem lower bound on the gradient: {rep.bound_value:.4e} "
              f"({'holds' if rep.satisfied else 'VIOLATED'})")
    else:
        print(f"   only the trivial fixed point exists -> converged to the optimum: "
              f"{rep.satisfied}")
    print()
