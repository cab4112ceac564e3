"""Adam versus GD: both sides of the story, at desk scale.

Part 1 (Adam loses): on the adversarial 2x2 Hessian [[b, b-1], [b-1, b]]
Jacobi preconditioning does nothing (kappa_bar = kappa = 2b - 1), and GD with
alpha = 1.99/lambda_max eventually drops orders of magnitude below every
practical-Adam step size in the grid.

Part 2 (Adam wins): on a diagonal problem with the same condition number,
the momentum-free Adam variant with the theorem schedule reaches the target
in far fewer iterations than GD, because its complexity scales with
kappa_Adam = min(d/log(1/p) + 1, kappa) instead of kappa.

Writes gnuplot-ready curves to demos/out/. Run: python demos/03_adam_vs_gd_race.py
"""

import os

from adamprecond.bench import ExperimentConfig, race
from adamprecond.optimizers import CONSTANT

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

B = 1.0
GRID = [
    {"name": "adam_practical", "label": f"adam_practical_a{a:g}",
     "hyper": {"source": "explicit", "alpha": a * B, "beta1": 0.9, "beta2": 0.999,
               "phi": B, "delta_schedule": CONSTANT, "delta": 1e-8}}
    for a in (1e-1, 1e-2, 1e-3, 1e-4)
]

print("== Part 1: adversarial 2x2, b = 2e3 (kappa = kappa_bar = 3999) ==")
cfg = ExperimentConfig(
    experiment="race_adversarial",
    problem={"generator": "adversarial", "b": 2e3},
    optimizers=[{"name": "gd", "hyper": {"source": "max_stable"}, "label": "gd"}] + GRID,
    seeds=[1],
    max_iter=60_000,
    out=OUT,
    extra={"b": B, "p": 0.75},
)
rows = race(cfg)["rows"]
print(f"{'optimizer':<24} {'final f':>12} {'plateaued':>10}")
for _, label, seed, hit, final_f, plateaued, h in rows:
    print(f"{label:<24} {final_f:>12.3e} {str(bool(plateaued)):>10}")
gd_final = next(r[4] for r in rows if r[1] == "gd")
best_adam = min(r[4] for r in rows if r[1].startswith("adam"))
print(f"-> GD final / best Adam final = {gd_final / best_adam:.2e} "
      "(GD grinds below every Adam plateau)")

print()
print("== Part 2: diagonal problem, kappa = 1e6 ==")
print("Adam's iteration count is governed by kappa_Adam = min(d/log(1/p) + 1, kappa)")
print("= 174.8 here, so it barely moves with kappa while GD scales linearly in it.")
cfg2 = ExperimentConfig(
    experiment="race_diagonal",
    problem={"generator": "diagonal", "d": 50, "kappa": 1e6},
    optimizers=[
        {"name": "gd", "hyper": {"source": "max_stable"}, "label": "gd"},
        {"name": "adam_variant", "hyper": {"source": "theorem"}, "label": "adam_variant_theorem"},
    ],
    seeds=[1],
    max_iter=600_000,
    out=OUT,
    extra={"b": B, "p": 0.75, "eps_rel": 1e-4},
)
rows2 = race(cfg2)["rows"]
print(f"{'optimizer':<24} {'iters to eps':>12} {'final f':>12}")
for _, label, seed, hit, final_f, plateaued, h in rows2:
    shown = hit if hit >= 0 else f">{cfg2.max_iter}"
    print(f"{label:<24} {str(shown):>12} {final_f:>12.3e}")
print(f"(curve files: {OUT}/race_*.dat ; plot with e.g.  gnuplot> set logscale y; "
      "plot 'race_gd_s1.dat' w l, 'race_adam_variant_theorem_s1.dat' w l)")
