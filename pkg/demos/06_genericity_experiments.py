#!/usr/bin/env python3
"""Monte Carlo harness: measuring the genericity statistics at desk scale.

Each experiment samples uniformly from spheres or balls, maps one verified
statistic over the samples, and reports proportions with Wilson intervals.
Kept small here so the script finishes in under a minute; scale the sample
counts up (or use the `garside experiment` command) for tighter intervals.
"""

import garside as g

cfg = g.SampleConfig(n=4, l=10, sample_count=400, seed=271828)
lengths = [10, 20, 40, 80]


def show(title, rows):
    print(title)
    for r in rows:
        print(
            f"  l={r.l:3d}: {r.successes:4d}/{r.samples} = {r.proportion:.3f}"
            f"   95% CI [{r.ci_low:.3f}, {r.ci_high:.3f}]"
        )
    print()


rows = g.run_experiment("rigid-proportion", cfg, lengths)
show("proportion of sphere samples that rigidify non-intrusively:", rows)

rows = g.run_experiment("prefix-rare", cfg, lengths)
show("proportion where P1 prefixes the complement of P5 (should vanish):", rows)
try:
    fit = g.fit_decay(rows)
    print(f"decay fit of log(1-p): slope {fit.slope:.4f}, r^2 {fit.r_squared:.3f}")
except g.UndefinedFitError as exc:
    print(f"decay fit undefined: {exc}")
print()

rows = g.run_experiment("conjugacy-success", cfg, lengths)
show("proportion of ball samples with a certified rigid conjugate:", rows)
fit = g.fit_decay(rows)
print(f"certification failure decays with slope {fit.slope:.5f} (r^2 {fit.r_squared:.3f})")
print()

rows = g.run_experiment(
    "conjugacy-bench",
    g.SampleConfig(n=4, l=50, sample_count=9, seed=3),
    [50, 100, 200, 400],
)
print("median rigidification time per call:")
for r in rows:
    print(f"  l={r.l:3d}: {r.elapsed_ms:7.2f} ms")
print()

print("CSV emission (timings zeroed for byte-stable data files):")
print(g.rows_to_csv(rows[:2]), end="")
