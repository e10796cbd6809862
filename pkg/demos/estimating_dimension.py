"""
Estimating the box dimension from counts
========================================

Count primitives over a geometric eps schedule, regress ln N on -ln eps and
compare the slope with the closed form.  The last part walks an exponent
through the point where alpha*delta = 1.
"""

from nestdim import (
    DBeta, NestSpec, UniformCantor, epsilon_schedule, nest_dimension, primitive_count,
    regression_dimension, solve_parameters,
)
from nestdim.boxcount import CountSeries

eps = epsilon_schedule(2.0**-10, 2.0**-22, 10)


def fit(spec, schedule=eps):
    counts = [primitive_count(spec, e) for e in schedule]
    theory = nest_dimension(spec.kind, spec.alpha, spec.base.delta).value
    return regression_dimension(CountSeries(schedule, counts), theory)


# A bi-fractal of dimension 3/4: alpha = 1 over D_1 (base dimension 1/2).
r = fit(NestSpec("centre", 1.0, DBeta(1.0)))
print(f"D_1 nest:     slope {r.slope:.4f}  theory {r.theory_value:.4f}  "
      f"rel. error {r.relative_error:.3%}")

# The same target through the Cantor family: r = 3**(-1/delta).
p = solve_parameters(0.75, 1.0, N=3)
r = fit(NestSpec("centre", p.alpha, UniformCantor(3, p.r)))
print(f"C_3^{p.r:.4f} nest: slope {r.slope:.4f}  theory {r.theory_value:.4f}")

# Outer nests add the dimensions instead of averaging them.
r = fit(NestSpec("outer", 1.0, DBeta(1.0)))
print(f"outer D_1:    slope {r.slope:.4f}  theory {r.theory_value:.4f}")

# Near alpha = 1/delta the content degenerates (a log factor appears), and
# at desk-scale eps the fit is biased upward with curved residuals.
wide = epsilon_schedule(2.0**-5, 2.0**-35, 300)
for alpha in (4 / 5, 4 / 3, 3.0):
    p = solve_parameters(0.75, alpha, strict=False)
    r = fit(NestSpec("centre", alpha, DBeta(p.beta)), wide)
    worst = max(abs(x) for x in r.residuals)
    print(f"alpha={alpha:.3f}: slope {r.slope:.4f}  max |residual| {worst:.4f}")
