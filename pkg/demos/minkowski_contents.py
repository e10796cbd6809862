"""
Minkowski contents from exact sausage lengths
=============================================

On the line the eps-sausage of finitely many points and intervals can be
measured exactly by sorting and merging.  Dividing by gamma * eps**(1-delta)
gives the normalised content, which we compare with the closed forms.
"""

import numpy as np

from nestdim import (
    UniformCantor, cantor_minkowski_contents, cantor_segments, e_alpha_content,
    normalized_content_ratio, sausage_measure_1d, split_indices,
)

# E_1 = {1, 1/2, 1/3, ...}.  Past the m1-th term the gaps are below 2*eps, so
# the rest of the sequence has the sausage of the interval [0, (m1+1)**-1].
for k in (10, 15, 20, 25):
    eps = 2.0**-k
    m1 = split_indices(1.0, eps).m1
    items = list(np.arange(1, m1 + 1, dtype=float) ** -1) + [(0.0, 1 / (m1 + 1))]
    ratio = normalized_content_ratio(sausage_measure_1d(items, eps), 1, 0.5, eps)
    print(f"eps=2^-{k}: A = {ratio:.5f}")
print(f"closed form: {e_alpha_content(1.0):.5f}")

# The middle-thirds Cantor set is not Minkowski measurable: the ratio keeps
# oscillating between the lower and upper content as eps shrinks.
upper, lower = cantor_minkowski_contents(2, 1 / 3)
c = UniformCantor(2, 1 / 3)
segs = cantor_segments(2, 1 / 3, c.gap_ratio * 3.0**-12 * 1.000001)
for eps in np.geomspace(1e-2, 1e-5, 13):
    a = normalized_content_ratio(sausage_measure_1d(segs, eps), 1, c.delta, eps)
    bar = "#" * int(200 * (a - lower + 0.01))
    print(f"eps={eps:.1e}  A={a:.4f}  {bar}")
print(f"lower {lower:.4f}, upper {upper:.4f}")
