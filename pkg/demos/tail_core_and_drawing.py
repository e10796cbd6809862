"""
Tail, core and a drawn nest
===========================

How a centre nest is discretised at resolution eps, and what it looks like.
Run from anywhere; SVG files land in the current directory.
"""

import numpy as np

from nestdim import DBeta, NestSpec, Singleton, UniformCantor, generate_scene, ring_radii
from nestdim.render import default_eps, render
from nestdim.split import split_indices

# The radii k**-alpha crowd together near 0.  At resolution eps only the first
# m1 of them are more than 2*eps apart; the rest are replaced by m2 rings
# spaced exactly 2*eps.
s = split_indices(1.0, 1 / 40)
print(s)

tail, core = ring_radii(NestSpec("centre", 1.0, Singleton()), 1 / 40)
print("tail radii:", np.round(tail, 4))
print("core radii:", np.round(core, 4))

# m1 and m2 both grow like eps**(-1/(1+alpha)).
for eps in 2.0 ** -np.arange(10, 31, 5):
    s = split_indices(1.0, eps)
    print(f"eps=2^{np.log2(eps):.0f}  m1={s.m1:6d}  m2={s.m2:6d}  "
          f"m1*eps^(1/2)={s.m1 * eps**0.5:.3f}")

# Each ring carries a copy of the base set.  Stroking every primitive with
# width 2*eps and round caps draws the eps-sausage directly.
for name, base in [("dots", Singleton()), ("bifractal", DBeta(1.0)),
                   ("cantor", UniformCantor(3, 1 / 9))]:
    scene = generate_scene(NestSpec("centre", 1.0, base), default_eps())
    with open(f"nest_{name}.svg", "w") as fh:
        fh.write(render(scene))
    print(f"nest_{name}.svg: {len(scene.points)} points, {len(scene.arcs)} arcs")
