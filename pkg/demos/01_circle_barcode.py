"""Vietoris-Rips barcode of a sampled circle.

The degree-1 class of the circle dies at 2*pi/3 = arccos(-1/2): the
scale where an inscribed equilateral triangle can be filled.  A 40-point
grid sample reproduces the value to within the grid spacing.
"""

import math

from steenrips import circle_grid, homological_radius, persistent_barcode, vr_filtration

# 40 equally spaced points on the unit circle, geodesic metric
X = circle_grid(40, radius=1.0)
print(f"sample: {X.n} points, diameter {X.diameter():.4f}")

# expand the filtration up to triangles, out to scale 2.3
K = vr_filtration(X, max_dim=2, max_scale=2.3)
print(f"filtration: {len(K)} simplices over {K.num_values} scales")

barcode = persistent_barcode(K, max_degree=1)
print("\ndegree-1 bars (birth, death):")
for bar in barcode.in_degree(1):
    print(f"  ({bar.birth:.4f}, {bar.death:.4f})  length {bar.length:.4f}")

death = homological_radius(barcode, 1)
print(f"\nfirst death of the circle class : {death:.4f}")
print(f"2*pi/3                          : {2 * math.pi / 3:.4f}")
print(f"grid spacing                    : {2 * math.pi / 40:.4f}")
print(f"neighborhood-scale radius       : {death / 2:.4f}  (pi/3 = {math.pi / 3:.4f})")
