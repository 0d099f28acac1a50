"""Tour of the operator gallery and the resolvent identity layer.

Every operator is carried by its resolvent oracle J = (Id + A)^{-1}; the
reflected resolvent R = 2J - Id, the inverse (via J_{A^{-1}} = Id - J_A),
and graph samples (via z -> (Jz, z - Jz)) all derive from it.
"""

import numpy as np

from mosk import core, gallery

rng = np.random.default_rng(0)

print("registry:")
for name in gallery.names():
    e = gallery.entry(name)
    dim = "parametric" if e.parametric_dim else e.default_dim
    print(f"  {name:<18} dim={dim:<10} kinds={','.join(e.kinds)}")

print("\ncubic operator (A x = x^3, Cardano resolvent):")
A = gallery.operator("cubic")
for x in (0.0, 2.0, 10.0, -10.0):
    print(f"  J({x:6.1f}) = {core.resolvent(A, x):> .6f}   "
          f"R({x:6.1f}) = {core.reflected_resolvent(A, x):> .6f}")

print("\nMinty parametrization: z -> (J z, z - J z) lands on the graph of A")
for z in (2.0, -7.0, 0.3):
    g = core.minty_sample(A, z)
    print(f"  z={z:6.2f}: x={g.x:+.6f}  x*={g.xstar:+.6f}  x^3={g.x**3:+.6f}")

print("\nreflection duality R_(A^-1) = -R_A (pointwise, to rounding):")
xs = rng.uniform(-20, 20, size=200)
gap = core.reflected_resolvent(core.invert(A), xs) + core.reflected_resolvent(A, xs)
print(f"  max |R_inv + R| over 200 points: {np.max(np.abs(gap)):.3e}")

print("\nfirm nonexpansiveness of resolvents (sampled):")
for name, dim in [("cubic", None), ("rotator", None), ("clamp-sin-op", None)]:
    B = gallery.operator(name, dim)
    x = rng.uniform(-20, 20, size=(5000, B.dim))
    y = rng.uniform(-20, 20, size=(5000, B.dim))
    jx, jy = B.resolvent(x), B.resolvent(y)
    viol = (
        np.sum((jx - jy) ** 2, axis=1)
        + np.sum(((x - jx) - (y - jy)) ** 2, axis=1)
        - np.sum((x - y) ** 2, axis=1)
    )
    print(f"  {name:<14} max violation = {viol.max():.3e}")

print("\nbuilding an operator from a nonexpansive map (T = -R_A):")
T = gallery.mapping("clamp-sin-map")
A2 = core.from_neg_reflected(T)
print(f"  J(pi/2) = {core.resolvent(A2, np.pi / 2):.6f}"
      f"  (expected (pi/2 - 1)/2 = {(np.pi / 2 - 1) / 2:.6f})")
