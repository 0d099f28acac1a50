"""Self-duality triptych: uniform monotonicity of A and A^{-1} against the
contraction-for-large-distances profile of the reflected resolvent.

The three verdicts obey (A uniformly monotone AND A^{-1} uniformly
monotone) <-> (R_A contraction for large distances).  The clamped-sine
operator sits on the self-dual side; the cubic does not (its inverse is the
cube root, whose modulus decays at infinity).
"""

from mosk import certify, gallery
from mosk.certify import SamplerConfig


def show(name, rep):
    v = rep.verdicts
    print(f"{name}:")
    print(f"  A uniformly monotone:        {v[0]}")
    print(f"  A^-1 uniformly monotone:     {v[1]}")
    print(f"  R_A contraction (large d.):  {v[2]}")
    print(f"  matches the equivalence:     {rep.agrees}")
    print(f"  modulus of A (binned inf):   {[(t, round(val, 5)) for t, val in rep.modulus_primal.table]}")


clamp = gallery.operator("clamp-sin-op")
cfg = SamplerConfig.symmetric(seed=13, sample_count=200_000, dim=1, half_width=50.0)
show("clamp-sin-op", certify.check_selfdual(clamp, cfg))

print()

cubic = gallery.operator("cubic")
cfg = SamplerConfig.symmetric(seed=13, sample_count=200_000, dim=1, half_width=1000.0)
show("cubic", certify.check_selfdual(cubic, cfg))

print()

rot = gallery.operator("rotator")
cfg = SamplerConfig.symmetric(seed=13, sample_count=100_000, dim=2, half_width=50.0)
show("rotator", certify.check_selfdual(rot, cfg))
