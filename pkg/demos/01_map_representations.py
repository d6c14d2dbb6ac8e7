"""One real-linear map on C^2, four ways to write it down.

A real-linear T: C^n -> C^n is determined by how it acts on real and
imaginary parts.  This walk builds one map, converts it through every
representation, and checks that they all agree pointwise.

Run: python3 demos/01_map_representations.py
"""

import numpy as np

from cxlattices import (
    BlockForm,
    apply,
    convert,
    is_invertible,
    kind_of,
    realify,
)

rng = np.random.default_rng(101)


def show(label, m):
    print(f"{label} =")
    for row in np.atleast_2d(m):
        print("   ", "  ".join(f"{v:+.4f}" for v in row))


# Start from the most explicit description: four real 2x2 blocks with
# T(x + iy) = E1 x + E2 y + i (E3 x + E4 y).
t = BlockForm(
    e1=[[1.0, 0.5], [0.0, 1.0]],
    e2=[[0.0, -1.0], [0.3, 0.0]],
    e3=[[0.2, 0.0], [0.0, -0.2]],
    e4=[[1.0, 0.0], [0.4, 1.0]],
)
print("Block form: T(x + iy) = E1 x + E2 y + i (E3 x + E4 y)")
print(f"kind_of(t) = {kind_of(t)!r}, invertible: {is_invertible(t)}")
print()

# The same map as M z + conj(N z): M carries the complex-linear part,
# N the conjugate-linear part.  N = 0 would mean T is holomorphic.
cp = convert(t, "conjugate_pair")
show("M", cp.m)
show("N", cp.n)
print()

z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
direct = apply(t, z)
via_cp = cp.m @ z + np.conj(cp.n @ z)
print(f"sample z        = {z}")
print(f"apply(block, z) = {direct}")
print(f"M z + conj(N z) = {via_cp}")
assert np.allclose(direct, via_cp, rtol=1e-12, atol=1e-12)
print("block and conjugate-pair evaluations agree.")
print()

# Round-trip through every representation that can hold a general map.
for target in ("conjugate_pair", "block"):
    back = convert(convert(t, target), "block")
    assert np.allclose(apply(back, z), direct, rtol=1e-9, atol=1e-12)
print("block -> conjugate_pair -> block round trip preserves the action.")
print()

# Realification: the same map as a single 2n x 2n real matrix acting on
# stacked (x, y).  Determinant and singular values live here.
r = realify(t)
xy = np.concatenate([z.real, z.imag])
out = r @ xy
assert np.allclose(out[:2] + 1j * out[2:], direct, rtol=1e-12, atol=1e-12)
show("realified 4x4", r)
print(f"det = {np.linalg.det(r):+.6f}  (nonzero, matching is_invertible)")
print()

# Split form exists only for maps that fix the real axis pointwise:
# T(x + iy) = x + A y + i B y.  A generic map is rejected.
from cxlattices import NotInSplitClass

try:
    convert(t, "split")
except NotInSplitClass as exc:
    print(f"convert(t, 'split') raised NotInSplitClass: {exc}")

fixer = BlockForm(
    e1=np.eye(2), e2=[[0.3, 0.0], [0.0, -0.7]], e3=np.zeros((2, 2)), e4=np.eye(2)
)
sp = convert(fixer, "split")
x = rng.standard_normal(2)
assert np.allclose(apply(sp, x + 0j), x, rtol=1e-12, atol=1e-12)
print("a map with E1 = I, E3 = 0 converts to split form and fixes the real axis.")
