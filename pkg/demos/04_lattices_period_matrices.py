"""Full lattices in C^n, basis changes, and the period-matrix normal form.

A full lattice is generated by 2n vectors that are linearly independent
over the reals.  Different generator matrices can present the same
lattice; the integral coordinate change between them is the witness.
Every basis can be pivoted and rescaled into the shape [I | Z] with Z a
period matrix (invertible imaginary part).

Run: python3 demos/04_lattices_period_matrices.py
"""

import numpy as np

from cxlattices import (
    covolume,
    from_generators,
    normalize_to_Lstarstar,
    permute_to_L1,
    rank_margin,
    same_lattice,
    standard_lattice,
    to_split_form,
    apply,
)

rng = np.random.default_rng(404)

# ------------------------------------------------------------- validation
std = standard_lattice(2)
print(f"standard lattice Z[i]^2: covolume = {covolume(std)}, rank margin = {rank_margin(std.g):.3f}")

# Collapse two generators onto each other and the rank margin vanishes.
bad = std.g.copy()
bad[:, 2] = bad[:, 0]
print(f"after overwriting a generator: rank margin = {rank_margin(bad):.3e}")
print()

# ---------------------------------------------------------- same lattice
# Shear the basis by an integral unimodular coordinate change: the column
# lattice is untouched, and same_lattice recovers the change exactly.
x = np.eye(4, dtype=np.int64)
x[0, 2] = 3
x[1, 3] = -2
sheared = from_generators(std.g @ x)
ok, witness = same_lattice(std, sheared)
print(f"sheared basis generates the same lattice: {ok}")
print("recovered integral witness:")
print(witness)
assert ok and np.array_equal(witness, x)

# An index-2 sublattice is rejected (the coordinate change has det 2).
doubled = std.g.copy()
doubled[:, 0] *= 2.0
ok, witness = same_lattice(std, from_generators(doubled))
print(f"doubling one generator: same lattice = {ok} (proper sublattice)")
assert not ok
print()

# ------------------------------------------------ normal form [I | Z]
# Random real-rank-6 generators for a lattice in C^3, then the two-step
# pipeline: pivot C-independent generators to the front, divide out the
# first block.
g = rng.standard_normal((3, 6)) + 1j * rng.standard_normal((3, 6))
lat = from_generators(g)
print(f"random lattice in C^3: covolume = {covolume(lat):.6f}")

pivoted, perm = permute_to_L1(lat)
a, pm = normalize_to_Lstarstar(pivoted)
print(f"pivot order {perm}; after dividing out the first block:")
print(f"  first block residual |A G1 - I| = {np.linalg.norm(a @ pivoted.g[:, :3] - np.eye(3)):.3e}")
print(f"  Im(Z) smallest singular value  = {np.linalg.svd(pm.z.imag, compute_uv=False)[-1]:.4f}")

normalized = from_generators(np.hstack([np.eye(3), pm.z]))
assert np.allclose(normalized.g, a @ pivoted.g, rtol=1e-9, atol=1e-12)
print("  normalized generators equal [I | Z] exactly.")
print()

# The period matrix doubles as a real-linear map x + Re(Z) y + i Im(Z) y,
# the split-class map that carries Z[i]^n onto the normalized lattice.
sp = to_split_form(pm)
v = rng.integers(-3, 4, size=3) + 1j * rng.integers(-3, 4, size=3)
image = apply(sp, v.astype(np.complex128))
expected = normalized.g @ np.concatenate([v.real, v.imag])
assert np.allclose(image, expected, rtol=1e-9, atol=1e-12)
print("split-form map sends Gaussian-integer points onto the [I | Z] lattice.")
