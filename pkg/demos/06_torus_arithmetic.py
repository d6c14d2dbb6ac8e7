"""Points on the torus C^n / L: reduction and group arithmetic.

A torus point is stored as the unique representative inside the
fundamental parallelepiped, together with its generator coordinates in
[0, 1).  Addition and negation act on coordinates and re-reduce, so the
wraparound is exact.

Run: python3 demos/06_torus_arithmetic.py
"""

import numpy as np

from cxlattices import (
    from_generators,
    reduce,
    same_lattice,
    standard_lattice,
    torus_add,
    torus_eq,
    torus_neg,
)

rng = np.random.default_rng(606)

lat = standard_lattice(1)
p = reduce(lat, [0.75 + 0.5j])
q = reduce(lat, [0.5 + 0.75j])
s = torus_add(p, q)
print("on C / Z[i]:")
print(f"  p = {p.rep[0]}, q = {q.rep[0]}")
print(f"  p + q = {s.rep[0]}   (1.25 + 1.25i wrapped back into the unit square)")
assert np.allclose(s.rep, [0.25 + 0.25j])

# Lattice translates collapse to the same point.
shifted = reduce(lat, [0.75 + 0.5j + (3 - 2j)])
assert torus_eq(p, shifted)
print(f"  p + (3 - 2i) reduces to the same point: torus_eq = {torus_eq(p, shifted)}")

# p + (-p) = 0, with the zero point fixed by negation.
zero = torus_add(p, torus_neg(p))
assert np.allclose(zero.coords, 0.0)
print(f"  p + (-p) has coordinates {zero.coords}")
print()

# The same story in C^2 with a skew basis.
g = np.array(
    [[1.0, 0.2 + 0.1j, 1j, 0.0], [0.0, 1.0 + 0.5j, 0.3, 2j]], dtype=complex
)
lat2 = from_generators(g)
z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
pt = reduce(lat2, z)
print("skew lattice in C^2:")
print(f"  coords of a random point: {np.round(pt.coords, 4)}")
assert np.all(pt.coords >= 0.0) and np.all(pt.coords < 1.0)

# The representative differs from z by an exact lattice vector.
diff = z - pt.rep
coeff = np.linalg.solve(lat2.realified, np.concatenate([diff.real, diff.imag]))
print(f"  z - rep has integer generator coordinates: {np.round(coeff, 12)}")
assert np.allclose(coeff, np.rint(coeff), atol=1e-9)

# Reduction is idempotent, and associativity survives the wraparound.
assert torus_eq(pt, reduce(lat2, pt.rep))
a, b, c = (reduce(lat2, rng.standard_normal(2) + 1j * rng.standard_normal(2)) for _ in range(3))
lhs = torus_add(torus_add(a, b), c)
rhs = torus_add(a, torus_add(b, c))
assert torus_eq(lhs, rhs)
print("  reduction is idempotent and addition associates across wraps.")
print()

# Arithmetic refuses to mix different lattices, even equal-looking ones;
# points on a rebuilt equal basis are fine.
rebuilt = from_generators(g.copy())
assert same_lattice(lat2, rebuilt)[0]
assert torus_eq(pt, reduce(rebuilt, z))
print("points reduced over an equal basis compare equal.")

other = standard_lattice(2)
try:
    torus_add(pt, reduce(other, z))
except Exception as exc:
    print(f"mixing lattices raises {type(exc).__name__}: {exc}")
