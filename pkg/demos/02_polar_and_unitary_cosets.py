"""Polar factorization and the Gram form as a coset label.

Every invertible A factors as A = U P with U unitary and P self-adjoint
positive-definite.  P = sqrt(A* A) depends only on the left coset U(n) A,
so two matrices are unitarily left-equivalent exactly when their Gram
forms match.

Run: python3 demos/02_polar_and_unitary_cosets.py
"""

import numpy as np

from cxlattices import classify, gram, polar, sl_normalize, unitarily_equivalent

rng = np.random.default_rng(202)


def rand_complex(n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def rand_unitary(n):
    q, r = np.linalg.qr(rand_complex(n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


a = rand_complex(3)
u, p = polar(a)
residual = np.linalg.norm(u @ p.matrix - a) / np.linalg.norm(a)
defect = np.linalg.norm(u.conj().T @ u - np.eye(3))

print("A = U P for a random 3x3 matrix:")
print(f"  relative residual |UP - A| / |A| = {residual:.3e}")
print(f"  unitarity defect  |U*U - I|      = {defect:.3e}")
assert residual < 1e-12 and defect < 1e-12
print()

# The Gram form is the coset invariant: multiplying A by any unitary on
# the left leaves A* A untouched.
w = rand_unitary(3)
p2 = gram(w @ a)
print(f"gram(W A) vs gram(A): max entry difference {np.abs(p2.matrix - gram(a).matrix).max():.3e}")

same, witness = unitarily_equivalent(a, w @ a)
assert same
err = np.linalg.norm(witness @ a - w @ a)
print(f"unitarily_equivalent recovers a witness with |T A1 - A2| = {err:.3e}")
print()

# A genuinely different coset is refuted, not just unmatched.
b = rand_complex(3)
same, witness = unitarily_equivalent(a, b)
print(f"against an unrelated matrix: equivalent = {same}, witness = {witness}")
assert not same and witness is None
print()

# classify() reports the classical group memberships with the margins
# behind them, so a near-miss is visible rather than silently rounded.
m = classify(rand_unitary(3))
print("classify(random unitary):")
print(f"  in_gl={m.in_gl} in_sl={m.in_sl} in_u={m.in_u} in_su={m.in_su}")
print(f"  |det|={m.abs_det:.12f}  unitarity defect={m.unitarity_defect:.3e}")
print()

# sl_normalize rescales by a determinant root so the result has det = 1;
# the returned delta is the scalar that was divided out.
g = 2.0 * rand_unitary(2)
s, delta = sl_normalize(g)
print(f"sl_normalize on 2 * unitary: |delta| = {abs(delta):.6f}, det(out) = {np.linalg.det(s):+.6f}")
assert abs(np.linalg.det(s) - 1.0) < 1e-9
assert np.allclose(s * delta, g, rtol=1e-9, atol=1e-12)
print("out * delta reproduces the input, det(out) = 1.")
