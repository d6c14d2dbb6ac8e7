"""Deciding unitary equivalence of Gaussian-integer lattices, up to a bound.

A1(Z[i]^n) and A2(Z[i]^n) are equivalent when A2 = T A1 B^-1 for some
unitary T and Gaussian-unimodular B.  Cheap invariants (covolume, short
vector spectrum) refute fast; otherwise a bounded search over coordinate
changes B of entry height <= H either certifies a witness or reports
honestly that the bound was too small.

Run: python3 demos/05_equivalence_search.py
"""

import numpy as np

from cxlattices import (
    GaussianUnimodular,
    lattice_equivalent,
    short_vectors,
    sigma_membership,
)

rng = np.random.default_rng(505)


def rand_unitary(n):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# ------------------------------------------------------- planted witness
b = GaussianUnimodular((((1, 0), (1, 0)), ((1, 0), (2, 0))))  # [[1,1],[1,2]], det 1
w = rand_unitary(2)
a1 = np.array([[2.0, 0.3], [0.0, 1.0]], dtype=complex)
a2 = w @ a1 @ b.matrix

verdict = lattice_equivalent(a1, a2)
print(f"planted pair: status = {verdict.status} at height bound {verdict.bound}")
t, bw = verdict.witness
assert np.allclose(t @ a1, a2 @ bw.inverse_matrix(), rtol=1e-9, atol=1e-9)
print(f"  witness unitary defect |T*T - I| = {np.linalg.norm(t.conj().T @ t - np.eye(2)):.3e}")
print(f"  witness B entries: {bw.entries}")
print("  T A1 = A2 B^-1 verified; note B need not equal the planted one,")
print("  any Sigma element moving one basis onto the other is accepted.")
print()

# --------------------------------------------------- invariant refuters
verdict = lattice_equivalent(np.eye(1), 2.0 * np.eye(1))
name, v1, v2 = verdict.refuter
print(f"scaling refuted: {verdict.status}, {name} {v1} vs {v2}")

# Equal covolume but different geometry: diag(2, 1/2) has a vector of
# squared length 1/4 that Z[i]^2 cannot match.
stretched = np.diag([2.0, 0.5]).astype(complex)
verdict = lattice_equivalent(np.eye(2), stretched)
name, v1, v2 = verdict.refuter
print(f"covolume tie broken by geometry: {verdict.status}, refuter = {name}")
spec = short_vectors(stretched, 2.0)
print(f"  shortest squared lengths of the stretched lattice: {spec.norms[:4]}")
print()

# ------------------------------------------------- honest undecidability
# B = [[1, 3], [0, 1]] lies in Sigma, so the lattice equals Z[i]^2 and a
# witness exists, but the smallest one has entry height 3.  Every unitary
# element of Sigma is a signed permutation with unit phases, so no height
# <= 2 coordinate change can work; the search must escalate to find it.
tall = np.array([[1.0, 3.0], [0.0, 1.0]], dtype=complex)
assert sigma_membership(tall).entries == (((1, 0), (3, 0)), ((0, 0), (1, 0)))
for height in (1, 2, 3):
    verdict = lattice_equivalent(np.eye(2), tall, height=height)
    print(f"height {height}: {verdict.status}")
assert verdict.status == "Equivalent"
print("the verdict flips only once the bound actually covers a witness;")
print("below that the answer is UndecidedUpToBound, never a guess.")
