"""Majorization, the normalized form z + conj(E z), and a 2x2 surprise.

A map M z + conj(N z) majorizes when its complex-linear part dominates:
opnorm(N M^-1) < 1.  Such a map factors as G o (z + conj(E z)) with
G = M complex-linear and E = conj(M)^-1 N.  In one variable the two
coefficient ratios coincide, so majorization forces |E| < 1.  In two or
more variables they are conjugated by different sides of M and can
disagree: a majorizing map may normalize to an expanding E.

Run: python3 demos/03_majorization_normal_form.py
"""

import numpy as np

from cxlattices import (
    ConjugatePairForm,
    apply,
    contraction_check,
    domination_ratio,
    majorizes,
    normalize_post_composition,
    operator_norm,
)

rng = np.random.default_rng(303)


def rand_complex(n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def rand_contraction(n, norm):
    m = rand_complex(n)
    return m * (norm / operator_norm(m))


# Build a majorizing map directly: pick M, then squeeze N under it.
m = rand_complex(2)
t = ConjugatePairForm(m, rand_contraction(2, 0.6) @ m)
ratio = domination_ratio(t)
print(f"constructed map: opnorm(N M^-1) = {ratio:.4f} < 1, majorizes = {majorizes(t)}")

g, normal = normalize_post_composition(t)
z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
recomposed = g @ apply(normal, z)
assert np.allclose(recomposed, apply(t, z), rtol=1e-9, atol=1e-12)
print("T = G o (z + conj(E z)) verified on a sample point.")
print(f"opnorm(E) = {operator_norm(normal.e):.4f}, contraction_check = {contraction_check(normal)}")
print()

# Conversely, planting a contractive E keeps it recoverable: with
# N = conj(M) E the normalization returns E exactly.
e = rand_contraction(2, 0.35)
planted = ConjugatePairForm(m, np.conj(m) @ e)
_, back = normalize_post_composition(planted)
print(f"planted opnorm(E) = {operator_norm(e):.4f}, recovered difference = {np.abs(back.e - e).max():.3e}")
assert contraction_check(back)
print()

# The surprise: majorization does NOT force a contractive E for n >= 2.
# Search a seeded stream for a majorizing map whose normalized factor
# expands some direction.
found = None
for trial in range(1, 200):
    mm = rand_complex(2)
    cand = ConjugatePairForm(mm, rand_contraction(2, 0.9) @ mm)
    assert majorizes(cand)
    _, nf = normalize_post_composition(cand)
    if not contraction_check(nf):
        found = (trial, cand, nf)
        break

assert found is not None
trial, cand, nf = found
print(f"trial {trial}: majorizing map with domination ratio {domination_ratio(cand):.4f}")
print(f"  but opnorm(E) = {operator_norm(nf.e):.4f} >= 1 after normalization")
print("  majorization bounds N M^-1; the normalized factor is conj(M)^-1 N.")
print("  For n = 1 both reduce to |N| / |M|; for n >= 2 they differ.")
print()

# Sanity on the scalar case: any 1x1 majorizing map has |E| < 1.
for _ in range(200):
    mm = rand_complex(1)
    cand = ConjugatePairForm(mm, rand_contraction(1, 0.95) @ mm)
    _, nf = normalize_post_composition(cand)
    assert contraction_check(nf)
print("200 random 1x1 majorizing maps all normalized to |E| < 1, as forced.")
