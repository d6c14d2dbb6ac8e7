"""Kernel tests: every numeric primitive is checked against an independent oracle."""

from __future__ import annotations

import numpy as np
import pytest

from cxlattices import (
    DimensionMismatch,
    NotSelfAdjoint,
    SingularMatrix,
    Tolerance,
    adjoint,
    det,
    hermitian_eig,
    inverse,
    invertibility_margin,
    matmul,
    operator_norm,
    singular_values,
    solve,
)


def matmul_oracle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Naive triple-loop product; the reference the fast path must match."""
    n, k = a.shape
    k2, m = b.shape
    assert k == k2
    out = np.zeros((n, m), dtype=complex)
    for i in range(n):
        for j in range(m):
            acc = 0j
            for t in range(k):
                acc += a[i, t] * b[t, j]
            out[i, j] = acc
    return out


def det3_oracle(a: np.ndarray) -> complex:
    """Leibniz expansion for 3x3, written out term by term."""
    return (
        a[0, 0] * a[1, 1] * a[2, 2]
        + a[0, 1] * a[1, 2] * a[2, 0]
        + a[0, 2] * a[1, 0] * a[2, 1]
        - a[0, 2] * a[1, 1] * a[2, 0]
        - a[0, 1] * a[1, 0] * a[2, 2]
        - a[0, 0] * a[1, 2] * a[2, 1]
    )


def random_complex(rng: np.random.Generator, n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = random_complex(rng, n)
    return 0.5 * (a + a.conj().T)


# ---------------------------------------------------------------- matmul


def test_matmul_identity():
    x = np.array([[1 + 2j, 3], [0, 4j]])
    assert np.array_equal(matmul(np.eye(2), x), x)


def test_matmul_imaginary_unit_squares_to_minus_one():
    out = matmul([[1j]], [[1j]])
    assert out[0, 0] == -1 + 0j


def test_matmul_against_triple_loop():
    rng = np.random.default_rng(101)
    for _ in range(25):
        a = random_complex(rng, 3, 4)
        b = random_complex(rng, 4, 2)
        np.testing.assert_allclose(matmul(a, b), matmul_oracle(a, b), rtol=1e-13, atol=1e-13)


def test_matmul_associative():
    rng = np.random.default_rng(102)
    for _ in range(25):
        a, b, c = (random_complex(rng, 4) for _ in range(3))
        np.testing.assert_allclose(matmul(matmul(a, b), c), matmul(a, matmul(b, c)), rtol=1e-12, atol=1e-12)


def test_matmul_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        matmul(np.eye(2), np.eye(3))


# ---------------------------------------------------------------- adjoint


def test_adjoint_conjugates():
    assert adjoint([[1j]])[0, 0] == -1j


def test_adjoint_involution_and_product_reversal():
    rng = np.random.default_rng(103)
    a = random_complex(rng, 4)
    b = random_complex(rng, 4)
    np.testing.assert_array_equal(adjoint(adjoint(a)), a)
    np.testing.assert_allclose(adjoint(matmul(a, b)), matmul(adjoint(b), adjoint(a)), rtol=1e-13)


# ---------------------------------------------------------------- solve / det


def test_solve_identity_returns_rhs():
    b = np.array([1 + 1j, 2, 3j])
    np.testing.assert_allclose(solve(np.eye(3), b), b, rtol=0, atol=0)


def test_solve_scalar():
    np.testing.assert_allclose(solve([[2]], [[4]]), [[2]])


def test_solve_residual_bound():
    rng = np.random.default_rng(104)
    for _ in range(50):
        a = random_complex(rng, 5)
        b = random_complex(rng, 5, 2)
        x = solve(a, b)
        residual = np.linalg.norm(a @ x - b)
        assert residual <= 1e-9 * np.linalg.norm(a) * max(np.linalg.norm(x), 1.0) + 1e-12


def test_solve_matches_numpy():
    rng = np.random.default_rng(105)
    a = random_complex(rng, 6)
    b = random_complex(rng, 6, 3)
    np.testing.assert_allclose(solve(a, b), np.linalg.solve(a, b), rtol=1e-9, atol=1e-12)


def test_solve_singular_raises():
    with pytest.raises(SingularMatrix):
        solve([[1, 1], [1, 1]], [1, 2])


def test_solve_near_singular_raises():
    a = np.array([[1.0, 0.0], [0.0, 1e-15]])
    with pytest.raises(SingularMatrix):
        solve(a, [1, 1])


def test_inverse_roundtrip():
    rng = np.random.default_rng(106)
    a = random_complex(rng, 4)
    np.testing.assert_allclose(a @ inverse(a), np.eye(4), rtol=0, atol=1e-12)


def test_det_identity_and_diagonal():
    assert det(np.eye(4)) == pytest.approx(1.0)
    assert det(np.diag([2, 3j])) == pytest.approx(6j)


def test_det_against_leibniz():
    rng = np.random.default_rng(107)
    for _ in range(50):
        a = random_complex(rng, 3)
        assert det(a) == pytest.approx(det3_oracle(a), rel=1e-12)


def test_det_multiplicative():
    rng = np.random.default_rng(108)
    for _ in range(25):
        a = random_complex(rng, 4)
        b = random_complex(rng, 4)
        assert det(a @ b) == pytest.approx(det(a) * det(b), rel=1e-9)


def test_det_singular_is_tiny():
    a = np.array([[1.0, 2.0], [2.0, 4.0]])
    assert abs(det(a)) < 1e-14


# ---------------------------------------------------------------- hermitian_eig


def test_hermitian_eig_diagonal():
    w, v = hermitian_eig(np.diag([4.0, 1.0]))
    np.testing.assert_allclose(w, [1.0, 4.0], rtol=0, atol=0)
    np.testing.assert_allclose(np.abs(v), [[0, 1], [1, 0]], atol=1e-15)


def test_hermitian_eig_2x2_characteristic_polynomial():
    # det([[2-t, 1], [1, 2-t]]) = t^2 - 4t + 3 = (t-1)(t-3), roots frozen below
    w, v = hermitian_eig([[2.0, 1.0], [1.0, 2.0]])
    np.testing.assert_allclose(w, [1.0, 3.0], rtol=1e-14)
    p = np.array([[2.0, 1.0], [1.0, 2.0]])
    np.testing.assert_allclose(p @ v, v @ np.diag(w), atol=1e-13)


def test_hermitian_eig_reconstruction_random():
    rng = np.random.default_rng(109)
    for n in (1, 2, 3, 5, 8):
        for _ in range(10):
            p = random_hermitian(rng, n)
            w, v = hermitian_eig(p)
            scale = max(np.linalg.norm(p), 1e-300)
            assert np.linalg.norm(p @ v - v @ np.diag(w)) <= 1e-10 * scale
            assert np.linalg.norm(v.conj().T @ v - np.eye(n)) <= 1e-10
            assert np.all(np.diff(w) >= -1e-14 * scale)


def test_hermitian_eig_matches_numpy_eigvalsh():
    rng = np.random.default_rng(110)
    for _ in range(20):
        p = random_hermitian(rng, 6)
        w, _ = hermitian_eig(p)
        np.testing.assert_allclose(w, np.linalg.eigvalsh(p), rtol=1e-10, atol=1e-10)


def test_hermitian_eig_rejects_non_selfadjoint():
    with pytest.raises(NotSelfAdjoint):
        hermitian_eig([[0.0, 1.0], [0.0, 0.0]])


# ---------------------------------------------------------------- singular values


def test_singular_values_identity():
    np.testing.assert_allclose(singular_values(np.eye(3)), [1.0, 1.0, 1.0], atol=1e-14)


def test_singular_values_nilpotent():
    np.testing.assert_allclose(singular_values([[0.0, 2.0], [0.0, 0.0]]), [2.0, 0.0], atol=1e-14)


def test_singular_values_descending_and_adjoint_invariant():
    rng = np.random.default_rng(111)
    for _ in range(10):
        a = random_complex(rng, 4)
        s = singular_values(a)
        assert np.all(np.diff(s) <= 1e-12)
        np.testing.assert_allclose(s, singular_values(a.conj().T), rtol=1e-10, atol=1e-10)


def test_largest_singular_value_dominates_random_directions():
    rng = np.random.default_rng(112)
    a = random_complex(rng, 3)
    s1 = operator_norm(a)
    for _ in range(1000):
        z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        z /= np.linalg.norm(z)
        assert np.linalg.norm(a @ z) <= s1 * (1 + 1e-10)


def test_singular_values_match_numpy_svd():
    rng = np.random.default_rng(113)
    for _ in range(10):
        a = random_complex(rng, 5, 3)
        np.testing.assert_allclose(singular_values(a), np.linalg.svd(a, compute_uv=False), rtol=1e-9, atol=1e-9)


# ---------------------------------------------------------------- misc


def test_invertibility_margin():
    ok, margin = invertibility_margin(np.eye(3))
    assert ok and margin == pytest.approx(1.0)
    ok, margin = invertibility_margin([[1.0, 1.0], [1.0, 1.0]])
    assert not ok and margin < 1e-12


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rel=0.0)
    with pytest.raises(ValueError):
        Tolerance(abs=-1.0)


def test_nan_rejected():
    with pytest.raises(ValueError):
        matmul([[np.nan]], [[1.0]])
