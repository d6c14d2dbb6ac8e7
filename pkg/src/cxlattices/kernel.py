"""Dense complex linear algebra primitives.

Everything else in the package sits on these few operations.  The solver and
the eigensolver are deliberately self-contained (partial-pivot elimination,
cyclic Jacobi rotations) so their behavior is easy to audit at the small
dimensions this package targets; numpy supplies array plumbing only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InternalCheckError,
    NotSelfAdjoint,
    SingularMatrix,
)

_EPS = float(np.finfo(np.float64).eps)
_JACOBI_SWEEP_LIMIT = 60


@dataclass(frozen=True)
class Tolerance:
    """Relative/absolute tolerance pair threaded through every numeric check."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self) -> None:
        if not (np.isfinite(self.rel) and self.rel > 0.0):
            raise ValueError("rel must be finite and positive")
        if not (np.isfinite(self.abs) and self.abs >= 0.0):
            raise ValueError("abs must be finite and nonnegative")


DEFAULT_TOL = Tolerance()


def frozen(a: np.ndarray) -> np.ndarray:
    """Return ``a`` locked against writes (value types stay immutable)."""
    a.setflags(write=False)
    return a


def as_matrix(a, *, square: bool = False) -> np.ndarray:
    """Validate array-likes into a finite 2-d complex128 matrix."""
    m = np.array(a, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise DimensionMismatch(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    if square and m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return frozen(m)


def as_vector(v, n: int | None = None) -> np.ndarray:
    """Validate array-likes into a finite 1-d complex128 vector."""
    w = np.array(v, dtype=np.complex128, copy=True)
    if w.ndim != 1 or w.shape[0] == 0:
        raise DimensionMismatch(f"expected a nonempty vector, got shape {w.shape}")
    if not np.all(np.isfinite(w.real)) or not np.all(np.isfinite(w.imag)):
        raise ValueError("vector entries must be finite (no NaN/Inf)")
    if n is not None and w.shape[0] != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {w.shape[0]}")
    return frozen(w)


def fro(a: np.ndarray) -> float:
    """Frobenius norm."""
    return float(np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2)))


def matmul(a, b) -> np.ndarray:
    am = as_matrix(a)
    bm = as_matrix(b)
    if am.shape[1] != bm.shape[0]:
        raise DimensionMismatch(f"cannot multiply {am.shape} by {bm.shape}")
    return frozen(am @ bm)


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return frozen(as_matrix(a).conj().T.copy())


def _lu_factor(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, complex]:
    """Compact LU with partial pivoting: returns (LU, row pivots, permutation sign)."""
    lu = a.astype(np.complex128, copy=True)
    n = lu.shape[0]
    piv = np.arange(n)
    sign = 1.0 + 0.0j
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        piv[k] = p
        if p != k:
            lu[[k, p], :] = lu[[p, k], :]
            sign = -sign
        pivot = lu[k, k]
        if pivot != 0:
            lu[k + 1 :, k] /= pivot
            lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, piv, sign


def _column_scale(a: np.ndarray) -> float:
    return float(np.max(np.sqrt(np.sum(np.abs(a) ** 2, axis=0))))


def solve(a, b, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Solve A X = B by partial-pivot elimination.

    B may be a vector or a matrix of stacked right-hand sides; the result
    matches its shape.  Raises SingularMatrix when a pivot falls at or below
    tol.rel times the largest initial column norm of A.
    """
    am = as_matrix(a, square=True)
    bm = np.array(b, dtype=np.complex128, copy=True)
    vector = bm.ndim == 1
    if vector:
        bm = bm[:, None]
    if bm.ndim != 2 or bm.shape[0] != am.shape[0]:
        raise DimensionMismatch(f"right-hand side shape {bm.shape} does not fit {am.shape}")
    if not np.all(np.isfinite(bm.real)) or not np.all(np.isfinite(bm.imag)):
        raise ValueError("right-hand side entries must be finite (no NaN/Inf)")
    n = am.shape[0]
    lu, piv, _ = _lu_factor(am)
    threshold = tol.rel * _column_scale(am)
    for k in range(n):
        if np.abs(lu[k, k]) <= threshold:
            raise SingularMatrix(f"pivot {np.abs(lu[k, k]):.3e} at column {k} below threshold {threshold:.3e}")
    rhs = bm.copy()
    x = bm
    for k in range(n):
        p = piv[k]
        if p != k:
            x[[k, p], :] = x[[p, k], :]
    for k in range(n - 1):
        x[k + 1 :, :] -= np.outer(lu[k + 1 :, k], x[k, :])
    for k in range(n - 1, -1, -1):
        x[k, :] /= lu[k, k]
        if k:
            x[:k, :] -= np.outer(lu[:k, k], x[k, :])
    residual = fro(am @ x - rhs)
    if residual > tol.rel * fro(am) * max(fro(x), 1.0) + tol.abs:
        raise InternalCheckError(f"solve residual {residual:.3e} exceeds contract bound")
    return frozen(x[:, 0] if vector else x)


def det(a) -> complex:
    """Determinant via the pivoted elimination; singular input yields ~0, never an error."""
    am = as_matrix(a, square=True)
    lu, _, sign = _lu_factor(am)
    return complex(sign * np.prod(np.diag(lu)))


def inverse(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Matrix inverse, via solve against the identity."""
    am = as_matrix(a, square=True)
    return solve(am, np.eye(am.shape[0], dtype=np.complex128), tol)


def hermitian_eig(p, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a self-adjoint matrix by cyclic Jacobi rotations.

    Returns (w, v) with real eigenvalues w ascending and unitary v such that
    p @ v == v @ diag(w).  Raises NotSelfAdjoint when the defect
    ||p - p*|| exceeds tol.rel * ||p|| + tol.abs.
    """
    pm = as_matrix(p, square=True)
    n = pm.shape[0]
    scale = fro(pm)
    if fro(pm - pm.conj().T) > tol.rel * scale + tol.abs:
        raise NotSelfAdjoint(f"self-adjoint defect {fro(pm - pm.conj().T):.3e} beyond tolerance")
    a = 0.5 * (pm + pm.conj().T)
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return frozen(a.real.diagonal().copy()), frozen(v)
    goal = 100.0 * n * _EPS * max(scale, _EPS)
    skip = 0.01 * _EPS * max(scale, _EPS)
    for _ in range(_JACOBI_SWEEP_LIMIT):
        mass = np.abs(a) ** 2
        np.fill_diagonal(mass, 0.0)
        off = float(np.sqrt(np.sum(mass)))
        if off <= goal:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                aij = a[i, j]
                if np.abs(aij) <= skip:
                    continue
                phase = aij / np.abs(aij)
                tau = (a[j, j].real - a[i, i].real) / (2.0 * np.abs(aij))
                t = np.sign(tau) / (np.abs(tau) + np.hypot(1.0, tau)) if tau != 0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                u = (t * c) * phase
                # A <- G* A G and V <- V G with G the (i, j) plane rotation
                col_i = c * a[:, i] - np.conj(u) * a[:, j]
                col_j = u * a[:, i] + c * a[:, j]
                a[:, i], a[:, j] = col_i, col_j
                row_i = c * a[i, :] - u * a[j, :]
                row_j = np.conj(u) * a[i, :] + c * a[j, :]
                a[i, :], a[j, :] = row_i, row_j
                a[i, j] = 0.0
                a[j, i] = 0.0
                a[i, i] = a[i, i].real
                a[j, j] = a[j, j].real
                vcol_i = c * v[:, i] - np.conj(u) * v[:, j]
                vcol_j = u * v[:, i] + c * v[:, j]
                v[:, i], v[:, j] = vcol_i, vcol_j
    else:
        raise InternalCheckError("Jacobi sweep limit reached without convergence")
    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return frozen(w[order]), frozen(v[:, order].copy())


def singular_values(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Singular values, descending, via the Hermitian eigenproblem of A* A."""
    am = as_matrix(a)
    h = adjoint(am) @ am
    h = 0.5 * (h + h.conj().T)
    w, _ = hermitian_eig(h, tol)
    return frozen(np.sqrt(np.clip(w, 0.0, None))[::-1].copy())


def operator_norm(a, tol: Tolerance = DEFAULT_TOL) -> float:
    """Largest singular value."""
    return float(singular_values(a, tol)[0])


def invertibility_margin(a, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """(invertible, margin) where margin = sigma_min / sigma_max.

    A matrix counts as invertible when its margin strictly exceeds tol.rel.
    """
    s = singular_values(a, tol)
    margin = float(s[-1] / s[0]) if s[0] > 0.0 else 0.0
    return margin > tol.rel, margin
