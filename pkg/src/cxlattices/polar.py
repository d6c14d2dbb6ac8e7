"""Canonical forms for invertible matrices modulo unitaries.

Two invertible A1, A2 lie in the same left unitary coset exactly when
A1* A1 = A2* A2, so the Gram form A* A is a complete invariant for the
quotient of invertible matrices by left multiplication with unitaries.
The polar decomposition A = U P realizes the correspondence concretely:
P is the unique self-adjoint positive-definite square root of the Gram
form and U the unitary direction.  The determinant-one variants reduce
to the same machinery after scaling by a principal root.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InternalCheckError,
    NotInSL,
    NotPositiveDefinite,
    NotSelfAdjoint,
    SingularMatrix,
)
from .kernel import (
    DEFAULT_TOL,
    Tolerance,
    adjoint,
    as_matrix,
    det,
    fro,
    frozen,
    hermitian_eig,
    invertibility_margin,
    singular_values,
    solve,
)

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True, eq=False)
class GramForm:
    """A self-adjoint positive-definite matrix, the invariant of a unitary coset."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        p = np.array(self.matrix, dtype=np.complex128, copy=True)
        if p.ndim != 2 or p.shape[0] != p.shape[1] or p.shape[0] == 0:
            raise DimensionMismatch(f"expected a square matrix, got shape {p.shape}")
        if not np.all(np.isfinite(p.real)) or not np.all(np.isfinite(p.imag)):
            raise ValueError("entries must be finite (no NaN/Inf)")
        tol = DEFAULT_TOL
        defect = fro(p - p.conj().T)
        if defect > tol.rel * max(fro(p), 1.0) + tol.abs:
            raise NotSelfAdjoint(f"self-adjoint defect {defect:.3e} beyond tolerance")
        p = 0.5 * (p + p.conj().T)
        w, _ = hermitian_eig(p, tol)
        if w[0] <= tol.rel * max(float(w[-1]), 0.0):
            raise NotPositiveDefinite(f"smallest eigenvalue {w[0]:.3e} not positive at tolerance")
        object.__setattr__(self, "matrix", frozen(p))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class GroupMembership:
    """Membership flags with the witness quantities behind them."""

    in_gl: bool
    in_sl: bool
    in_u: bool
    in_su: bool
    abs_det: float
    unitarity_defect: float
    det_distance: float


def classify(a, tol: Tolerance = DEFAULT_TOL) -> GroupMembership:
    """Membership in GL, SL, U, SU at the working tolerance.

    in_gl: sigma_min > tol.rel * sigma_max; in_u additionally
    ||A* A - I|| <= tol.rel * n; in_sl additionally |det - 1| <= tol.rel * n;
    in_su = in_u and in_sl.  The implication chain su => u, sl => gl holds
    by construction.
    """
    am = as_matrix(a, square=True)
    n = am.shape[0]
    in_gl, _ = invertibility_margin(am, tol)
    d = det(am)
    defect = fro(adjoint(am) @ am - np.eye(n))
    det_distance = abs(d - 1.0)
    in_u = in_gl and defect <= tol.rel * n
    in_sl = in_gl and det_distance <= tol.rel * n
    return GroupMembership(
        in_gl=in_gl,
        in_sl=in_sl,
        in_u=in_u,
        in_su=in_u and in_sl,
        abs_det=abs(d),
        unitarity_defect=defect,
        det_distance=det_distance,
    )


def gram(a, tol: Tolerance = DEFAULT_TOL) -> GramForm:
    """A* A of an invertible matrix, as a GramForm."""
    am = as_matrix(a, square=True)
    ok, margin = invertibility_margin(am, tol)
    if not ok:
        raise SingularMatrix(f"gram needs an invertible matrix (margin {margin:.3e})")
    p = adjoint(am) @ am
    return GramForm(0.5 * (p + p.conj().T))


def unitarily_equivalent(a1, a2, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, np.ndarray | None]:
    """Whether A2 = T A1 for some unitary T; returns (verdict, T or None).

    Verdict is ||gram(A1) - gram(A2)|| <= tol.rel * (||A1||^2 + ||A2||^2)
    + tol.abs; when it holds the witness T = A2 A1^-1 is computed and its
    unitarity asserted.
    """
    m1 = as_matrix(a1, square=True)
    m2 = as_matrix(a2, square=True)
    if m1.shape != m2.shape:
        raise DimensionMismatch(f"shapes differ: {m1.shape} vs {m2.shape}")
    p1 = gram(m1, tol)
    p2 = gram(m2, tol)
    bound = tol.rel * (fro(m1) ** 2 + fro(m2) ** 2) + tol.abs
    if fro(p1.matrix - p2.matrix) > bound:
        return False, None
    witness = adjoint(solve(adjoint(m1), adjoint(m2), tol))
    if not classify(witness, tol).in_u:
        raise InternalCheckError("gram forms agree but the witness is not unitary")
    return True, frozen(witness)


def spd_sqrt(p: GramForm, tol: Tolerance = DEFAULT_TOL) -> GramForm:
    """The unique self-adjoint positive-definite square root."""
    if not isinstance(p, GramForm):
        p = GramForm(p)
    w, v = hermitian_eig(p.matrix, tol)
    if w[0] <= tol.rel * max(float(w[-1]), 0.0):
        raise NotPositiveDefinite(f"smallest eigenvalue {w[0]:.3e} not positive at tolerance")
    q = (v * np.sqrt(w)) @ v.conj().T
    q = 0.5 * (q + q.conj().T)
    defect = fro(q @ q - p.matrix)
    if defect > 100.0 * tol.rel * max(fro(p.matrix), 1.0) + tol.abs:
        raise InternalCheckError(f"square root residual {defect:.3e} beyond tolerance")
    return GramForm(q)


def _newton_unitary(u0: np.ndarray, tol: Tolerance) -> np.ndarray:
    """Drive an invertible matrix to its unitary polar factor by inverse averaging.

    The iteration U <- (U + U^-*) / 2 keeps singular vectors fixed and maps
    each singular value s to (s + 1/s) / 2, so it converges to the factor
    with all singular values one.
    """
    u = u0
    n = u.shape[0]
    best = np.inf
    for _ in range(60):
        u = 0.5 * (u + adjoint(solve(u, np.eye(n), tol)))
        defect = fro(adjoint(u) @ u - np.eye(n))
        if defect <= 64.0 * n * _EPS or defect >= best:
            break
        best = defect
    return u


def polar(a, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, GramForm]:
    """Polar decomposition A = U P with U unitary and P the canonical Gram root.

    P = spd_sqrt(gram(A)) and U = A P^-1 on the well-conditioned path.  When
    the quotient drifts from unitarity, U is polished by inverse-averaging
    Newton steps and P recomputed as the self-adjoint part of U* A.  Forming
    A* A squares the condition number, so when its positivity gate fires for
    an invertible A the Newton route starts from A itself (scaled to balance
    the extreme singular values).  Both branches are pure functions of the
    input, so results stay deterministic.
    """
    am = as_matrix(a, square=True)
    n = am.shape[0]
    ok, margin = invertibility_margin(am, tol)
    if not ok:
        raise SingularMatrix(f"polar needs an invertible matrix (margin {margin:.3e})")
    try:
        p = spd_sqrt(gram(am, tol), tol)
        u = adjoint(solve(p.matrix, adjoint(am), tol))
        p_out = p
        polish = fro(adjoint(u) @ u - np.eye(n)) > 0.25 * tol.rel * n
    except NotPositiveDefinite:
        sig = singular_values(am, tol)
        u = am / np.sqrt(sig[0] * sig[-1])
        p_out = None
        polish = True
    if polish:
        u = _newton_unitary(u, tol)
        h = adjoint(u) @ am
        p_out = GramForm(0.5 * (h + h.conj().T))
    residual = fro(am - u @ p_out.matrix)
    if residual > tol.rel * max(fro(am), 1.0) + tol.abs:
        raise InternalCheckError(f"polar residual {residual:.3e} beyond tolerance")
    if not classify(u, tol).in_u:
        raise InternalCheckError("polar direction factor failed the unitarity check")
    return frozen(u), p_out


def sl_normalize(a, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, complex]:
    """Scale an invertible matrix to determinant one by its principal root.

    Returns (A / delta, delta) where delta is the principal n-th root of
    det(A), the one with argument in (-pi/n, pi/n].
    """
    am = as_matrix(a, square=True)
    ok, margin = invertibility_margin(am, tol)
    if not ok:
        raise SingularMatrix(f"sl_normalize needs an invertible matrix (margin {margin:.3e})")
    n = am.shape[0]
    d = det(am)
    delta = complex(abs(d) ** (1.0 / n) * np.exp(1j * np.angle(d) / n))
    out = am / delta
    if abs(det(out) - 1.0) > tol.rel * n:
        raise InternalCheckError("determinant after scaling is not one at tolerance")
    return frozen(out), delta


def su_sl_canonical(b, tol: Tolerance = DEFAULT_TOL) -> GramForm:
    """Gram form of a determinant-one matrix; the invariant of its SU coset."""
    bm = as_matrix(b, square=True)
    membership = classify(bm, tol)
    if not membership.in_sl:
        raise NotInSL(f"determinant distance from one is {membership.det_distance:.3e}")
    p = gram(bm, tol)
    if abs(det(p.matrix) - 1.0) > 10.0 * tol.rel * bm.shape[0]:
        raise InternalCheckError("gram form of a determinant-one matrix must have determinant one")
    return p
