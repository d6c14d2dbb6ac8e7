"""Real-linear maps on C^n in four interchangeable matrix representations.

A map T that is additive and commutes with real (not complex) scalars is
determined by how it mixes real and imaginary parts.  Four descriptions of
the same object show up, each convenient for a different question:

* ``BlockForm``      -- T(x + iy) = E1 x + E2 y + i (E3 x + E4 y) with four
  real n-by-n coefficient blocks; the fully general description.
* ``SplitForm``      -- T(x + iy) = x + A y + i B y; the shape a lattice
  basis takes after column normalization.  T is invertible exactly when B is.
* ``ConjugatePairForm`` -- T(z) = M z + conj(N z) with complex M, N; the
  algebraically pleasant description, where strict domination of the
  conjugate part (``majorizes``) certifies invertibility.
* ``NormalizedForm`` -- T(z) = z + conj(E z); what remains of a dominated
  map after dividing out its complex-linear part.

Conversions route through the conjugate-pair form and are validated at
construction by evaluating both sides on the 2n standard basis vectors of
C^n over R; a mismatch raises InternalCheckError rather than returning
silently wrong coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    DimensionMismatch,
    InternalCheckError,
    NotInSplitClass,
    SingularM,
)
from .kernel import (
    DEFAULT_TOL,
    Tolerance,
    adjoint,
    fro,
    frozen,
    hermitian_eig,
    invertibility_margin,
    operator_norm,
    solve,
)

_GRAY_ZONE = 10.0  # margins within this factor of a threshold count as boundary

BLOCK = "block"
SPLIT = "split"
CONJUGATE_PAIR = "conjugate_pair"
NORMALIZED = "normalized"
KINDS = (BLOCK, SPLIT, CONJUGATE_PAIR, NORMALIZED)


def _real_square(x, n: int | None = None) -> np.ndarray:
    c = np.array(x, dtype=np.complex128, copy=True)
    if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] == 0:
        raise DimensionMismatch(f"expected a square coefficient block, got shape {c.shape}")
    if not np.all(np.isfinite(c.real)) or not np.all(np.isfinite(c.imag)):
        raise ValueError("coefficients must be finite (no NaN/Inf)")
    if np.any(c.imag != 0.0):
        raise ValueError("coefficient block must be real (imaginary parts exactly zero)")
    if n is not None and c.shape[0] != n:
        raise DimensionMismatch(f"coefficient blocks disagree: {c.shape[0]} vs {n}")
    return frozen(c.real.copy())


def _complex_square(x, n: int | None = None) -> np.ndarray:
    c = np.array(x, dtype=np.complex128, copy=True)
    if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] == 0:
        raise DimensionMismatch(f"expected a square coefficient block, got shape {c.shape}")
    if not np.all(np.isfinite(c.real)) or not np.all(np.isfinite(c.imag)):
        raise ValueError("coefficients must be finite (no NaN/Inf)")
    if n is not None and c.shape[0] != n:
        raise DimensionMismatch(f"coefficient blocks disagree: {c.shape[0]} vs {n}")
    return frozen(c)


@dataclass(frozen=True, eq=False)
class BlockForm:
    """T(x + iy) = E1 x + E2 y + i (E3 x + E4 y), blocks real n-by-n."""

    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    e4: np.ndarray

    def __post_init__(self) -> None:
        e1 = _real_square(self.e1)
        n = e1.shape[0]
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", _real_square(self.e2, n))
        object.__setattr__(self, "e3", _real_square(self.e3, n))
        object.__setattr__(self, "e4", _real_square(self.e4, n))

    @property
    def dim(self) -> int:
        return self.e1.shape[0]


@dataclass(frozen=True, eq=False)
class SplitForm:
    """T(x + iy) = x + A y + i B y, A and B real n-by-n."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        a = _real_square(self.a)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", _real_square(self.b, a.shape[0]))

    @property
    def dim(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True, eq=False)
class ConjugatePairForm:
    """T(z) = M z + conj(N z), M and N complex n-by-n."""

    m: np.ndarray
    n: np.ndarray

    def __post_init__(self) -> None:
        m = _complex_square(self.m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", _complex_square(self.n, m.shape[0]))

    @property
    def dim(self) -> int:
        return self.m.shape[0]


@dataclass(frozen=True, eq=False)
class NormalizedForm:
    """T(z) = z + conj(E z), E complex n-by-n."""

    e: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", _complex_square(self.e))

    @property
    def dim(self) -> int:
        return self.e.shape[0]


RealLinearMap = Union[BlockForm, SplitForm, ConjugatePairForm, NormalizedForm]


def kind_of(t: RealLinearMap) -> str:
    if isinstance(t, BlockForm):
        return BLOCK
    if isinstance(t, SplitForm):
        return SPLIT
    if isinstance(t, ConjugatePairForm):
        return CONJUGATE_PAIR
    if isinstance(t, NormalizedForm):
        return NORMALIZED
    raise TypeError(f"not a real-linear map representation: {type(t).__name__}")


def _coerce_points(z, n: int) -> tuple[np.ndarray, bool]:
    w = np.array(z, dtype=np.complex128, copy=True)
    vector = w.ndim == 1
    if vector:
        w = w[:, None]
    if w.ndim != 2 or w.shape[0] != n:
        raise DimensionMismatch(f"expected points in C^{n}, got shape {np.shape(z)}")
    if not np.all(np.isfinite(w.real)) or not np.all(np.isfinite(w.imag)):
        raise ValueError("points must be finite (no NaN/Inf)")
    return w, vector


def apply(t: RealLinearMap, z) -> np.ndarray:
    """Evaluate the map at one point or columnwise at a stack of points."""
    w, vector = _coerce_points(z, t.dim)
    x, y = w.real, w.imag
    if isinstance(t, BlockForm):
        out = (t.e1 @ x + t.e2 @ y) + 1j * (t.e3 @ x + t.e4 @ y)
    elif isinstance(t, SplitForm):
        out = (x + t.a @ y) + 1j * (t.b @ y)
    elif isinstance(t, ConjugatePairForm):
        out = t.m @ w + np.conj(t.n @ w)
    elif isinstance(t, NormalizedForm):
        out = w + np.conj(t.e @ w)
    else:
        raise TypeError(f"not a real-linear map representation: {type(t).__name__}")
    return frozen(out[:, 0] if vector else out)


def _real_basis(n: int) -> np.ndarray:
    return np.hstack([np.eye(n), 1j * np.eye(n)])


def realify(t: RealLinearMap) -> np.ndarray:
    """The 2n-by-2n real matrix of T acting on (x, y) coordinates.

    Columns are the images of the standard basis of C^n over R, so for a
    BlockForm this is exactly [[E1, E2], [E3, E4]].
    """
    w = apply(t, _real_basis(t.dim))
    return frozen(np.vstack([w.real, w.imag]))


def _check_apply_equal(t_in: RealLinearMap, t_out: RealLinearMap, tol: Tolerance, gl: np.ndarray | None = None) -> None:
    w_in = apply(t_in, _real_basis(t_in.dim))
    w_out = apply(t_out, _real_basis(t_out.dim))
    if gl is not None:
        w_out = gl @ w_out
    scale = max(fro(w_in), fro(w_out), 1.0)
    defect = fro(w_in - w_out)
    if defect > tol.rel * scale + tol.abs:
        raise InternalCheckError(f"conversion apply-equality defect {defect:.3e} at scale {scale:.3e}")


def _to_conjugate_pair(t: RealLinearMap) -> ConjugatePairForm:
    if isinstance(t, ConjugatePairForm):
        return t
    if isinstance(t, BlockForm):
        m = 0.5 * ((t.e1 + t.e4) + 1j * (t.e3 - t.e2))
        n = 0.5 * ((t.e1 - t.e4) - 1j * (t.e2 + t.e3))
        return ConjugatePairForm(m, n)
    if isinstance(t, SplitForm):
        eye = np.eye(t.dim)
        m = 0.5 * ((eye + t.b) - 1j * t.a)
        n = 0.5 * ((eye - t.b) - 1j * t.a)
        return ConjugatePairForm(m, n)
    if isinstance(t, NormalizedForm):
        return ConjugatePairForm(np.eye(t.dim, dtype=np.complex128), t.e)
    raise TypeError(f"not a real-linear map representation: {type(t).__name__}")


def convert(t: RealLinearMap, target: str, tol: Tolerance = DEFAULT_TOL) -> RealLinearMap:
    """Re-express the map in another representation.

    Targets "block", "split" and "conjugate_pair" return a map equal to the
    input (checked on the 2n real basis directions).  Target "normalized"
    returns the canonical factor of T = M o (z + conj(E z)): the result
    equals the input only when M = I; use normalize_post_composition to
    keep the complex-linear factor M.  Raises NotInSplitClass when the
    split structure is absent and SingularM when the normalized target
    needs to invert a singular M.
    """
    if target not in KINDS:
        raise ValueError(f"unknown representation {target!r}; expected one of {KINDS}")
    if kind_of(t) == target:
        return t
    cp = _to_conjugate_pair(t)
    if target == CONJUGATE_PAIR:
        out: RealLinearMap = cp
    elif target == BLOCK:
        s, d = cp.m + cp.n, cp.m - cp.n
        out = BlockForm(s.real, -s.imag, d.imag, d.real)
    elif target == SPLIT:
        s, d = cp.m + cp.n, cp.m - cp.n
        scale = 1.0 + fro(cp.m) + fro(cp.n)
        if fro(s.real - np.eye(cp.dim)) > tol.rel * scale + tol.abs or fro(d.imag) > tol.rel * scale + tol.abs:
            raise NotInSplitClass("map does not fix real parts (needs E1 = I and E3 = 0)")
        out = SplitForm(-s.imag, d.real)
    else:  # NORMALIZED
        ok, _ = invertibility_margin(cp.m, tol)
        if not ok:
            raise SingularM("complex-linear part M is singular; cannot normalize")
        out = NormalizedForm(solve(np.conj(cp.m), cp.n, tol))
    if target == NORMALIZED:
        _check_apply_equal(t, out, tol, gl=cp.m)
    else:
        _check_apply_equal(t, out, tol)
    return out


def is_invertible(t: RealLinearMap, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Invertibility of T as a map R^2n -> R^2n at the working margin.

    True when sigma_min(realify(T)) > tol.rel * sigma_max.  For a SplitForm
    the criterion "B invertible" is computed as well; the two verdicts must
    agree unless both margins sit inside the gray zone around their
    thresholds, in which case the realified verdict stands.
    """
    ok, margin = invertibility_margin(realify(t), tol)
    if isinstance(t, SplitForm):
        ok_b, margin_b = invertibility_margin(t.b.astype(np.complex128), tol)
        if ok_b != ok:
            decisive = lambda r: r > _GRAY_ZONE * tol.rel or r < tol.rel / _GRAY_ZONE
            if decisive(margin) and decisive(margin_b):
                raise InternalCheckError(
                    f"split invertibility criteria disagree: realified margin {margin:.3e}, B margin {margin_b:.3e}"
                )
    return ok


def majorizes(t: RealLinearMap, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether |M z| strictly dominates |N z| for every z != 0.

    Equivalent to M invertible with operator_norm(N M^-1) < 1 - tol.rel.
    Strict domination certifies invertibility of the whole map.
    """
    cp = _to_conjugate_pair(t)
    ok, _ = invertibility_margin(cp.m, tol)
    if not ok:
        return False
    k = solve(cp.m.T, cp.n.T, tol).T
    return operator_norm(k, tol) < 1.0 - tol.rel


def domination_ratio(t: RealLinearMap, tol: Tolerance = DEFAULT_TOL) -> float | None:
    """operator_norm(N M^-1), or None when M is singular at tolerance."""
    cp = _to_conjugate_pair(t)
    ok, _ = invertibility_margin(cp.m, tol)
    if not ok:
        return None
    return operator_norm(solve(cp.m.T, cp.n.T, tol).T, tol)


def normalize_post_composition(
    t: RealLinearMap, tol: Tolerance = DEFAULT_TOL
) -> tuple[np.ndarray, NormalizedForm]:
    """Factor T = G o (z + conj(E z)) with G = M complex-linear.

    Returns (G, NormalizedForm(E)) with E = conj(M)^-1 N.  The factorization
    is verified on the 2n real basis directions and fails loudly on
    mismatch.  Raises SingularM when M is not invertible at tolerance.
    """
    cp = _to_conjugate_pair(t)
    ok, _ = invertibility_margin(cp.m, tol)
    if not ok:
        raise SingularM("complex-linear part M is singular; cannot normalize")
    normal = NormalizedForm(solve(np.conj(cp.m), cp.n, tol))
    _check_apply_equal(t, normal, tol, gl=cp.m)
    return frozen(cp.m.copy()), normal


def contraction_check(t: NormalizedForm, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Strict contraction test for the conjugate coefficient E.

    Route one: operator_norm(E) < 1 - tol.rel.  Route two: the smallest
    eigenvalue of I - E* E exceeds the algebraically matching threshold
    1 - (1 - tol.rel)^2.  Both run; a decisive disagreement raises
    InternalCheckError.
    """
    if not isinstance(t, NormalizedForm):
        raise TypeError("contraction_check expects a NormalizedForm")
    sigma = operator_norm(t.e, tol)
    first = sigma < 1.0 - tol.rel
    h = np.eye(t.dim) - adjoint(t.e) @ t.e
    h = 0.5 * (h + h.conj().T)
    wmin = float(hermitian_eig(h, tol)[0][0])
    second = wmin > 1.0 - (1.0 - tol.rel) ** 2
    if first != second:
        if abs(sigma - (1.0 - tol.rel)) > 1e3 * np.finfo(float).eps * max(1.0, sigma):
            raise InternalCheckError(
                f"contraction routes disagree: operator norm {sigma!r}, min eigenvalue {wmin!r}"
            )
    return first
