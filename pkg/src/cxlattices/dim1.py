"""Closed forms for real-linear maps in complex dimension one.

Every real-linear T on C is T(x + iy) = a x + i b y for two complex
numbers a, b, equivalently T(z) = alpha z + beta conj(z) with
alpha = (a + b)/2, beta = (a - b)/2.  When a is nonzero the same map is
a (x + i c y) with c = b / a, and when |alpha| > |beta| it rewrites as
theta (z + mu conj(z)) with theta = alpha, mu = beta / alpha, |mu| < 1.

Invertibility is |alpha| != |beta|.  In the c form the criterion is
Re(c) != 0: the realified determinant is |alpha|^2 - |beta|^2
= Re(conj(a) b) = |a|^2 Re(c).  Everything here is plain complex
arithmetic; the matrix modules enter only as cross-checks, which makes
this module an independent oracle for the general-dimension code.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import InternalCheckError, MajorizationFails
from .kernel import DEFAULT_TOL, Tolerance, invertibility_margin
from .realmaps import BlockForm, is_invertible

_GRAY_ZONE = 10.0


def _finite(z: complex, label: str) -> complex:
    z = complex(z)
    if not (cmath.isfinite(z)):
        raise ValueError(f"{label} must be finite (no NaN/Inf)")
    return z


@dataclass(frozen=True)
class ScalarForms:
    """The four presentations of one scalar real-linear map.

    c is present exactly when a != 0; theta and mu exactly when
    |alpha| > |beta| with margin (Eq. of the holomorphic-dominant case).
    Construction re-validates that all present forms agree on z = 1, i.
    """

    a: complex
    b: complex
    alpha: complex
    beta: complex
    c: complex | None
    theta: complex | None
    mu: complex | None

    def __post_init__(self) -> None:
        tol = DEFAULT_TOL
        scale = abs(self.a) + abs(self.b) + 1.0
        # the alpha/beta form must reproduce a and b (values at z = 1, i)
        if abs(self.alpha + self.beta - self.a) > tol.rel * scale:
            raise InternalCheckError("alpha + beta drifted from a")
        if abs(self.alpha - self.beta - self.b) > tol.rel * scale:
            raise InternalCheckError("alpha - beta drifted from b")
        if self.c is not None:
            if self.a == 0:
                raise InternalCheckError("c form requires a != 0")
            if abs(self.a * self.c - self.b) > tol.rel * scale:
                raise InternalCheckError("a * c drifted from b")
        if (self.theta is None) != (self.mu is None):
            raise InternalCheckError("theta and mu are present only together")
        if self.theta is not None:
            if self.theta == 0 or abs(self.mu) >= 1.0:
                raise InternalCheckError("theta form requires theta != 0 and |mu| < 1")
            if abs(self.theta * (1 + self.mu) - (self.alpha + self.beta)) > tol.rel * scale:
                raise InternalCheckError("theta form drifted at z = 1")
            if abs(self.theta * (1 - self.mu) - (self.alpha - self.beta)) > tol.rel * scale:
                raise InternalCheckError("theta form drifted at z = i")


def evaluate(f: ScalarForms, z: complex) -> complex:
    """Apply the map: alpha z + beta conj(z)."""
    return f.alpha * z + f.beta * z.conjugate()


def _gap_scale(alpha: complex, beta: complex) -> tuple[float, float]:
    return abs(abs(alpha) - abs(beta)), abs(alpha) + abs(beta)


def from_ab(a: complex, b: complex, tol: Tolerance = DEFAULT_TOL) -> ScalarForms:
    """Build all available scalar forms from T(x + iy) = a x + i b y."""
    a = _finite(a, "a")
    b = _finite(b, "b")
    alpha = (a + b) / 2.0
    beta = (a - b) / 2.0
    c = None
    if a != 0:
        c = b / a
        if not cmath.isfinite(c):
            raise ValueError("quotient b / a overflows; rescale the map first")
    theta = mu = None
    gap, scale = _gap_scale(alpha, beta)
    if abs(alpha) > abs(beta) and gap > tol.rel * scale:
        theta = alpha
        mu = beta / alpha
    return ScalarForms(a=a, b=b, alpha=alpha, beta=beta, c=c, theta=theta, mu=mu)


def _as_block(f: ScalarForms) -> BlockForm:
    # T(x + iy) = a x + i b y realifies to [[Re a, -Im b], [Im a, Re b]]
    return BlockForm(
        [[f.a.real]], [[-f.b.imag]], [[f.a.imag]], [[f.b.real]]
    )


def is_invertible_1d(f: ScalarForms, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Invertibility by the scalar criterion |alpha| != |beta|, margin-aware.

    Cross-checked against the realified-matrix route; the two thresholds
    coincide algebraically (the realification has singular values
    |alpha| +- |beta|), so a decisive disagreement is an internal error.
    """
    gap, scale = _gap_scale(f.alpha, f.beta)
    if scale == 0.0:
        return False
    threshold = tol.rel * scale
    verdict = gap > threshold
    other = is_invertible(_as_block(f), tol)
    if verdict != other:
        scalar_decisive = gap > _GRAY_ZONE * threshold or _GRAY_ZONE * gap < threshold
        _, ratio = invertibility_margin(
            [[f.a.real, -f.b.imag], [f.a.imag, f.b.real]], tol
        )
        matrix_decisive = ratio > _GRAY_ZONE * tol.rel or _GRAY_ZONE * ratio < tol.rel
        if scalar_decisive and matrix_decisive:
            raise InternalCheckError(
                "scalar and realified invertibility checks decisively disagree"
            )
    return verdict


def to_thetamu(f: ScalarForms, tol: Tolerance = DEFAULT_TOL) -> tuple[complex, complex]:
    """The normalized scalar form theta (z + mu conj(z)).

    Requires |alpha| > |beta| with margin; the invertible but
    conjugation-dominant case |beta| > |alpha| is excluded too.
    """
    gap, scale = _gap_scale(f.alpha, f.beta)
    if abs(f.alpha) <= abs(f.beta) or gap <= tol.rel * scale:
        raise MajorizationFails(
            f"|alpha| = {abs(f.alpha):.6g} does not dominate |beta| = {abs(f.beta):.6g}"
        )
    theta = f.alpha
    mu = f.beta / f.alpha
    for z in (1.0 + 0.0j, 1.0j):
        lhs = theta * (z + mu * z.conjugate())
        rhs = evaluate(f, z)
        if abs(lhs - rhs) > tol.rel * (abs(rhs) + scale):
            raise InternalCheckError("theta form fails evaluation equality")
    return theta, mu
