"""Dense complex-matrix primitives: adjoints, Hermitian spectra, PD solves.

Everything downstream (frame layers, generators, CLI) goes through this
module for its numerics. All functions are pure; inputs are validated and
coerced to finite ``complex128`` arrays once, here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NotHermitian, NotPositiveDefinite, NotSquare, ShapeMismatch

#: Package-wide default relative tolerance for verdicts and residual checks.
DEFAULT_TOL = 1e-9

# Definiteness gate for solve_pd: lambda_min must exceed this times lambda_max.
_PD_RATIO = 1e-12


def as_matrix(data) -> np.ndarray:
    """Coerce ``data`` to a nonempty 2-d complex128 array with finite entries."""
    m = np.asarray(data, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeMismatch(f"matrix must be nonempty, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def as_vector(data) -> np.ndarray:
    """Coerce ``data`` to a nonempty 1-d complex128 array with finite entries."""
    v = np.asarray(data, dtype=np.complex128)
    if v.ndim != 1:
        raise ShapeMismatch(f"expected a 1-d vector, got ndim={v.ndim}")
    if v.shape[0] < 1:
        raise ShapeMismatch("vector must be nonempty")
    if not np.isfinite(v).all():
        raise ValueError("vector entries must be finite (no NaN/Inf)")
    return v


def inner(u, v) -> complex:
    """Inner product, linear in the first argument and conjugate-linear in
    the second: ``inner(u, v) = sum_i u[i] * conj(v[i])``.

    This is the single place the convention is fixed; every pairing in the
    package is expressed through it.
    """
    return complex(np.vdot(v, u))


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def hermitian_deviation(m) -> float:
    """Relative distance of a square matrix from its adjoint.

    Returns ``||M - M*||_F / max(1, ||M||_F)``, so the value is 0 exactly
    for Hermitian input and scale-insensitive otherwise.
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"deviation needs a square matrix, got {a.shape}")
    num = np.linalg.norm(a - a.conj().T)
    return float(num / max(1.0, np.linalg.norm(a)))


@dataclass(frozen=True, eq=False)
class HermitianEigen:
    """Spectral decomposition of a Hermitian matrix.

    ``eigenvalues`` is real and ascending; ``eigenvectors`` holds the
    matching orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.eigenvalues, dtype=np.float64)
        if w.ndim != 1 or not np.isfinite(w).all():
            raise ValueError("eigenvalues must be a finite 1-d real array")
        if np.any(np.diff(w) < 0):
            raise ValueError("eigenvalues must be ascending")
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "eigenvectors", as_matrix(self.eigenvectors))


def eig_hermitian(m, tol: float = DEFAULT_TOL) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises ``NotSquare`` for rectangular input and ``NotHermitian`` when the
    relative deviation from self-adjointness exceeds ``tol``. The matrix is
    symmetrized before factorization so roundoff-level asymmetry cannot
    leak complex eigenvalues.
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"eigendecomposition needs a square matrix, got {a.shape}")
    dev = hermitian_deviation(a)
    if dev > tol:
        raise NotHermitian(f"relative Hermitian deviation {dev:.3e} exceeds tol {tol:.3e}")
    h = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(h)
    return HermitianEigen(w, v)


def operator_norm(m) -> float:
    """Largest singular value."""
    a = as_matrix(m)
    return float(np.linalg.svd(a, compute_uv=False)[0])


def solve_pd(m, b) -> np.ndarray:
    """Solve ``M X = B`` for Hermitian positive definite ``M``.

    ``b`` may be a vector or a matrix of right-hand sides; the result has
    the same number of dimensions. Uses a Cholesky factorization of the
    Hermitian part plus one step of iterative refinement, which keeps
    ``||M X - B||_F`` at roundoff level for the conditioning this package
    works with.

    Raises ``NotPositiveDefinite`` (with the offending smallest eigenvalue)
    when ``lambda_min <= 1e-12 * lambda_max``.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if a.shape[1] != n:
        raise NotSquare(f"solve needs a square matrix, got {a.shape}")
    rhs = np.asarray(b, dtype=np.complex128)
    if rhs.ndim not in (1, 2) or rhs.shape[0] != n:
        raise ShapeMismatch(f"right-hand side shape {rhs.shape} does not match order {n}")
    if not np.isfinite(rhs).all():
        raise ValueError("right-hand side entries must be finite")

    h = 0.5 * (a + a.conj().T)
    w = np.linalg.eigvalsh(h)
    if w[0] <= _PD_RATIO * max(w[-1], 0.0):
        raise NotPositiveDefinite(
            f"matrix is not positive definite: smallest eigenvalue {w[0]:.6e} "
            f"(largest {w[-1]:.6e})",
            smallest_eigenvalue=float(w[0]),
        )

    factor = scipy.linalg.cho_factor(h, lower=True, check_finite=False)
    x = scipy.linalg.cho_solve(factor, rhs, check_finite=False)
    # One refinement pass knocks the residual down to ~eps * ||B||.
    x = x + scipy.linalg.cho_solve(factor, rhs - h @ x, check_finite=False)
    return x
