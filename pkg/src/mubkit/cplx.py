"""Dense complex linear algebra for small matrices.

Matrices are plain ``numpy`` arrays of complex128. The module supplies the
composition primitives used everywhere else, unitarity/commutation
predicates, a cyclic Jacobi Hermitian eigensolver, and simultaneous
diagonalization of commuting unitary families via a seeded random Hermitian
combination.

All problem sizes in this package are tiny (d <= 64 in tests, d <= 256
conceivable), so clarity wins over asymptotics throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateFamily,
    NoConvergence,
    NotCommuting,
    NotHermitian,
    NotUnitary,
    ShapeMismatch,
)

DEFAULT_TOL = 1e-9
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
SIMDIAG_RETRIES = 8


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ShapeMismatch("matrix contains non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product with index convention (i, j) -> i * cols_b + j."""
    return np.kron(as_matrix(a), as_matrix(b))


def trace(a) -> complex:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"trace requires a square matrix, got {a.shape}")
    return complex(np.trace(a))


def identity(d: int) -> np.ndarray:
    return np.eye(d, dtype=np.complex128)


def max_abs(a) -> float:
    a = np.asarray(a)
    return 0.0 if a.size == 0 else float(np.max(np.abs(a)))


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"unitarity requires a square matrix, got {a.shape}")
    return max_abs(a.conj().T @ a - np.eye(a.shape[0])) < tol


def commutes(a, b, tol: float = DEFAULT_TOL) -> bool:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"commutator requires equal square shapes, got {a.shape}, {b.shape}")
    return max_abs(a @ b - b @ a) < tol


@dataclass
class EigenDecomposition:
    """Real eigenvalues in ascending order and a unitary matrix of column
    eigenvectors, satisfying A V = V diag(values) to solver tolerance."""

    values: np.ndarray
    vectors: np.ndarray


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def eig_hermitian(a, tol: float = JACOBI_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below ``tol``;
    raises :class:`NoConvergence` after 100 sweeps (never observed for the
    sizes this package targets) and :class:`NotHermitian` when the input is
    not Hermitian within ``tol``.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"eigendecomposition requires a square matrix, got {a.shape}")
    if max_abs(a - a.conj().T) > max(tol, 1e-12):
        raise NotHermitian(f"matrix deviates from Hermitian by {max_abs(a - a.conj().T):.3g}")
    a = (a + a.conj().T) / 2.0
    v = np.eye(n, dtype=np.complex128)

    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < tol / max(n, 1) / 10.0:
                    continue
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0)) if tau != 0.0 else 1.0
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                # columns: [p] <- c*[p] - s*conj(phase)*[q]; [q] <- s*phase*[p] + c*[q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                col_p = v[:, p].copy()
                col_q = v[:, q].copy()
                v[:, p] = c * col_p - s * np.conj(phase) * col_q
                v[:, q] = s * phase * col_p + c * col_q
    else:
        if _offdiag_norm(a) >= tol:
            raise NoConvergence(
                f"Jacobi did not reach {tol:.1e} in {JACOBI_MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {_offdiag_norm(a):.3g})"
            )

    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=v[:, order])


def phase_normalize(basis, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Fix the free phase of each column: the largest-modulus component
    (lowest index on modulus ties within tol) is made real positive.

    Idempotent: renormalizing an already-normalized basis is the identity.
    """
    w = as_matrix(basis).copy()
    for k in range(w.shape[1]):
        col = w[:, k]
        mods = np.abs(col)
        pivot = int(np.flatnonzero(mods >= mods.max() - tol)[0])
        z = col[pivot]
        if abs(z) > 0:
            w[:, k] = col * (np.conj(z) / abs(z))
    return w


def _all_diagonal(family, w, tol: float) -> bool:
    for u in family:
        conj = w.conj().T @ u @ w
        if max_abs(conj - np.diag(np.diag(conj))) >= tol:
            return False
    return True


def simultaneous_eigenbasis(family, tol: float = DEFAULT_TOL, seed: int = 0) -> np.ndarray:
    """Common eigenbasis of a family of commuting unitaries.

    Draws seeded random real coefficients c_k, r_k and diagonalizes the
    Hermitian combination sum_k c_k (U_k + U_k†)/2 + r_k (U_k - U_k†)/(2i).
    If some conjugated family member fails to come out diagonal (the random
    combination hit a degeneracy), redraws, up to 8 attempts, after which
    :class:`DegenerateFamily` signals a genuinely shared eigenspace.

    Columns are ordered by ascending eigenvalue of the combination and
    phase-normalized via :func:`phase_normalize`.
    """
    mats = [as_matrix(u) for u in family]
    if not mats:
        raise ShapeMismatch("empty family")
    d = mats[0].shape[0]
    for u in mats:
        if u.shape != (d, d):
            raise ShapeMismatch(f"family members must all be {d}x{d}, got {u.shape}")
        if not is_unitary(u, tol):
            raise NotUnitary("family member is not unitary within tolerance")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not commutes(mats[i], mats[j], tol):
                raise NotCommuting(f"family members {i} and {j} do not commute")

    rng = np.random.default_rng(seed)
    herm = [(u + u.conj().T) / 2.0 for u in mats]
    skew = [(u - u.conj().T) / 2.0j for u in mats]
    for _ in range(SIMDIAG_RETRIES):
        c = rng.standard_normal(len(mats))
        r = rng.standard_normal(len(mats))
        a = np.zeros((d, d), dtype=np.complex128)
        for k in range(len(mats)):
            a += c[k] * herm[k] + r[k] * skew[k]
        decomp = eig_hermitian(a, JACOBI_TOL)
        w = decomp.vectors
        if _all_diagonal(mats, w, tol):
            return phase_normalize(w, tol)
    raise DegenerateFamily(
        f"no random combination separated the joint eigenspaces in {SIMDIAG_RETRIES} attempts"
    )


def unit_root(num: int, den: int) -> complex:
    """exp(2*pi*i*num/den), exact at quarter-turn multiples so that
    character matrices over small fields come out with integer entries."""
    k = num % den
    if 4 * k % den == 0:
        quarter = 4 * k // den
        return (1 + 0j, 1j, -1 + 0j, -1j)[quarter % 4]
    angle = 2.0 * math.pi * k / den
    return complex(math.cos(angle), math.sin(angle))
