"""Complex dense matrix kernel.

Hermitian/skew splitting, positive-semidefiniteness certification, minimal
factorizations A = T*T, connecting isometries between factorizations, and
block LDU splitting around a Schur complement.  Matrices are plain numpy
arrays of complex128; the adjoint ``A*`` is the conjugate transpose
throughout.  All functions are pure: inputs are never modified.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DimensionError,
    FactorizationMismatchError,
    NotHermitianError,
    NotPsdError,
    SingularBlockError,
)

__all__ = [
    "PsdReport",
    "Factorization",
    "SchurSplit",
    "hermitian_split",
    "psd_report",
    "minimal_factorization",
    "connecting_isometry",
    "schur_split",
]


def _square(m, what="matrix"):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class PsdReport:
    """Verdict of a positive-semidefiniteness check.

    ``is_psd`` holds iff ``min_eigenvalue >= -tolerance_used``;
    ``is_strictly_positive`` additionally requires
    ``min_eigenvalue > tolerance_used``.
    """

    min_eigenvalue: float
    is_psd: bool
    is_strictly_positive: bool
    tolerance_used: float


@dataclass(frozen=True, eq=False)
class Factorization:
    """Minimal factorization A = T*T with T of full row rank.

    T has shape (rank, n); ``residual`` is the relative reconstruction
    error ||A - T*T|| / ||A|| (Frobenius, zero for A = 0).
    """

    T: np.ndarray
    rank: int
    residual: float


@dataclass(frozen=True, eq=False)
class SchurSplit:
    """Block LDU factorization of G = [[A, B], [C, D]] around the leading
    block A:  G = L * M * U with M = blockdiag(A, D - C A^{-1} B).

    ``leading_cond`` is the 2-norm condition number of A; it is reported,
    never capped.
    """

    a_block: np.ndarray
    b_block: np.ndarray
    c_block: np.ndarray
    d_block: np.ndarray
    schur_complement: np.ndarray
    lower_factor: np.ndarray
    middle_factor: np.ndarray
    upper_factor: np.ndarray
    leading_cond: float


def hermitian_split(m):
    """Split a square matrix into Hermitian and skew-Hermitian parts.

    Returns ``(H, S)`` with ``H = (M + M*)/2``, ``S = (M - M*)/2``, so that
    ``M = H + S``, ``H* = H`` and ``S* = -S`` hold exactly (entrywise, not
    merely to tolerance).
    """
    m = _square(m)
    mh = m.conj().T
    return (m + mh) / 2, (m - mh) / 2


def psd_report(h, tol=1e-9):
    """Certify positive semidefiniteness of a Hermitian matrix.

    Parameters
    ----------
    h : array_like, square
        Matrix expected to be Hermitian within ``tol`` (max entrywise
        deviation of ``h - h*``).
    tol : float
        Tolerance used both for the Hermitian check and the eigenvalue
        verdicts.

    Returns
    -------
    PsdReport
        ``min_eigenvalue`` is the smallest eigenvalue of the Hermitian
        part of ``h``.

    Raises
    ------
    NotHermitianError
        If ``h`` deviates from Hermitian symmetry beyond ``tol``.
    """
    h = _square(h)
    defect = float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0
    if defect > tol:
        raise NotHermitianError(
            f"matrix is not Hermitian: max asymmetry {defect:.3e} exceeds tol {tol:.3e}"
        )
    herm = (h + h.conj().T) / 2
    eigs = np.linalg.eigvalsh(herm) if h.size else np.array([np.inf])
    min_eig = float(eigs[0])
    return PsdReport(
        min_eigenvalue=min_eig,
        is_psd=min_eig >= -tol,
        is_strictly_positive=min_eig > tol,
        tolerance_used=tol,
    )


def minimal_factorization(a, tol_rank=1e-10):
    """Factor a Hermitian PSD matrix as A = T*T with T of full row rank.

    The factor is built from the Hermitian eigendecomposition: eigenvalues
    above ``tol_rank * lambda_max`` are kept, small negatives in
    ``[-tol_rank, 0)`` are clamped to zero first.  The number of rows of T
    is the numerical rank, so T automatically has full row rank (dense
    range onto its target space).

    Raises
    ------
    NotPsdError
        If the smallest eigenvalue is below ``-tol_rank``; the offending
        eigenvalue is reported.
    """
    a = _square(a)
    report = psd_report(a, tol_rank)
    if not report.is_psd:
        raise NotPsdError(
            f"matrix is not PSD: eigenvalue {report.min_eigenvalue:.6e} "
            f"below -{tol_rank:.1e}"
        )
    herm = (a + a.conj().T) / 2
    if herm.size == 0:
        return Factorization(T=np.zeros((0, 0), dtype=complex), rank=0, residual=0.0)
    eigs, vecs = np.linalg.eigh(herm)
    eigs = np.where(eigs < 0.0, 0.0, eigs)
    cutoff = tol_rank * eigs[-1]
    keep = eigs > cutoff
    t = np.sqrt(eigs[keep])[:, None] * vecs[:, keep].conj().T
    norm_a = np.linalg.norm(herm)
    residual = float(np.linalg.norm(herm - t.conj().T @ t) / norm_a) if norm_a > 0 else 0.0
    return Factorization(T=t, rank=int(keep.sum()), residual=residual)


def connecting_isometry(minimal, other, tol=1e-8):
    """Isometry V with V T = T' between two factorizations of the same matrix.

    Parameters
    ----------
    minimal : Factorization or array_like
        Minimal factor T (full row rank, r x n) of some PSD matrix A.
    other : array_like
        A second factor T' (r' x n) with (T')* T' = A.
    tol : float
        Consistency tolerance; also bounds the returned defects.

    Returns
    -------
    numpy.ndarray
        V of shape (r', r) with ``V* V = I_r`` and ``V T = T'`` within
        tolerance.  When T' is also minimal (r' = r), V is unitary.

    Notes
    -----
    V maps each column of T to the matching column of T' (the graph of the
    isometric relation between the two factor spaces).  Numerically it is
    obtained as the least-squares map T' T^+ against the minimal factor and
    snapped back onto the isometry manifold by a polar decomposition when
    round-off pushes ``V* V`` away from the identity.

    Raises
    ------
    FactorizationMismatchError
        If ``T*T`` and ``(T')*(T')`` differ beyond ``tol``.
    """
    t = np.asarray(minimal.T if isinstance(minimal, Factorization) else minimal, dtype=complex)
    tp = np.asarray(other, dtype=complex)
    if t.ndim != 2 or tp.ndim != 2 or t.shape[1] != tp.shape[1]:
        raise DimensionError(
            f"factors must share the source dimension, got {t.shape} and {tp.shape}"
        )
    a1 = t.conj().T @ t
    a2 = tp.conj().T @ tp
    gap = np.linalg.norm(a1 - a2)
    if gap > tol * max(1.0, np.linalg.norm(a1)):
        raise FactorizationMismatchError(
            f"factorizations disagree: ||T*T - (T')*(T')|| = {gap:.3e}"
        )
    v = tp @ np.linalg.pinv(t)
    r = t.shape[0]
    if r and np.linalg.norm(v.conj().T @ v - np.eye(r)) > tol / 10:
        u, _, wh = np.linalg.svd(v, full_matrices=False)
        v = u @ wh
    return v


def schur_split(g, k):
    """Block LDU factorization of G around its leading k x k block.

    Writes G = [[A, B], [C, D]] with A = G[:k, :k] and returns the exact
    factorization G = L * M * U where

        L = [[I, 0], [C A^{-1}, I]],
        M = blockdiag(A, D - C A^{-1} B),
        U = [[I, A^{-1} B], [0, I]].

    Raises
    ------
    SingularBlockError
        If A is numerically singular; the smallest singular value is
        reported.
    """
    g = _square(g)
    n = g.shape[0]
    if not 1 <= k <= n:
        raise DimensionError(f"leading block size {k} out of range for {n} x {n} matrix")
    a = g[:k, :k]
    b = g[:k, k:]
    c = g[k:, :k]
    d = g[k:, k:]
    svals = np.linalg.svd(a, compute_uv=False)
    smin, smax = float(svals[-1]), float(svals[0])
    if smin <= smax * k * np.finfo(float).eps:
        raise SingularBlockError(
            f"leading {k} x {k} block is numerically singular "
            f"(smallest singular value {smin:.3e})"
        )
    a_inv = np.linalg.inv(a)
    schur = d - c @ a_inv @ b
    lower = np.eye(n, dtype=complex)
    lower[k:, :k] = c @ a_inv
    upper = np.eye(n, dtype=complex)
    upper[:k, k:] = a_inv @ b
    middle = np.zeros((n, n), dtype=complex)
    middle[:k, :k] = a
    middle[k:, k:] = schur
    return SchurSplit(
        a_block=a,
        b_block=b,
        c_block=c,
        d_block=d,
        schur_complement=schur,
        lower_factor=lower,
        middle_factor=middle,
        upper_factor=upper,
        leading_cond=smax / smin,
    )
