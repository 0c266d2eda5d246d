"""Matrix-valued Herglotz series, their positive kernels, state-space
realization oracles, and the reduction to a minimal base-factor form.

A truncated series Phi(z) = M_0 + 2 sum_{n>=1} z^n M_n is positive-real on
the unit disk exactly when every truncation-level block Toeplitz matrix of
its coefficients is PSD; the two-point kernel

    K(z, w) = (Phi(z) + Phi(w)*) / (1 - z conj(w))

is then positive.  ``reduce`` rewrites such data as
Phi(z) = D_imag + T0* phi(z) T0 with phi normalized to phi(0) = I on the
range space of the Hermitian part of M_0.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DimensionError,
    DomainError,
    FactorizationMismatchError,
    FixtureError,
    InsufficientDataError,
    NotPsdError,
    RangeCompatibilityError,
)
from .linalg import (
    connecting_isometry,
    hermitian_split,
    minimal_factorization,
    psd_report,
)
from .toeplitz import CoefficientSequence, assemble, positivity_profile

__all__ = [
    "HerglotzSeries",
    "Realization",
    "ReducedForm",
    "GramFactor",
    "certified_series",
    "eval_series",
    "series_tail_bound",
    "kernel_value",
    "kernel_gram",
    "kernel_finite_section",
    "realization_coefficients",
    "eval_realization",
    "random_realization",
    "reduce",
    "gram_isometries",
    "compose_reduced",
]


@dataclass(frozen=True, eq=False)
class HerglotzSeries:
    """Truncated Herglotz series with a declared evaluation radius < 1.

    ``certified`` records whether all truncation-level Toeplitz matrices
    were verified PSD (either checked at construction via
    ``certified_series`` or guaranteed by the producing algorithm).
    """

    seq: CoefficientSequence
    declared_radius: float = 0.9
    certified: bool = False

    def __post_init__(self):
        if not 0 < self.declared_radius < 1:
            raise DomainError(f"declared radius must lie in (0, 1), got {self.declared_radius}")


@dataclass(frozen=True, eq=False)
class Realization:
    """State-space data (D, C, V) generating a Herglotz function.

    D (d x d) is purely imaginary (D + D* = 0), V (h x h) is an isometry
    (V* V = I, hence unitary at finite dimension), C maps the coefficient
    space into the state space (h x d).
    """

    D: np.ndarray
    C: np.ndarray
    V: np.ndarray


@dataclass(frozen=True, eq=False)
class ReducedForm:
    """Data of the reduction Phi(z) = D_imag + T0* phi(z) T0.

    ``t0`` is the minimal factor of (M_0 + M_0*)/2 (full row rank r x d);
    ``t_seq`` holds the reduced coefficients t_0 .. t_N over dimension r
    with t_0 = I, or None when r = 0; ``residuals[j]`` records
    ||M_j - T0* t_j T0|| (Frobenius).
    """

    d_imag: np.ndarray
    t0: np.ndarray
    t_seq: CoefficientSequence | None
    residuals: list


@dataclass(frozen=True, eq=False)
class GramFactor:
    """Minimal factor F of an assembled Toeplitz matrix, split into column
    blocks F_j = V_j T0 with isometries V_j onto a common base factor T0."""

    factor: np.ndarray
    blocks: list
    isometries: list


def certified_series(seq, declared_radius=0.9, tol=1e-9):
    """Construct a HerglotzSeries after verifying every truncation level.

    Raises
    ------
    NotPsdError
        Naming the first truncation level whose Toeplitz matrix fails.
    """
    for n, report in enumerate(positivity_profile(seq, tol)):
        if not report.is_psd:
            raise NotPsdError(
                f"truncation level {n} is not PSD "
                f"(min eigenvalue {report.min_eigenvalue:.3e})"
            )
    return HerglotzSeries(seq=seq, declared_radius=declared_radius, certified=True)


def _check_point(z, radius):
    z = complex(z)
    if abs(z) > radius:
        raise DomainError(f"|z| = {abs(z):.6f} outside declared radius {radius}")
    return z


def eval_series(phi, z):
    """Evaluate Phi(z) = M_0 + 2 sum_{n=1..T} z^n M_n.

    The omitted tail is bounded by ``series_tail_bound(phi, z)``.
    """
    z = _check_point(z, phi.declared_radius)
    coeffs = phi.seq.coefficients
    t = phi.seq.order
    if t == 0:
        return coeffs[0].copy()
    powers = z ** np.arange(1, t + 1)
    return coeffs[0] + 2 * np.tensordot(powers, coeffs[1:], axes=(0, 0))


def series_tail_bound(phi, z):
    """Geometric bound on the dropped tail of ``eval_series``:
    2 max_n ||M_n|| |z|^{T+1} / (1 - |z|)."""
    z = complex(z)
    r = abs(z)
    if r >= 1:
        raise DomainError(f"|z| = {r:.6f} must be below 1 for a finite tail bound")
    max_norm = max(float(np.linalg.norm(block, 2)) for block in phi.seq.coefficients)
    t = phi.seq.order
    return 2 * max_norm * r ** (t + 1) / (1 - r)


def kernel_value(phi, z, w):
    """Two-point kernel K(z, w) = (Phi(z) + Phi(w)*) / (1 - z conj(w))."""
    z = _check_point(z, phi.declared_radius)
    w = _check_point(w, phi.declared_radius)
    return (eval_series(phi, z) + eval_series(phi, w).conj().T) / (1 - z * np.conj(w))


def kernel_gram(phi, points, vectors=None, tol=1e-6):
    """PSD report for the kernel Gram matrix sampled at ``points``.

    Without ``vectors`` the dense (m d) x (m d) Gram with (l, j) block
    K(z_l, z_j) is assembled; with one d-vector per point the compressed
    m x m matrix of pairings <K(z_l, z_j) h_j, h_l> is used instead.  The
    Gram is symmetrized before the eigenvalue check and the tolerance is
    widened by the measured skew norm plus the truncation-tail allowance,
    so the report's ``tolerance_used`` absorbs both.
    """
    pts = [_check_point(z, phi.declared_radius) for z in points]
    m = len(pts)
    if m == 0:
        raise DimensionError("need at least one sample point")
    d = phi.seq.block_dim
    values = [eval_series(phi, z) for z in pts]
    if vectors is None:
        gram = np.zeros((m * d, m * d), dtype=complex)
        for l in range(m):
            for j in range(m):
                block = (values[l] + values[j].conj().T) / (1 - pts[l] * np.conj(pts[j]))
                gram[l * d : (l + 1) * d, j * d : (j + 1) * d] = block
    else:
        if len(vectors) != m:
            raise DimensionError("need exactly one vector per sample point")
        vecs = [np.asarray(v, dtype=complex).reshape(d) for v in vectors]
        gram = np.zeros((m, m), dtype=complex)
        for l in range(m):
            for j in range(m):
                block = (values[l] + values[j].conj().T) / (1 - pts[l] * np.conj(pts[j]))
                gram[l, j] = vecs[l].conj() @ block @ vecs[j]
    skew_norm = float(np.linalg.norm(gram - gram.conj().T)) / 2
    tail = max(series_tail_bound(phi, z) for z in pts)
    widened = tol + skew_norm + m * tail
    return psd_report((gram + gram.conj().T) / 2, widened)


def kernel_finite_section(seq, z, w, n):
    """Finite-section kernel approximation through the order-n Toeplitz matrix.

    Computes ``2 row(z) M_n row(w)*`` with row(z) = (z^n I, ..., z I, I);
    as n grows this converges geometrically to K(z, w) of the series of
    ``seq`` for |z|, |w| < 1.
    """
    z = complex(z)
    w = complex(w)
    if abs(z) >= 1 or abs(w) >= 1:
        raise DomainError("both points must lie strictly inside the unit disk")
    if n > seq.order:
        raise InsufficientDataError(
            f"order {n} requested but only coefficients up to {seq.order} available"
        )
    d = seq.block_dim
    dense = assemble(seq.truncated(n)).dense
    eye = np.eye(d)
    row_z = np.kron((z ** np.arange(n, -1, -1))[None, :], eye)
    row_w = np.kron((w ** np.arange(n, -1, -1))[None, :], eye)
    return 2 * row_z @ dense @ row_w.conj().T


def _check_realization(rlz, tol=1e-8):
    d = np.asarray(rlz.D, dtype=complex)
    c = np.asarray(rlz.C, dtype=complex)
    v = np.asarray(rlz.V, dtype=complex)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise FixtureError(f"D must be square, got shape {d.shape}")
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise FixtureError(f"V must be square, got shape {v.shape}")
    if c.ndim != 2 or c.shape != (v.shape[0], d.shape[0]):
        raise FixtureError(
            f"C must map the coefficient space into the state space, got {c.shape}"
        )
    skew_defect = np.linalg.norm(d + d.conj().T)
    if skew_defect > tol:
        raise FixtureError(f"D is not purely imaginary: ||D + D*|| = {skew_defect:.3e}")
    iso_defect = np.linalg.norm(v.conj().T @ v - np.eye(v.shape[0]))
    if iso_defect > tol:
        raise FixtureError(f"V is not an isometry: ||V*V - I|| = {iso_defect:.3e}")
    return d, c, v


def realization_coefficients(rlz, n_max, tol=1e-8):
    """Series coefficients generated by a realization:
    M_0 = D + C*C and M_n = C* (V*)^n C for n >= 1.

    Every truncation-level Toeplitz matrix of the result is PSD by
    construction, which makes realizations the fixture oracle of choice.
    """
    d, c, v = _check_realization(rlz, tol)
    blocks = [d + c.conj().T @ c]
    y = c
    vh = v.conj().T
    for _ in range(n_max):
        y = vh @ y
        blocks.append(c.conj().T @ y)
    return CoefficientSequence(np.stack(blocks))


def eval_realization(rlz, z, tol=1e-8):
    """Exact rational evaluation Phi(z) = D + C*(I + z V*)(I - z V*)^{-1} C.

    Valid for |z| < 1, where I - z V* is invertible because ||V*|| = 1.
    """
    d, c, v = _check_realization(rlz, tol)
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"|z| = {abs(z):.6f} is not inside the open unit disk")
    vh = v.conj().T
    h = v.shape[0]
    y = np.linalg.solve(np.eye(h) - z * vh, c)
    return d + c.conj().T @ (y + z * (vh @ y))


def random_realization(seed, block_dim, state_dim, zero_c=False):
    """Seeded random realization: Haar unitary V, Gaussian C, skew D.

    ``seed`` may be an integer or a ``numpy.random.Generator``.  The
    unitary is an orthogonalized complex Gaussian with the QR phase fix,
    so identical seeds reproduce identical fixtures bit for bit.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if block_dim < 1 or state_dim < 1:
        raise DimensionError("block and state dimensions must be at least 1")
    g = rng.standard_normal((state_dim, state_dim)) + 1j * rng.standard_normal(
        (state_dim, state_dim)
    )
    q, r = np.linalg.qr(g)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    v = q * phases
    if zero_c:
        c = np.zeros((state_dim, block_dim), dtype=complex)
    else:
        c = (
            rng.standard_normal((state_dim, block_dim))
            + 1j * rng.standard_normal((state_dim, block_dim))
        ) / np.sqrt(2 * state_dim)
    gd = rng.standard_normal((block_dim, block_dim)) + 1j * rng.standard_normal(
        (block_dim, block_dim)
    )
    d = (gd - gd.conj().T) / 2
    return Realization(D=d, C=c, V=v)


def reduce(seq, tol=1e-8):
    """Reduce coefficient data to the base-factor form (D_imag, T0, t_seq).

    T0 is the minimal factor of Re M_0 = (M_0 + M_0*)/2 and each reduced
    coefficient is the two-sided normal-equations compression

        t_j = (T0 T0*)^{-1} T0 M_j T0* (T0 T0*)^{-1},

    exact whenever M_j factors through the range of T0*, which holds for
    every genuine positive-Toeplitz truncation.  Residuals
    ||M_j - T0* t_j T0|| are recorded per coefficient and failure is loud:

    Raises
    ------
    RangeCompatibilityError
        If any residual exceeds ``tol`` (the data cannot be a truncated
        Herglotz series; equivalently some Toeplitz level is not PSD).
    """
    coeffs = seq.coefficients
    h0, d_imag = hermitian_split(coeffs[0])
    fact = minimal_factorization(h0, tol_rank=1e-10)
    t0 = fact.T
    r = fact.rank
    if r == 0:
        residuals = [float(np.linalg.norm(h0))]
        residuals += [float(np.linalg.norm(coeffs[j])) for j in range(1, len(seq))]
        worst = int(np.argmax(residuals))
        if residuals[worst] > tol:
            raise RangeCompatibilityError(
                f"Re M_0 vanishes but coefficient {worst} has norm "
                f"{residuals[worst]:.3e}; data is not a Herglotz truncation"
            )
        return ReducedForm(d_imag=d_imag, t0=t0, t_seq=None, residuals=residuals)
    compress = np.linalg.pinv(t0).conj().T  # (T0 T0*)^{-1} T0, shape r x d
    targets = [h0] + [coeffs[j] for j in range(1, len(seq))]
    reduced = []
    residuals = []
    for j, target in enumerate(targets):
        tj = compress @ target @ compress.conj().T
        res = float(np.linalg.norm(target - t0.conj().T @ tj @ t0))
        reduced.append(tj)
        residuals.append(res)
        if res > tol:
            raise RangeCompatibilityError(
                f"coefficient {j} does not factor through the range of T0*: "
                f"residual {res:.3e} exceeds tol {tol:.1e}"
            )
    return ReducedForm(
        d_imag=d_imag,
        t0=t0,
        t_seq=CoefficientSequence(np.stack(reduced)),
        residuals=residuals,
    )


def gram_isometries(seq, tol=1e-8):
    """Factor the assembled Toeplitz matrix and express its column blocks
    through the base factor.

    With F the minimal factor of the assembled matrix and F_j its column
    blocks, every F_j factors Re M_0, so there are isometries V_j with
    F_j = V_j T0.  Verifies M_j = T0* V_0* V_j T0 for all j, that the
    middle Gram matrix (entries V_i* V_j) has identity diagonal and is
    PSD, and that it reproduces the assembled matrix between diag(T0*)
    and diag(T0).
    """
    bt = assemble(seq)
    d = seq.block_dim
    n = len(seq)
    big = minimal_factorization(bt.dense, tol_rank=tol)
    f = big.T
    h0, _ = hermitian_split(seq.coefficients[0])
    base = minimal_factorization(h0, tol_rank=tol)
    t0 = base.T
    blocks = [f[:, j * d : (j + 1) * d] for j in range(n)]
    isometries = [connecting_isometry(base, fj, tol=tol) for fj in blocks]
    scale = max(1.0, float(np.linalg.norm(bt.dense)))
    v0 = isometries[0]
    for j in range(1, n):
        recon = t0.conj().T @ v0.conj().T @ isometries[j] @ t0
        gap = np.linalg.norm(seq.coefficients[j] - recon)
        if gap > tol * scale:
            raise FactorizationMismatchError(
                f"coefficient {j} is not reproduced by the base isometries: "
                f"||M_j - T0* V_0* V_j T0|| = {gap:.3e}"
            )
    r = base.rank
    w = np.hstack(isometries) if r else np.zeros((f.shape[0], 0), dtype=complex)
    gmid = w.conj().T @ w
    for j in range(n):
        defect = np.linalg.norm(gmid[j * r : (j + 1) * r, j * r : (j + 1) * r] - np.eye(r))
        if defect > tol:
            raise FactorizationMismatchError(
                f"isometry defect at block {j}: ||V_j* V_j - I|| = {defect:.3e}"
            )
    if r and not psd_report(gmid, tol).is_psd:
        raise FactorizationMismatchError("middle Gram matrix of the isometries is not PSD")
    if r:
        d_t0 = np.kron(np.eye(n), t0)
        recon = d_t0.conj().T @ gmid @ d_t0
        gap = np.linalg.norm(bt.dense - recon)
        if gap > tol * scale:
            raise FactorizationMismatchError(
                f"Gram reconstruction of the Toeplitz matrix off by {gap:.3e}"
            )
    return GramFactor(factor=f, blocks=blocks, isometries=isometries)


def compose_reduced(rf, phi_reduced, z):
    """Evaluate the reduced composition D_imag + T0* phi(z) T0.

    ``phi_reduced`` must be a series over the reduced dimension (built on
    ``rf.t_seq`` or a positive extension of it).  At z = 0 this
    reconstructs M_0 exactly; with empty T0 the function is the constant
    D_imag.
    """
    if rf.t_seq is None or rf.t0.shape[0] == 0:
        return rf.d_imag.copy()
    if phi_reduced.seq.block_dim != rf.t0.shape[0]:
        raise DimensionError(
            f"reduced series dimension {phi_reduced.seq.block_dim} does not match "
            f"factor rank {rf.t0.shape[0]}"
        )
    return rf.d_imag + rf.t0.conj().T @ eval_series(phi_reduced, z) @ rf.t0
