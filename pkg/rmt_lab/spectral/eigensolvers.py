"""
Hermitian and general eigensolvers

Two paths each: scipy's LAPACK drivers (default) and a self-contained
reduction + shifted iteration used to cross-check them. The Hermitian path
reduces to a real symmetric tridiagonal matrix by Householder reflections
and runs implicit QL with Wilkinson shifts; the general path reduces to
Hessenberg form and runs single-shift complex QR with Givens rotations.
"""
import logging
import math
from typing import Optional, Union

import numpy as np
from scipy import linalg

from rmt_lab.config import config
from rmt_lab.core.errors import ContractViolationError, ConvergenceError, ParameterError
from rmt_lab.ensembles.ensemble_base import MatrixSample

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps
MatrixLike = Union[MatrixSample, np.ndarray]


def _as_square(m: MatrixLike) -> np.ndarray:
    a = m.operator() if isinstance(m, MatrixSample) else np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError(f"Expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ParameterError("Empty matrix")
    return a


def _householder(x: np.ndarray):
    """Unit vector v with (I - 2vv*)x = alpha e1, or None if x is zero"""
    norm_x = np.linalg.norm(x)
    if norm_x == 0.0:
        return None, 0.0
    phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
    alpha = -phase * norm_x
    v = x.astype(complex)
    v[0] -= alpha
    v /= np.linalg.norm(v)
    return v, alpha


def householder_tridiagonal(a: np.ndarray):
    """
    Unitary reduction of a Hermitian matrix to real symmetric tridiagonal form

    The complex subdiagonal left by the reflections is replaced by its
    modulus, which is a diagonal unitary similarity.

    Returns:
        (d, e): diagonal (length N) and subdiagonal (length N-1)
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    for k in range(n - 2):
        v, _ = _householder(a[k + 1 :, k])
        if v is None:
            continue
        rows = a[k + 1 :, :]
        a[k + 1 :, :] = rows - 2.0 * np.outer(v, v.conj() @ rows)
        cols = a[:, k + 1 :]
        a[:, k + 1 :] = cols - 2.0 * np.outer(cols @ v, v.conj())
    return np.real(np.diag(a)).copy(), np.abs(np.diag(a, -1)).copy()


def tridiagonal_ql(d: np.ndarray, e: np.ndarray, max_sweeps: int) -> np.ndarray:
    """
    Eigenvalues of a real symmetric tridiagonal matrix by implicit QL

    Args:
        d: Diagonal
        e: Subdiagonal (e[i] couples i and i+1)
        max_sweeps: Total QL sweep cap; exceeding it raises ConvergenceError

    Returns:
        Ascending eigenvalues
    """
    d = np.array(d, dtype=float)
    n = d.size
    e = np.append(np.asarray(e, dtype=float), 0.0)
    sweeps = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise ConvergenceError(
                    f"Tridiagonal QL exceeded {max_sweeps} sweeps",
                    {"sweeps": sweeps, "unconverged_index": l, "n": n},
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(d)


def check_hermitian(a: np.ndarray) -> None:
    scale = max(1.0, float(np.max(np.abs(a))))
    asym = float(np.max(np.abs(a - a.conj().T)))
    if asym > 1e-12 * scale:
        raise ContractViolationError(f"Matrix is not Hermitian (max |A - A*| = {asym:.3e})")


def hermitian_eigenvalues(
    m: MatrixLike, tol: Optional[float] = None, method: str = "lapack", verify: Optional[bool] = None
) -> np.ndarray:
    """
    Ascending eigenvalues of a Hermitian matrix

    Args:
        m: MatrixSample or array
        tol: Relative residual tolerance (default from config)
        method: "lapack" (scipy eigvalsh) or "householder" (own reduction + QL)
        verify: Check every residual against tol (default: only for "householder")

    Returns:
        Sorted real eigenvalues, repeated with multiplicity
    """
    if tol is None:
        tol = config.numerics.eigen_tolerance
    if not tol > 0:
        raise ParameterError(f"Tolerance must be positive, got {tol}")
    a = _as_square(m)
    check_hermitian(a)
    if method == "lapack":
        eigs = np.sort(linalg.eigvalsh(a))
    elif method == "householder":
        d, e = householder_tridiagonal(a)
        eigs = tridiagonal_ql(d, e, config.numerics.sweep_cap_factor * a.shape[0])
    else:
        raise ParameterError(f"Unknown eigensolver method: {method}")
    if verify or verify is None and method != "lapack":
        _verify_residuals(a, eigs, tol, method)
    return eigs


def hessenberg_reduce(a: np.ndarray) -> np.ndarray:
    """Unitary similarity to upper Hessenberg form"""
    h = np.array(a, dtype=complex)
    n = h.shape[0]
    for k in range(n - 2):
        v, _ = _householder(h[k + 1 :, k])
        if v is None:
            continue
        rows = h[k + 1 :, :]
        h[k + 1 :, :] = rows - 2.0 * np.outer(v, v.conj() @ rows)
        cols = h[:, k + 1 :]
        h[:, k + 1 :] = cols - 2.0 * np.outer(cols @ v, v.conj())
    return np.triu(h, -1)


def _wilkinson_shift(h: np.ndarray, hi: int) -> complex:
    a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
    c, d = h[hi, hi - 1], h[hi, hi]
    half_trace = (a + d) / 2
    disc = np.sqrt(half_trace * half_trace - (a * d - b * c))
    mu1, mu2 = half_trace + disc, half_trace - disc
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def _qr_step(block: np.ndarray, mu: complex) -> np.ndarray:
    """One shifted QR step RQ + mu on a Hessenberg block via Givens rotations"""
    m = block.shape[0]
    b = block - mu * np.eye(m)
    rotations = []
    for k in range(m - 1):
        x, y = b[k, k], b[k + 1, k]
        r = math.hypot(abs(x), abs(y))
        if r == 0.0:
            c, s = 1.0 + 0j, 0j
        else:
            c, s = x / r, y / r
        g = np.array([[np.conj(c), np.conj(s)], [-s, c]])
        b[k : k + 2, k:] = g @ b[k : k + 2, k:]
        rotations.append(g)
    for k, g in enumerate(rotations):
        b[: k + 2, k : k + 2] = b[: k + 2, k : k + 2] @ g.conj().T
    return b + mu * np.eye(m)


def hessenberg_qr_eigenvalues(h: np.ndarray, max_iterations: int) -> np.ndarray:
    """
    Eigenvalues of an upper Hessenberg matrix by single-shift complex QR

    Deflates from the bottom; an exceptional shift is used after every ten
    iterations without deflation.
    """
    h = np.array(h, dtype=complex)
    n = h.shape[0]
    eigs = []
    hi = n - 1
    total = 0
    since_deflation = 0
    while hi >= 0:
        if hi == 0:
            eigs.append(h[0, 0])
            break
        lo = hi
        while lo > 0:
            if abs(h[lo, lo - 1]) <= EPS * (abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])):
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs.append(h[hi, hi])
            hi -= 1
            since_deflation = 0
            continue
        total += 1
        since_deflation += 1
        if total > max_iterations:
            raise ConvergenceError(
                f"Hessenberg QR exceeded {max_iterations} iterations",
                {"iterations": total, "active_block": (lo, hi)},
            )
        if since_deflation % 10 == 0:
            mu = h[hi, hi] + abs(h[hi, hi - 1]) * np.exp(0.5j * (since_deflation // 10))
        else:
            mu = _wilkinson_shift(h, hi)
        h[lo : hi + 1, lo : hi + 1] = _qr_step(h[lo : hi + 1, lo : hi + 1], mu)
    return np.array(eigs[::-1])


def general_eigenvalues(
    m: MatrixLike, tol: Optional[float] = None, method: str = "lapack", verify: Optional[bool] = None
) -> np.ndarray:
    """
    Eigenvalues of a general square matrix (unordered)

    Args:
        m: MatrixSample or array
        tol: Relative residual tolerance (default from config)
        method: "lapack" (scipy eigvals) or "hessenberg-qr" (own reduction + QR)
        verify: Check every residual against tol (default: only for "hessenberg-qr")

    Returns:
        Complex eigenvalues
    """
    if tol is None:
        tol = config.numerics.eigen_tolerance
    if not tol > 0:
        raise ParameterError(f"Tolerance must be positive, got {tol}")
    a = _as_square(m)
    if method == "lapack":
        eigs = linalg.eigvals(a)
    elif method == "hessenberg-qr":
        cap = config.numerics.sweep_cap_factor * a.shape[0]
        eigs = hessenberg_qr_eigenvalues(hessenberg_reduce(a), cap)
    else:
        raise ParameterError(f"Unknown eigensolver method: {method}")
    if verify or verify is None and method != "lapack":
        _verify_residuals(a, eigs, tol, method)
    return eigs


def eigen_residuals(m: MatrixLike, eigenvalues: np.ndarray) -> np.ndarray:
    """
    Relative residual min_v ||(M - lambda I)v|| / ||M|| for each eigenvalue

    The minimum over unit vectors is the smallest singular value of
    M - lambda I, so no eigenvector has to be formed.
    """
    a = _as_square(m).astype(complex)
    norm = max(float(np.linalg.norm(a, 2)), EPS)
    eye = np.eye(a.shape[0])
    return np.array([linalg.svdvals(a - lam * eye)[-1] / norm for lam in eigenvalues])


def _verify_residuals(a: np.ndarray, eigenvalues: np.ndarray, tol: float, method: str) -> None:
    residuals = eigen_residuals(a, eigenvalues)
    worst = int(np.argmax(residuals))
    if residuals[worst] > tol:
        raise ConvergenceError(
            f"Eigen residual {residuals[worst]:.3e} exceeds tolerance {tol:.3e} ({method})",
            {"max_residual": float(residuals[worst]), "index": worst, "tolerance": tol, "n": a.shape[0]},
        )
    logger.debug(f"{method}: max eigen residual {residuals[worst]:.3e} on N={a.shape[0]}")
