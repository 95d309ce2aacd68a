"""Dense real Schur decomposition: Householder Hessenberg reduction followed by
the Francis implicitly double-shifted QR iteration.

Real eigenvalues are read off structurally from the 1x1 diagonal blocks of the
quasi-triangular factor; 2x2 blocks are standardised so that a block is kept
only when its eigenvalues are a complex-conjugate pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

EPS = 2.220446049250313e-16
MAX_ITERS_PER_EIGENVALUE = 30


class SchurConvergenceError(ArithmeticError):
    def __init__(self, msg: str, partial: "SchurResult | None" = None):
        super().__init__(msg)
        self.partial = partial


@njit(cache=True, nogil=True)
def _hessenberg(A, Q):
    n = A.shape[0]
    for k in range(n - 2):
        alpha = 0.0
        for i in range(k + 1, n):
            alpha += A[i, k] * A[i, k]
        alpha = math.sqrt(alpha)
        if alpha == 0.0:
            continue
        if A[k + 1, k] > 0:
            alpha = -alpha
        v = np.zeros(n)
        for i in range(k + 1, n):
            v[i] = A[i, k]
        v[k + 1] -= alpha
        vn = 0.0
        for i in range(k + 1, n):
            vn += v[i] * v[i]
        if vn == 0.0:
            continue
        scale = 2.0 / vn
        # A <- (I - scale v v^T) A
        for j in range(k, n):
            s = 0.0
            for i in range(k + 1, n):
                s += v[i] * A[i, j]
            s *= scale
            for i in range(k + 1, n):
                A[i, j] -= s * v[i]
        # A <- A (I - scale v v^T), Q likewise
        for i in range(n):
            s = 0.0
            t = 0.0
            for j in range(k + 1, n):
                s += A[i, j] * v[j]
                t += Q[i, j] * v[j]
            s *= scale
            t *= scale
            for j in range(k + 1, n):
                A[i, j] -= s * v[j]
                Q[i, j] -= t * v[j]
        A[k + 1, k] = alpha
        for i in range(k + 2, n):
            A[i, k] = 0.0


@njit(cache=True, nogil=True)
def _sign(a, b):
    return abs(a) if b >= 0 else -abs(a)


@njit(cache=True, nogil=True)
def _lanv2(a, b, c, d):
    """Standardise a real 2x2 block; returns (a, b, c, d, cs, sn).

    The rotation R = [[cs, -sn], [sn, cs]] satisfies old = R new R^T.  On
    return c == 0 when the eigenvalues are real, otherwise a == d and
    b*c < 0.
    """
    if c == 0.0:
        return a, b, c, d, 1.0, 0.0
    if b == 0.0:
        return d, -c, 0.0, a, 0.0, 1.0
    if (a - d) == 0.0 and _sign(1.0, b) != _sign(1.0, c):
        return a, b, c, d, 1.0, 0.0
    temp = a - d
    p = 0.5 * temp
    bcmax = max(abs(b), abs(c))
    bcmis = min(abs(b), abs(c)) * _sign(1.0, b) * _sign(1.0, c)
    scale = max(abs(p), bcmax)
    z = (p / scale) * p + (bcmax / scale) * bcmis
    if z >= 4.0 * EPS:
        z = p + _sign(math.sqrt(scale) * math.sqrt(z), p)
        a = d + z
        d = d - (bcmax / z) * bcmis
        tau = math.hypot(c, z)
        cs = z / tau
        sn = c / tau
        b = b - c
        c = 0.0
        return a, b, c, d, cs, sn
    sigma = b + c
    tau = math.hypot(sigma, temp)
    cs = math.sqrt(0.5 * (1.0 + abs(sigma) / tau))
    sn = -(p / (tau * cs)) * _sign(1.0, sigma)
    aa = a * cs + b * sn
    bb = -a * sn + b * cs
    cc = c * cs + d * sn
    dd = -c * sn + d * cs
    a = aa * cs + cc * sn
    b = bb * cs + dd * sn
    c = -aa * sn + cc * cs
    d = -bb * sn + dd * cs
    temp = 0.5 * (a + d)
    a = temp
    d = temp
    if c != 0.0:
        if b != 0.0:
            if _sign(1.0, b) == _sign(1.0, c):
                sab = math.sqrt(abs(b))
                sac = math.sqrt(abs(c))
                p = _sign(sab * sac, c)
                tau = 1.0 / math.sqrt(abs(b + c))
                a = temp + p
                d = temp - p
                b = b - c
                c = 0.0
                cs1 = sab * tau
                sn1 = sac * tau
                temp = cs * cs1 - sn * sn1
                sn = cs * sn1 + sn * cs1
                cs = temp
        else:
            b = -c
            c = 0.0
            temp = cs
            cs = -sn
            sn = temp
    return a, b, c, d, cs, sn


@njit(cache=True, nogil=True)
def _rotate_block(H, Z, k, cs, sn):
    """Apply R^T from the left to rows k, k+1 (columns k+2..) and R from the right
    to columns k, k+1 (rows ..k-1) of H, and to the columns of Z."""
    n = H.shape[0]
    for j in range(k + 2, n):
        x = H[k, j]
        y = H[k + 1, j]
        H[k, j] = cs * x + sn * y
        H[k + 1, j] = cs * y - sn * x
    for i in range(k):
        x = H[i, k]
        y = H[i, k + 1]
        H[i, k] = cs * x + sn * y
        H[i, k + 1] = cs * y - sn * x
    for i in range(n):
        x = Z[i, k]
        y = Z[i, k + 1]
        Z[i, k] = cs * x + sn * y
        Z[i, k + 1] = cs * y - sn * x


@njit(cache=True, nogil=True)
def _reflect3(H, Z, k, lo_col, hi_row, x, y, z, m):
    """Householder reflector mapping (x, y, z) (or (x, y) when m == 2) onto e1,
    applied to rows k..k+m-1 of H from column lo_col, to columns k..k+m-1 of
    H for rows 0..hi_row, and to the same columns of Z."""
    n = H.shape[0]
    alpha = math.sqrt(x * x + y * y + z * z)
    if alpha == 0.0:
        return
    if x > 0:
        alpha = -alpha
    v0 = x - alpha
    v1 = y
    v2 = z
    vn = v0 * v0 + v1 * v1 + v2 * v2
    if vn == 0.0:
        return
    scale = 2.0 / vn
    for j in range(lo_col, n):
        s = v0 * H[k, j] + v1 * H[k + 1, j]
        if m == 3:
            s += v2 * H[k + 2, j]
        s *= scale
        H[k, j] -= s * v0
        H[k + 1, j] -= s * v1
        if m == 3:
            H[k + 2, j] -= s * v2
    for i in range(hi_row + 1):
        s = H[i, k] * v0 + H[i, k + 1] * v1
        if m == 3:
            s += H[i, k + 2] * v2
        s *= scale
        H[i, k] -= s * v0
        H[i, k + 1] -= s * v1
        if m == 3:
            H[i, k + 2] -= s * v2
    for i in range(n):
        s = Z[i, k] * v0 + Z[i, k + 1] * v1
        if m == 3:
            s += Z[i, k + 2] * v2
        s *= scale
        Z[i, k] -= s * v0
        Z[i, k + 1] -= s * v1
        if m == 3:
            Z[i, k + 2] -= s * v2


@njit(cache=True, nogil=True)
def _francis(H, Z, max_its):
    """Reduce Hessenberg H to standardised quasi-triangular form in place.

    ``max_its`` bounds the total number of QR sweeps.  Returns 0 on success,
    otherwise 1 + the index of the block that failed.
    """
    n = H.shape[0]
    norm = 0.0
    for i in range(n):
        for j in range(n):
            norm += H[i, j] * H[i, j]
    norm = math.sqrt(norm)
    hi = n - 1
    its = 0
    total = 0
    while hi >= 0:
        if hi == 0:
            hi -= 1
            continue
        l = hi
        while l > 0:
            s = abs(H[l - 1, l - 1]) + abs(H[l, l])
            if s == 0.0:
                s = norm
            if abs(H[l, l - 1]) <= EPS * s:
                H[l, l - 1] = 0.0
                break
            l -= 1
        if l == hi:
            hi -= 1
            its = 0
            continue
        if l == hi - 1:
            k = hi - 1
            a, b, c, d, cs, sn = _lanv2(H[k, k], H[k, k + 1], H[k + 1, k], H[k + 1, k + 1])
            H[k, k] = a
            H[k, k + 1] = b
            H[k + 1, k] = c
            H[k + 1, k + 1] = d
            _rotate_block(H, Z, k, cs, sn)
            hi -= 2
            its = 0
            continue
        if total >= max_its:
            return hi + 1
        its += 1
        total += 1
        if its % 20 == 10:
            # exceptional shift centred near the top of the active block
            sh = abs(H[l + 1, l]) + abs(H[l + 2, l + 1])
            h11 = 0.75 * sh + H[l, l]
            ssum = 2.0 * h11
            sprod = h11 * h11 + 0.4375 * sh * sh
        elif its % 20 == 0:
            # exceptional shift centred near the bottom
            sh = abs(H[hi, hi - 1]) + abs(H[hi - 1, hi - 2])
            h11 = 0.75 * sh + H[hi, hi]
            ssum = 2.0 * h11
            sprod = h11 * h11 + 0.4375 * sh * sh
        else:
            ssum = H[hi - 1, hi - 1] + H[hi, hi]
            sprod = H[hi - 1, hi - 1] * H[hi, hi] - H[hi - 1, hi] * H[hi, hi - 1]
        x = H[l, l] * H[l, l] + H[l, l + 1] * H[l + 1, l] - ssum * H[l, l] + sprod
        y = H[l + 1, l] * (H[l, l] + H[l + 1, l + 1] - ssum)
        z = H[l + 1, l] * H[l + 2, l + 1]
        for k in range(l, hi - 1):
            col = k - 1 if k > l else l
            row = min(k + 3, hi)
            _reflect3(H, Z, k, col, row, x, y, z, 3)
            if k > l:
                H[k + 1, k - 1] = 0.0
                H[k + 2, k - 1] = 0.0
            x = H[k + 1, k]
            y = H[k + 2, k]
            if k < hi - 2:
                z = H[k + 3, k]
        k = hi - 1
        _reflect3(H, Z, k, k - 1, hi, x, y, 0.0, 2)
        H[hi, hi - 2] = 0.0
    return 0


@dataclass
class SchurResult:
    Q: np.ndarray
    T: np.ndarray
    real_eigenvalues: np.ndarray
    complex_pairs: np.ndarray  # (re, im) with im > 0, one row per conjugate pair

    @property
    def n_real(self) -> int:
        return len(self.real_eigenvalues)

    def eigenvalues(self) -> np.ndarray:
        pairs = self.complex_pairs
        cplx = np.concatenate([pairs[:, 0] + 1j * pairs[:, 1], pairs[:, 0] - 1j * pairs[:, 1]])
        return np.concatenate([self.real_eigenvalues.astype(complex), cplx])

    def backward_error(self, X: np.ndarray) -> float:
        """||Q T Q^T - X||_F / ||X||_F."""
        nx = np.linalg.norm(X)
        return float(np.linalg.norm(self.Q @ self.T @ self.Q.T - X) / (nx if nx else 1.0))


def _split_blocks(T: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = T.shape[0]
    real, pairs = [], []
    i = 0
    while i < n:
        if i + 1 < n and T[i + 1, i] != 0.0:
            re = T[i, i]
            im = math.sqrt(abs(T[i, i + 1]) * abs(T[i + 1, i]))
            pairs.append((re, im))
            i += 2
        else:
            real.append(T[i, i])
            i += 1
    return np.array(real, dtype=float), np.array(pairs, dtype=float).reshape(-1, 2)


def real_schur(X: np.ndarray) -> SchurResult:
    """Real Schur form X = Q T Q^T with standardised 2x2 blocks."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise ValueError("need a square matrix")
    if not np.all(np.isfinite(X)):
        raise ValueError("matrix has non-finite entries")
    n = X.shape[0]
    T = np.array(X, dtype=float, order="C", copy=True)
    Q = np.eye(n)
    if n > 2:
        _hessenberg(T, Q)
    status = _francis(T, Q, MAX_ITERS_PER_EIGENVALUE * max(10, n))
    # clear rounding noise strictly below the block structure
    for i in range(2, n):
        T[i, : i - 1] = 0.0
    real, pairs = _split_blocks(T)
    res = SchurResult(Q, T, real, pairs)
    if status:
        raise SchurConvergenceError(
            f"QR iteration budget exhausted at active block ending {status - 1}", res)
    return res
