import math

import numpy as np
import pytest

from eginoe.sampler import sample_matrix
from eginoe.schur import SchurConvergenceError, real_schur


def jacobi_eigenvalues(S: np.ndarray, sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi rotations for a symmetric matrix (independent oracle)."""
    A = np.array(S, dtype=float)
    n = A.shape[0]
    scale = np.linalg.norm(A)
    for _ in range(sweeps):
        off = math.sqrt(max(np.sum(A * A) - np.sum(np.diag(A) ** 2), 0.0))
        if off < 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(A[p, q]) < 1e-18 * scale:
                    continue
                theta = (A[q, q] - A[p, p]) / (2 * A[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                J = np.eye(n)
                J[p, p] = J[q, q] = c
                J[p, q], J[q, p] = s, -s
                A = J.T @ A @ J
    return np.sort(np.diag(A))


def test_rotation_has_no_real_eigenvalues():
    th = math.pi / 3
    R = np.array([[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]])
    res = real_schur(R)
    assert res.n_real == 0 and len(res.complex_pairs) == 1
    re, im = res.complex_pairs[0]
    assert re == pytest.approx(0.5, abs=1e-15) and im == pytest.approx(math.sqrt(3) / 2, abs=1e-15)


def test_triangular_input():
    T = np.triu(np.arange(1.0, 26.0).reshape(5, 5))
    res = real_schur(T)
    assert res.n_real == 5
    assert np.allclose(np.sort(res.real_eigenvalues), np.sort(np.diag(T)), atol=1e-12)


@pytest.mark.parametrize("n", [5, 12, 30])
def test_symmetric_matches_jacobi(n):
    rng = np.random.default_rng(n)
    G = rng.standard_normal((n, n))
    S = (G + G.T) / 2
    res = real_schur(S)
    assert res.n_real == n
    assert np.allclose(np.sort(res.real_eigenvalues), jacobi_eigenvalues(S), atol=1e-9)


@pytest.mark.parametrize("n", [10, 50, 100, 200])
def test_backward_stability(n):
    reps = 100 if n <= 100 else 20
    for i in range(reps):
        X = sample_matrix(n, 0.3 + 0.4 * (i % 2), seed=11, convention="unit", index=i)
        res = real_schur(X)
        assert res.backward_error(X) <= 1e-10
        assert np.abs(res.Q.T @ res.Q - np.eye(n)).max() <= 1e-12
        assert res.n_real + 2 * len(res.complex_pairs) == n
        assert np.all(np.tril(res.T, -2) == 0)
        assert (res.n_real - n) % 2 == 0


def test_eigenvalues_match_numpy():
    X = sample_matrix(60, 0.5, seed=3, convention="unit")
    ours = np.sort_complex(real_schur(X).eigenvalues())
    ref = np.sort_complex(np.linalg.eigvals(X))
    assert np.allclose(ours, ref, atol=1e-9)


def test_standardised_blocks():
    X = sample_matrix(40, 0.0, seed=5)
    T = real_schur(X).T
    for i in range(39):
        if T[i + 1, i] != 0.0:
            assert T[i, i] == T[i + 1, i + 1]
            assert T[i, i + 1] * T[i + 1, i] < 0


def test_input_validation():
    with pytest.raises(ValueError):
        real_schur(np.ones((2, 3)))
    with pytest.raises(ValueError):
        real_schur(np.array([[1.0, np.nan], [0.0, 1.0]]))
    res = real_schur(np.array([[4.0]]))
    assert res.real_eigenvalues.tolist() == [4.0]


def test_exhausted_budget_raises_with_partial_result(monkeypatch):
    import eginoe.schur as schur
    monkeypatch.setattr(schur, "MAX_ITERS_PER_EIGENVALUE", 0)
    X = sample_matrix(20, 0.5, seed=1)
    with pytest.raises(SchurConvergenceError) as info:
        schur.real_schur(X)
    assert info.value.partial is not None and info.value.partial.T.shape == (20, 20)
