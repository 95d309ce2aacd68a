"""Monte Carlo sampling of elliptic real Ginibre matrices and their real spectra."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.special import ndtri

from .schur import SchurResult, real_schur

CONVENTIONS = ("unit", "overN")
THREADS_ENV = "EGINOE_THREADS"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _gaussians(seed: int, index: int, count: int) -> np.ndarray:
    """Standard normals for one sample, keyed by (seed, sample index).

    The Philox stream position plays the role of the entry index, so each
    sample is reproducible independently of which worker draws it.
    Uniforms ((raw >> 11) + 1/2) 2^-53 lie strictly inside (0, 1) and are
    mapped through the inverse normal CDF.
    """
    bitgen = np.random.Philox(key=np.array([seed, index], dtype=np.uint64))
    raw = bitgen.random_raw(count)
    u = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53
    return ndtri(u)


def sample_matrix(n: int, tau: float, seed: int, convention: str = "overN",
                  index: int = 0) -> np.ndarray:
    """X = sqrt((1+tau)/2) S_+ + sqrt((1-tau)/2) S_-, S_pm = (G +- G^T)/sqrt(2).

    Written as c_+ G + c_- G^T with c_pm = (sqrt(1+tau) +- sqrt(1-tau))/2, so
    tau = 0 returns G itself and tau = 1 an exactly symmetric matrix.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    tau = float(tau)
    if not 0 <= tau <= 1:
        raise ValueError("tau must lie in [0, 1]")
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    G = _gaussians(seed, index, n * n).reshape(n, n)
    if convention == "overN":
        G = G / math.sqrt(n)
    sp, sm = math.sqrt(1 + tau), math.sqrt(1 - tau)
    cp, cm = (sp + sm) / 2, (sp - sm) / 2
    if cm == 0.0:
        return G.copy()
    return cp * G + cm * G.T


@dataclass
class SampleRecord:
    index: int
    real_eigenvalues: np.ndarray
    complex_pairs: np.ndarray
    backward_error: float


@dataclass
class EmpiricalStats:
    n: int
    tau: float
    samples: int
    convention: str
    mean_count: float
    se_count: float
    power_means: dict = field(default_factory=dict)
    power_ses: dict = field(default_factory=dict)
    max_backward_error: float = 0.0
    parity_violations: int = 0
    counts: np.ndarray | None = None


def sample_spectrum(n: int, tau: float, seed: int, index: int, convention: str) -> SampleRecord:
    X = sample_matrix(n, tau, seed, convention, index)
    res: SchurResult = real_schur(X)
    return SampleRecord(index, res.real_eigenvalues, res.complex_pairs, res.backward_error(X))


def run_samples(n: int, tau: float, samples: int, seed: int = 0, convention: str = "overN",
                threads: int | None = None) -> list[SampleRecord]:
    """Sample and decompose; results come back in sample order whatever the worker count."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    threads = threads or default_threads()
    work = lambda i: sample_spectrum(n, tau, seed, i, convention)
    if threads == 1:
        return [work(i) for i in range(samples)]
    with ThreadPoolExecutor(threads) as pool:
        return list(pool.map(work, range(samples)))


def empirical_stats(n: int, tau: float, samples: int, seed: int = 0,
                    p_list: Sequence[int] = (2,), convention: str = "overN",
                    threads: int | None = None) -> EmpiricalStats:
    """Mean and standard error of the real count and of sum(lambda^p) over real eigenvalues."""
    recs = run_samples(n, tau, samples, seed, convention, threads)
    counts = np.array([len(r.real_eigenvalues) for r in recs], dtype=float)
    st = EmpiricalStats(n, float(tau), samples, convention,
                        float(counts.mean()),
                        float(counts.std(ddof=1) / math.sqrt(samples)) if samples > 1 else math.nan)
    for p in p_list:
        sums = np.array([math.fsum(r.real_eigenvalues ** p) for r in recs])
        st.power_means[p] = float(sums.mean())
        st.power_ses[p] = float(sums.std(ddof=1) / math.sqrt(samples)) if samples > 1 else math.nan
    st.max_backward_error = max(r.backward_error for r in recs)
    st.parity_violations = int(np.sum((counts - n) % 2 != 0))
    st.counts = counts
    return st
