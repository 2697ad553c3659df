"""Spectral building blocks for circular coherent-state superpositions.

Everything here works on plain numpy arrays of length N, with index
arithmetic understood modulo N.  The discrete Fourier transform carries
the 1/N factor on the forward direction, so that the flat vector
(1, 1, ..., 1) maps to the unit mass at the DC bin.
"""

import math

import numpy as np
import scipy.linalg


def dft(v):
    """Forward DFT:  v~(k) = (1/N) sum_m v(m) exp(-i 2 pi k m / N)."""
    v = np.asarray(v, dtype=complex)
    if v.size == 0:
        raise ValueError("dft of empty vector")
    return np.fft.fft(v) / v.size


def idft(v):
    """Inverse DFT:  v(m) = sum_k v~(k) exp(+i 2 pi k m / N)."""
    v = np.asarray(v, dtype=complex)
    if v.size == 0:
        raise ValueError("idft of empty vector")
    return np.fft.ifft(v) * v.size


def gram_vector(alpha0, n):
    """Inner products g(m) = <alpha_0|alpha_m> of coherent states on a circle.

    g(m) = exp{|alpha0|^2 (exp(i 2 pi m / N) - 1)}, m = 0..N-1.
    Satisfies g(0) = 1 and g(-m mod N) = conj(g(m)).
    """
    if n < 1:
        raise ValueError("component count must be >= 1")
    mu = abs(alpha0) ** 2
    m = np.arange(n)
    return np.exp(mu * (np.exp(2j * np.pi * m / n) - 1.0))


def gram_matrix(alpha0, n):
    """Circulant Gram matrix G[m, n'] = g((m - n') mod N)."""
    return scipy.linalg.circulant(gram_vector(alpha0, n))


def g_tilde(mu, n):
    """Poisson mass per residue class: g~(k) = sum_{j = k mod N} Pois(mu, j).

    This is the DFT of the Gram vector at mu = |alpha0|^2.  All entries are
    positive for mu > 0 and sum to one.  Computed by the stable pmf
    recurrence p_{j+1} = p_j mu/(j+1), accumulated into residue classes.
    """
    if mu < 0:
        raise ValueError("mean photon number must be >= 0")
    if n < 1:
        raise ValueError("component count must be >= 1")
    out = np.zeros(n)
    j_max = int(math.ceil(mu + 40.0 * math.sqrt(mu + 1.0) + n))
    p = math.exp(-mu)
    for j in range(j_max + 1):
        out[j % n] += p
        p *= mu / (j + 1)
    return out


def shannon_entropy(p):
    """Base-2 Shannon entropy with the convention 0 log 0 = 0.

    Weights below 1e-15 are treated as exact zeros so that eigensolver
    noise cannot feed log of a denormal into the sum.
    """
    p = np.asarray(p, dtype=float)
    nz = p[p >= 1e-15]
    if nz.size == 0:
        return 0.0
    return float(-np.sum(nz * np.log2(nz)))


def binomial_dist(q):
    """Weights P(k) = C(q, k) 2^-q for k = 0..q."""
    if q < 0:
        raise ValueError("q must be >= 0")
    return np.array([math.comb(q, k) for k in range(q + 1)], dtype=float) * 2.0 ** -q


def hermitian_eigenvalues(m, *, tol=1e-9):
    """All eigenvalues of a Hermitian matrix, in descending order.

    Rejects input whose asymmetry ||M - M^dag||_max exceeds `tol`.
    Tiny negative eigenvalues in [-1e-12, 0), which occur for PSD
    matrices with rounding noise, are clipped to zero.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    asym = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if asym > tol:
        raise ValueError(f"matrix is not Hermitian (asymmetry {asym:.3e})")
    w = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    w = w[::-1].copy()
    w[(w >= -1e-12) & (w < 0.0)] = 0.0
    return w
