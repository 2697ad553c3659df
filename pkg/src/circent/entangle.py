"""Two-mode entanglement of circular states.

Three routes to the entanglement of formation of the state obtained by
splitting a circular state on a symmetric beam splitter:

* the closed-form Schmidt decomposition for RICS,
  lambda_k = g~(k) g~(q-k) / g~1(q);
* eigenvalues of the N x N partial density matrix expressed in the RICS
  basis (exact for any circular state);
* an independent truncated-Fock oracle that simulates the beam splitter
  directly and never touches the Gram-vector machinery.

Throughout, `alpha0` is the per-mode circle radius of the two-mode state;
the corresponding beam-splitter input lives on the circle of radius
sqrt(2) alpha0.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .spectral import dft, g_tilde, gram_vector, hermitian_eigenvalues, shannon_entropy
from .states import (
    SQRT2,
    CircularState,
    RICSLabel,
    StateSpec,
    circular_fock_expansion,
    in_state,
)

METHOD_ANALYTIC = "analytic-rics"
METHOD_EIG = "rics-basis-eig"
METHOD_ORACLE = "fock-oracle"

# PSD rounding noise below this magnitude is clipped; anything more
# negative indicates a genuinely broken matrix.
NEGATIVE_EIGENVALUE_FLOOR = -1e-12


@dataclass
class SchmidtDecomposition:
    """Schmidt coefficients plus the mode pairing |c_k>_A |c_(q-k)>_B."""

    lambdas: np.ndarray
    pairing: list


@dataclass
class EntanglementReport:
    e_bits: float
    method: str
    n: int
    alpha0: complex
    descriptor: str
    lambdas: np.ndarray


def schmidt_rics(label):
    """Closed-form Schmidt decomposition of a two-mode RICS.

    lambda_k = g~(k) g~((q-k) mod N) / g~1(q), with g~ at mu = |alpha0|^2
    and g~1 at the doubled mean photon number 2|alpha0|^2.
    """
    if label.alpha0 == 0:
        raise ValueError("RICS requires a nonzero circle radius")
    n, q = label.n, label.q
    gt = g_tilde(label.mu, n)
    gt1 = g_tilde(2.0 * label.mu, n)
    k = np.arange(n)
    lambdas = gt * gt[(q - k) % n] / gt1[q]
    pairing = [(int(kk), int((q - kk) % n)) for kk in k]
    return SchmidtDecomposition(lambdas=lambdas, pairing=pairing)


def entanglement_rics(label):
    """Entanglement of formation of a two-mode RICS from the analytic spectrum."""
    dec = schmidt_rics(label)
    return EntanglementReport(
        e_bits=shannon_entropy(dec.lambdas),
        method=METHOD_ANALYTIC,
        n=label.n,
        alpha0=label.alpha0,
        descriptor=f"rics q={label.q}",
        lambdas=dec.lambdas,
    )


def partial_density_rics_basis(state):
    """Partial density matrix of one mode in the RICS basis.

    `state` carries the shared coefficient vector of the two-mode
    superposition and the per-mode radius alpha0.  The matrix is
    R'[m, n'] = N^2 sqrt(g~(m) g~(n')) sum_k c~(m+k) g~(k) conj(c~(k+n'))
    with all indices modulo N; it is rescaled to exact unit trace after
    a consistency check that the input was normalized.
    """
    n = state.n
    gt = g_tilde(state.mu, n)
    ctilde = dft(state.coeffs)
    idx = np.arange(n)
    t = ctilde[(idx[:, None] + idx[None, :]) % n]
    core = t @ np.diag(gt) @ t.conj().T
    rho = n * n * np.sqrt(np.outer(gt, gt)) * core
    trace = float(np.real(np.trace(rho)))
    if abs(trace - 1.0) > 1e-6:
        raise ValueError(f"input state is not normalized (trace {trace:.8f})")
    return rho / trace


def partial_density_kerr(n, alpha0):
    """Partial density matrix of one mode of a beam-split Kerr state.

    R'[m, n'] = sqrt(g~(m) g~(n')) g((n'-m) mod N)
                exp(i pi (n'(n'-p) - m(m-p)) / N),  p = N mod 2,
    with g, g~ at the per-mode radius; rescaled to exact unit trace.
    """
    if n < 1:
        raise ValueError("component count must be >= 1")
    p = n % 2
    gt = g_tilde(abs(alpha0) ** 2, n)
    g = gram_vector(alpha0, n)
    idx = np.arange(n)
    phase = np.exp(1j * np.pi * idx * (idx - p) / n)
    rho = np.sqrt(np.outer(gt, gt)) * g[(idx[None, :] - idx[:, None]) % n]
    rho = rho * np.conj(phase)[:, None] * phase[None, :]
    trace = float(np.real(np.trace(rho)))
    return rho / trace


def _entropy_of_density(rho):
    w = hermitian_eigenvalues(rho)
    if w[-1] < NEGATIVE_EIGENVALUE_FLOOR:
        raise ValueError(f"density matrix has a negative eigenvalue {w[-1]:.3e}")
    return shannon_entropy(w), w


def entanglement_general(spec):
    """Entanglement of any circular (or Kerr) state via the RICS-basis eigenproblem."""
    if spec.kind == "kerr":
        rho = partial_density_kerr(spec.n, spec.alpha0)
    else:
        src = in_state(spec)
        two_mode = CircularState(spec.n, spec.alpha0, src.coeffs)
        rho = partial_density_rics_basis(two_mode)
    e_bits, w = _entropy_of_density(rho)
    return EntanglementReport(
        e_bits=e_bits,
        method=METHOD_EIG,
        n=spec.n,
        alpha0=spec.alpha0,
        descriptor=spec.kind if spec.q is None else f"{spec.kind} q={spec.q}",
        lambdas=w,
    )


def fock_oracle(in_amps):
    """Truncated-Fock beam-splitter oracle, independent of the RICS machinery.

    Splits the single-mode input |psi> = sum_n a_n |n> on a symmetric beam
    splitter, |n>|0> -> sum_m sqrt(C(n, m)) 2^(-n/2) |m>|n-m>, traces out
    the second mode, and returns the entropy of the reduced density matrix.
    """
    a = np.asarray(in_amps, dtype=complex)
    k = a.size
    norm = float(np.sum(np.abs(a) ** 2))
    if abs(norm - 1.0) > 1e-6:
        raise ValueError(f"input Fock vector is not normalized (norm^2 {norm:.8f})")
    psi = np.zeros((k, k), dtype=complex)
    for total in np.nonzero(a)[0]:
        m = np.arange(total + 1)
        log_binom = gammaln(total + 1.0) - gammaln(m + 1.0) - gammaln(total - m + 1.0)
        psi[m, total - m] = a[total] * np.exp(0.5 * log_binom - 0.5 * total * math.log(2.0))
    rho = psi @ psi.conj().T
    e_bits, w = _entropy_of_density(rho)
    return EntanglementReport(
        e_bits=e_bits,
        method=METHOD_ORACLE,
        n=k,
        alpha0=0.0,
        descriptor="fock",
        lambdas=w,
    )


def fock_oracle_for(spec, cutoff=None):
    """Run the Fock oracle on the beam-splitter input state of a descriptor."""
    src = in_state(spec)
    amps = circular_fock_expansion(src, cutoff)
    report = fock_oracle(amps)
    report.n = spec.n
    report.alpha0 = spec.alpha0
    report.descriptor = spec.kind if spec.q is None else f"{spec.kind} q={spec.q}"
    return report


def _two_term_weight(n, alpha0):
    """w = X/(1+X) with X = (2|alpha0|^2)^N / N!, evaluated in log space."""
    mu2 = 2.0 * abs(alpha0) ** 2
    if mu2 == 0:
        return 0.0
    log_x = n * math.log(mu2) - float(gammaln(n + 1.0))
    if log_x > 700:
        return 1.0
    x = math.exp(log_x)
    return x / (1.0 + x)


def asymptotic_binomial_entropy(n, alpha0):
    """Weighted binomial-entropy term B(N) of the two-term approximation."""
    if n < 1:
        raise ValueError("component count must be >= 1")
    w = _two_term_weight(n, alpha0)
    return w * 0.5 * math.log2(math.pi * math.e * n / 2.0)


def asymptotic_weight_entropy(n, alpha0):
    """Weight-entropy term S(N): binary entropy of the vacuum/|N> split."""
    if n < 1:
        raise ValueError("component count must be >= 1")
    w = _two_term_weight(n, alpha0)
    if w <= 0.0 or w >= 1.0:
        return 0.0
    return -w * math.log2(w) - (1.0 - w) * math.log2(1.0 - w)


@dataclass
class Thresholds:
    n1: float
    n2: float
    e_bin: float


def thresholds(alpha0, q):
    """Region boundaries N1 = pi |alpha0|, N2 = 2e |alpha0|^2 and the
    large-q plateau estimate E_bin(q) = (1/2) log2(pi e q / 2)."""
    if alpha0 == 0:
        raise ValueError("requires a nonzero circle radius")
    if q < 0:
        raise ValueError("q must be >= 0")
    r = abs(alpha0)
    e_bin = float("-inf") if q == 0 else 0.5 * math.log2(math.pi * math.e * q / 2.0)
    return Thresholds(n1=math.pi * r, n2=2.0 * math.e * r * r, e_bin=e_bin)


@dataclass
class BoundsReport:
    max_q_e: float
    best_q: int
    lower: float
    upper: float
    satisfied: bool


def bounds_check(alpha0, n):
    """Check (1/2) log2 N < max_q E <= log2 N by exhaustive sweep over q.

    Verified in the paper-backed regime 0 < |alpha0| <= 4 only.
    """
    if not 0 < abs(alpha0) <= 4:
        raise ValueError("bounds are only claimed for 0 < |alpha0| <= 4")
    if n < 1:
        raise ValueError("component count must be >= 1")
    best_q, best_e = 0, -1.0
    for q in range(n):
        e = entanglement_rics(RICSLabel(q, n, alpha0)).e_bits
        if e > best_e:
            best_q, best_e = q, e
    lower = 0.5 * math.log2(n)
    upper = math.log2(n)
    if n == 1:
        satisfied = True
    else:
        satisfied = lower < best_e <= upper + 1e-9
    return BoundsReport(max_q_e=best_e, best_q=best_q, lower=lower, upper=upper,
                        satisfied=satisfied)


def max_rics_entanglement(alpha0, n):
    """Maximum over q of the two-mode RICS entanglement, ties to smallest q."""
    best_e = 0.0
    for q in range(n):
        e = entanglement_rics(RICSLabel(q, n, alpha0)).e_bits
        if e > best_e:
            best_e = e
    return best_e
