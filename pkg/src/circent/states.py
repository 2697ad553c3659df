"""Single-mode circular states: constructors, Fock expansions, RICS basis.

A circular state is a superposition sum_m c_m |alpha_m> of N coherent
states with amplitudes alpha_m = alpha0 exp(-i 2 pi m / N) placed
equidistantly on a circle of radius |alpha0|.  The rotationally-invariant
members (RICS) |c_q> are the eigenstates of the N-fold phase-space
rotation and carry Fock support only on photon numbers n = q (mod N).
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .spectral import dft, g_tilde, gram_matrix, idft

SQRT2 = math.sqrt(2.0)

NORM_TOL = 1e-8


@dataclass(frozen=True)
class RICSLabel:
    """Identifies the RICS |c_q> for N components on the circle of radius |alpha0|."""

    q: int
    n: int
    alpha0: complex

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("component count must be >= 1")
        if not 0 <= self.q <= self.n - 1:
            raise ValueError(f"q must lie in [0, {self.n - 1}]")

    @property
    def mu(self):
        return abs(self.alpha0) ** 2


@dataclass
class CircularState:
    """Coefficient-vector representation of a circular state.

    `coeffs` are the c_m of the superposition over the coherent components
    at radius |alpha0|; physical normalization means c^dag G c = 1 with G
    the circulant Gram matrix of the components.
    """

    n: int
    alpha0: complex
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.shape != (self.n,):
            raise ValueError("coefficient vector length must equal the component count")

    @property
    def mu(self):
        return abs(self.alpha0) ** 2

    def norm_sq(self):
        """Physical norm <psi|psi> = c^dag G c (real up to rounding)."""
        g = gram_matrix(self.alpha0, self.n)
        return float(np.real(np.vdot(self.coeffs, g @ self.coeffs)))


def rics_state(label):
    """Coefficients of the RICS |c_q>:  c_m = exp(i 2 pi m q / N) / (N sqrt(g~(q)))."""
    if label.alpha0 == 0:
        raise ValueError("RICS requires a nonzero circle radius")
    gt = g_tilde(label.mu, label.n)
    m = np.arange(label.n)
    c = np.exp(2j * np.pi * m * label.q / label.n) / (label.n * math.sqrt(gt[label.q]))
    return CircularState(label.n, label.alpha0, c)


def kerr_state(n, alpha0):
    """Equally weighted circular state with quadratic relative phases.

    Spectral coefficients c~_k = (1/N) exp(-i pi k (k - p) / N), p = N mod 2,
    then numerically rescaled to unit physical norm.
    """
    if n < 1:
        raise ValueError("component count must be >= 1")
    p = n % 2
    k = np.arange(n)
    ctilde = np.exp(-1j * np.pi * k * (k - p) / n) / n
    c = idft(ctilde)
    state = CircularState(n, alpha0, c)
    norm = math.sqrt(state.norm_sq())
    state.coeffs = c / norm
    return state


def custom_state(n, alpha0, coeffs):
    """Circular state from raw coefficients, rescaled to unit physical norm."""
    state = CircularState(n, alpha0, np.asarray(coeffs, dtype=complex))
    nsq = state.norm_sq()
    if nsq <= 0:
        raise ValueError("coefficient vector has zero physical norm")
    state.coeffs = state.coeffs / math.sqrt(nsq)
    return state


def default_fock_cutoff(alpha0, n):
    """Cutoff keeping the neglected Poisson tail below ~1e-12 of the mass."""
    mu = abs(alpha0) ** 2
    return int(math.ceil(2.0 * mu + 10.0 * math.sqrt(mu + 1.0) + n + 10.0))


def _min_fock_cutoff(alpha0, n):
    mu = abs(alpha0) ** 2
    return 2.0 * mu + 10.0 * math.sqrt(mu + 1.0) + n


def coherent_fock_amps(alpha, cutoff):
    """Fock amplitudes exp(-|alpha|^2/2) alpha^n / sqrt(n!), computed in log space."""
    amps = np.zeros(cutoff, dtype=complex)
    if alpha == 0:
        amps[0] = 1.0
        return amps
    r = abs(alpha)
    theta = np.angle(alpha)
    ns = np.arange(cutoff)
    log_mag = ns * math.log(r) - 0.5 * gammaln(ns + 1.0) - r * r / 2.0
    return np.exp(log_mag) * np.exp(1j * theta * ns)


def fock_expansion(label, cutoff=None):
    """Fock amplitudes of the RICS |c_q>, supported on n = q (mod N).

    amps(n) = exp(-|alpha0|^2/2) alpha0^n / (sqrt(g~(q)) sqrt(n!)) on the
    residue class n = q (mod N); the component sum contributes the factor N
    that cancels the 1/N of the coefficient normalization, leaving a unit-norm
    vector.
    """
    if label.alpha0 == 0:
        raise ValueError("RICS requires a nonzero circle radius")
    if cutoff is None:
        cutoff = default_fock_cutoff(label.alpha0, label.n)
    elif cutoff <= _min_fock_cutoff(label.alpha0, label.n):
        raise ValueError("Fock cutoff too small for the state's photon-number mass")
    gt = g_tilde(label.mu, label.n)
    amps = coherent_fock_amps(label.alpha0, cutoff)
    ns = np.arange(cutoff)
    amps = np.where(ns % label.n == label.q, amps, 0.0)
    return amps / math.sqrt(gt[label.q])


def circular_fock_expansion(state, cutoff=None):
    """Fock amplitudes of a general circular state: superposed coherent expansions."""
    if cutoff is None:
        cutoff = default_fock_cutoff(state.alpha0, state.n)
    elif cutoff <= _min_fock_cutoff(state.alpha0, state.n):
        raise ValueError("Fock cutoff too small for the state's photon-number mass")
    amps = np.zeros(cutoff, dtype=complex)
    for m in range(state.n):
        alpha_m = state.alpha0 * np.exp(-2j * np.pi * m / state.n)
        amps += state.coeffs[m] * coherent_fock_amps(alpha_m, cutoff)
    return amps


def annihilated(amps):
    """Apply the photon annihilation operator to a Fock amplitude vector."""
    amps = np.asarray(amps, dtype=complex)
    out = np.zeros_like(amps)
    out[:-1] = amps[1:] * np.sqrt(np.arange(1, amps.size))
    return out


def to_rics_basis(state):
    """Coefficients b_q of the state in the RICS basis: b_q = N sqrt(g~(q)) c~_q."""
    gt = g_tilde(state.mu, state.n)
    return state.n * np.sqrt(gt) * dft(state.coeffs)


def from_rics_basis(n, alpha0, b):
    """Inverse of `to_rics_basis`: rebuild the coefficient vector c_m."""
    gt = g_tilde(abs(alpha0) ** 2, n)
    ctilde = np.asarray(b, dtype=complex) / (n * np.sqrt(gt))
    return CircularState(n, alpha0, idft(ctilde))


def mean_photon_number(label):
    """Mean photon number of |c_q>:  |alpha0|^2 g~(q-1) / g~(q)."""
    if label.alpha0 == 0:
        raise ValueError("RICS requires a nonzero circle radius")
    gt = g_tilde(label.mu, label.n)
    return float(label.mu * gt[(label.q - 1) % label.n] / gt[label.q])


def projection_probability(label):
    """Probability g~(q) of projecting a coherent state onto |c_q>."""
    return float(g_tilde(label.mu, label.n)[label.q])


@dataclass
class StateSpec:
    """JSON-facing state descriptor.  `alpha0` is the per-mode circle radius."""

    kind: str
    n: int
    alpha0: complex
    q: int | None = None
    coeffs: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.kind not in ("rics", "kerr", "custom"):
            raise ValueError(f"unknown state kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("component count must be >= 1")
        if self.kind == "rics":
            if self.q is None:
                raise ValueError("rics descriptor requires q")
            if not 0 <= self.q <= self.n - 1:
                raise ValueError(f"q must lie in [0, {self.n - 1}]")
        if self.kind == "custom":
            if self.coeffs is None:
                raise ValueError("custom descriptor requires coeffs")
            self.coeffs = np.asarray(self.coeffs, dtype=complex)
            if self.coeffs.shape != (self.n,):
                raise ValueError("coeffs length must equal N")


def parse_state_json(text):
    """Parse a JSON state descriptor.  Raises ValueError on malformed input."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed state JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ValueError("state descriptor must be a JSON object")
    try:
        kind = obj["kind"]
        n = int(obj["N"])
        re, im = obj["alpha0"]
        alpha0 = complex(float(re), float(im))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state descriptor: {exc}") from exc
    q = int(obj["q"]) if "q" in obj and obj["q"] is not None else None
    coeffs = None
    if "coeffs" in obj and obj["coeffs"] is not None:
        try:
            coeffs = np.array([complex(float(r), float(i)) for r, i in obj["coeffs"]])
        except (TypeError, ValueError) as exc:
            raise ValueError(f"malformed coeffs: {exc}") from exc
    return StateSpec(kind=kind, n=n, alpha0=alpha0, q=q, coeffs=coeffs)


def in_state(spec):
    """Beam-splitter input state for the two-mode superposition of `spec`.

    The two-mode state with per-mode radius alpha0 is produced by splitting
    a single-mode state on the circle of radius sqrt(2) alpha0 carrying the
    same coefficient vector.
    """
    amp_in = SQRT2 * spec.alpha0
    if spec.kind == "rics":
        return rics_state(RICSLabel(spec.q, spec.n, amp_in))
    if spec.kind == "kerr":
        return kerr_state(spec.n, amp_in)
    return custom_state(spec.n, amp_in, spec.coeffs)


def single_mode_state(spec):
    """Single-mode circular state at the descriptor's own radius alpha0."""
    if spec.kind == "rics":
        return rics_state(RICSLabel(spec.q, spec.n, spec.alpha0))
    if spec.kind == "kerr":
        return kerr_state(spec.n, spec.alpha0)
    return custom_state(spec.n, spec.alpha0, spec.coeffs)
