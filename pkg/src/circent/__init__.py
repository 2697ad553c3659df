"""Entanglement of two-mode circular states of light.

Superpositions of coherent states placed equidistantly on a phase-space
circle, their rotationally-invariant members (RICS), and the entanglement
of formation of the two-mode states obtained by beam splitting them.
"""

from .spectral import (
    binomial_dist,
    dft,
    g_tilde,
    gram_matrix,
    gram_vector,
    hermitian_eigenvalues,
    idft,
    shannon_entropy,
)
from .states import (
    CircularState,
    RICSLabel,
    StateSpec,
    circular_fock_expansion,
    custom_state,
    fock_expansion,
    from_rics_basis,
    in_state,
    kerr_state,
    mean_photon_number,
    parse_state_json,
    projection_probability,
    rics_state,
    to_rics_basis,
)
from .entangle import (
    BoundsReport,
    EntanglementReport,
    SchmidtDecomposition,
    Thresholds,
    asymptotic_binomial_entropy,
    asymptotic_weight_entropy,
    bounds_check,
    entanglement_general,
    entanglement_rics,
    fock_oracle,
    fock_oracle_for,
    max_rics_entanglement,
    partial_density_kerr,
    partial_density_rics_basis,
    schmidt_rics,
    thresholds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
