"""Quantum random walks of one and two photons on a line with a four-sided coin."""

from .asymptotics import (
    approx_single_state,
    approx_two_photon_state,
    exact_amplitudes,
    exact_coefficients,
    stationary_phase_coefficients,
)
from .coherent import CoherentField, coherent_joint_detection, evolve_coherent, normalized_detection
from .descriptors import DescriptorError, parse_initial
from .modes import ModeLabel, mode_count, mode_from_index, mode_index, reachable_modes, reachable_sites
from .single import CoinState, SinglePhotonState, evolve, position_distribution
from .transform import ModeMatrix, build_mode_matrix
from .two_photon import (
    TwoPhotonState,
    bipartition_schmidt_rank,
    evolve_two_photon,
    joint_probability,
    marginal_at_least_one,
    named_input,
)

__version__ = "0.1.0"
