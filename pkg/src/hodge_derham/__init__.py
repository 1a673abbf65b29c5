"""Hodge-de Rham spectral sequences of monomial ideals, computed exactly over Q."""

from .cech import CechSpec, LocalizationQuotient, MonomialLocalization
from .errors import ChainMapError, ContainmentError, InputError, InvariantViolation
from .pipeline import SSReport, compare_embeddings, hodge_derham_ss, psi_chain_map, smooth_case_ss
from .specseq import SpectralSequence, from_double_complex, shifted_morphism_from_map

__all__ = [
    "CechSpec",
    "ChainMapError",
    "ContainmentError",
    "InputError",
    "InvariantViolation",
    "LocalizationQuotient",
    "MonomialLocalization",
    "SSReport",
    "SpectralSequence",
    "compare_embeddings",
    "from_double_complex",
    "hodge_derham_ss",
    "psi_chain_map",
    "shifted_morphism_from_map",
    "smooth_case_ss",
]
