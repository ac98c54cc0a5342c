"""Exact combinatorics of irreducible Hermitian pairs."""
from .errors import CapacityError, ConfigurationError, ConsistencyError
from .root_core import build_root_system
from .hermitian_catalog import build_pair, build_pair_from_key, manifest_pairs, parse_pair_label
from .cascade import max_cascade, run_cascade

__all__ = [
    "CapacityError", "ConfigurationError", "ConsistencyError", "build_root_system",
    "build_pair", "build_pair_from_key", "manifest_pairs", "parse_pair_label",
    "max_cascade", "run_cascade",
]
__version__ = "0.1.0"
