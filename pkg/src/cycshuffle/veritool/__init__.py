"""Pair generation, verification sweeps, reports and the command line."""

from .pairs import enumerate_linear_pairs, enumerate_pairs, sample_linear_pairs, sample_pairs
from .sweep import SweepConfig, VerificationReport, run_sweep

__all__ = [
    "enumerate_pairs",
    "enumerate_linear_pairs",
    "sample_pairs",
    "sample_linear_pairs",
    "SweepConfig",
    "VerificationReport",
    "run_sweep",
]
