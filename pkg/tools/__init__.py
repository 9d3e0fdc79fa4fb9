# Tools Package
"""Computational tools for the LIL audit toolkit."""

__version__ = "0.1.0"

from tools.bitstream_tool import CheckpointSet, SequenceSource, stream_count
from tools.lilstat_tool import lil_trace, s_lil, s_star
from tools.probability_tool import mu_U, strong_prob, weak_prob_1, weak_prob_2, weak_prob_3, weak_prob_4_bounds
from tools.evaluator_tool import distances, evaluate_traces, snapshot

__all__ = [
    "CheckpointSet",
    "SequenceSource",
    "stream_count",
    "lil_trace",
    "s_lil",
    "s_star",
    "mu_U",
    "strong_prob",
    "weak_prob_1",
    "weak_prob_2",
    "weak_prob_3",
    "weak_prob_4_bounds",
    "distances",
    "evaluate_traces",
    "snapshot",
]
