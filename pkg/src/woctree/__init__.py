"""Exact counts for weak-ordering chains grown by a restricted generating tree."""

from .core import (
    Relation, StoppingPattern, UnderlinedPermutation, WeakOrderChain,
    children, contains_pattern, format_chain, parse_chain,
)
from .engines import formula_tally, resolve_condition, series_tally, sim_tally
from .treesim import LeafTally, enumerate_leaves, oracle_tally, tally

__version__ = "0.1.0"

__all__ = [
    "Relation", "StoppingPattern", "UnderlinedPermutation", "WeakOrderChain",
    "children", "contains_pattern", "format_chain", "parse_chain",
    "formula_tally", "resolve_condition", "series_tally", "sim_tally",
    "LeafTally", "enumerate_leaves", "oracle_tally", "tally",
]
