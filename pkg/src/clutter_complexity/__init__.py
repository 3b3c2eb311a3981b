"""Exact recognizing-set complexity of clutters and graphs."""

from .clutter import (
    Clutter,
    ComplexityReport,
    clutter_complexity,
    graph_complexity,
    matching_complexity,
    maximal_independent_sets,
    maximal_matchings,
    min_recognizing_set,
    new_clutter,
)
from .graph import Graph, encode_graph6, parse_graph6

__version__ = "0.1.0"
