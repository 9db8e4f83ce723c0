"""Minimal separators, induced minor containment, and house/butterfly recognition."""
from .graph import Graph, named
from .formats import encode_graph6, parse_graph6
from .minsep import count_minimal_separators, enumerate_minimal_separators, is_minimal_separator
from .recognition import (
    RECOGNIZERS,
    classify_dichotomy,
    has_2p2_itm,
    has_butterfly_im,
    has_house_im,
    has_house_itm,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "RECOGNIZERS",
    "classify_dichotomy",
    "count_minimal_separators",
    "encode_graph6",
    "enumerate_minimal_separators",
    "has_2p2_itm",
    "has_butterfly_im",
    "has_house_im",
    "has_house_itm",
    "is_minimal_separator",
    "named",
    "parse_graph6",
]
