"""Optimal networks toolbox: spanning trees, Steiner trees, minimal fillings."""

from ._optnet import (
    additivity,
    emst,
    kuratowski_embed,
    mf,
    min_half_perimeter,
    mpf,
    ratio_report,
    ratio_search,
    smt,
    spanning_tree_count,
)

__all__ = [
    "additivity",
    "emst",
    "kuratowski_embed",
    "mf",
    "min_half_perimeter",
    "mpf",
    "ratio_report",
    "ratio_search",
    "smt",
    "spanning_tree_count",
]
