"""Exact enumeration of standard tableaux of skew shapes through
Okounkov-Olshanski tableaux, excited diagrams, lozenge tilings, puzzles
and their q-analogues."""

from .counting import CountReport, count_oot_by, count_syt_by
from .qseries import QLaurent, rpp_ratio
from .shapes import Partition, ShapeError, SkewShape
from .tableaux import BudgetError, Tableau, count_syt, enumerate_oot

__all__ = [
    "BudgetError", "CountReport", "Partition", "QLaurent", "ShapeError", "SkewShape",
    "Tableau", "count_oot_by", "count_syt", "count_syt_by", "enumerate_oot", "rpp_ratio",
]
