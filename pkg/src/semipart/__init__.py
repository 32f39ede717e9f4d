"""Exact symbolic experiments on partitions of the reals into semigroups."""

from .hamel import BasisElement, HamelReal, make_real
from .classifier import Label, classify
from .sumset import Interval, IntervalUnion, minkowski_sum, normalize
from .groups import FiniteGroup, find_covers

__all__ = [
    "BasisElement", "HamelReal", "make_real", "Label", "classify",
    "Interval", "IntervalUnion", "minkowski_sum", "normalize",
    "FiniteGroup", "find_covers",
]
__version__ = "0.1.0"
