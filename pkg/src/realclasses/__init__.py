"""Exact counts of real conjugacy classes in GL, U, PGL and PGU over finite fields,
with a brute-force census of small groups as an independent check."""

from .count import CountReport, totals
from .ff import Field, FieldElement, make_field, norm_one_subgroup
from .partition import Partition, partitions
from .poly import MonicPoly
from .series import IntSeries, gen_even_types, gen_real_classes, gen_theorem

__all__ = [
    "CountReport",
    "Field",
    "FieldElement",
    "IntSeries",
    "MonicPoly",
    "Partition",
    "gen_even_types",
    "gen_real_classes",
    "gen_theorem",
    "make_field",
    "norm_one_subgroup",
    "partitions",
    "totals",
]
__version__ = "0.1.0"
