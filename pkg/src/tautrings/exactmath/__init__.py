"""Exact arithmetic foundation: rationals, Bernoulli numbers, partitions,
truncated multivariate series, sparse rational linear algebra and a generic
graded-quotient engine.

Rationals are `fractions.Fraction` throughout; nothing in this package (or
its consumers) touches floating point.
"""

from .bernoulli import bernoulli
from .gradedpoly import GeneratorTable, GradedPolynomial
from .linalg import SparseEchelon, exact_rank
from .partitions import Partition, partition_count, partitions
from .quotient import GradedQuotient, QuotientReport, graded_quotient
from .series import TruncatedSeries, series_exp, series_log

__all__ = [
    "bernoulli",
    "GeneratorTable",
    "GradedPolynomial",
    "SparseEchelon",
    "exact_rank",
    "Partition",
    "partition_count",
    "partitions",
    "GradedQuotient",
    "QuotientReport",
    "graded_quotient",
    "TruncatedSeries",
    "series_exp",
    "series_log",
]
