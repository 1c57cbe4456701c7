"""Exact permanents of structured sign matrices and the combinatorial sequences they evaluate to."""

from .matrices import IntMatrix, MatrixError
from .permanent import PermanentResult, per
from .permstats import Permutation
from .sequences import (
    bernoulli, euler_number, genocchi, kreweras_row, median_genocchi, normalized_median_genocchi,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
