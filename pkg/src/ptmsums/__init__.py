"""Exact generalized Prouhet-Thue-Morse power sums.

Main entry points: :class:`PtmContext` for f, F and H; :func:`prouhet_partition`
for digit-count partitions; :mod:`ptmsums.conjectures` for bounded sweeps.
"""

from .algebra import Cyclotomic, MultiPoly, PolyRing
from .core import PtmContext, chi_poly, closedF_value, stirling2
from .digitseq import SeqSpec, digit_sum, digits, eval_u, nkv, preset
from .errors import BudgetExceeded, InvalidDigitTuple, NotDivisible, OrderMismatch
from .prouhet import DigitTuple, Fnn_v_closed, f_v, prouhet_partition
from .report import VerificationReport

__all__ = [
    "BudgetExceeded",
    "Cyclotomic",
    "DigitTuple",
    "Fnn_v_closed",
    "InvalidDigitTuple",
    "MultiPoly",
    "NotDivisible",
    "OrderMismatch",
    "PolyRing",
    "PtmContext",
    "SeqSpec",
    "VerificationReport",
    "chi_poly",
    "closedF_value",
    "digit_sum",
    "digits",
    "eval_u",
    "f_v",
    "nkv",
    "preset",
    "prouhet_partition",
    "stirling2",
]

__version__ = "0.1.0"
