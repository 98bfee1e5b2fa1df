"""Kantorovich-type q-Bernstein-Stancu operators.

Thin Python surface over the C++ core: q-calculus primitives, basis
weights, operator evaluation, closed-form moments, and the error-bound
calculators.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
