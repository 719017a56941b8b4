"""Exact descent statistics, gamma-expansions and recurrence tables.

Submodules: ``perm`` (permutations and classes), ``poly`` (polynomials and
gamma vectors), ``recurrences`` (coefficient tables), ``series`` (functional
equations), ``mfs`` (valley hopping), ``suite`` (named checks), ``cli``.
"""

__version__ = "0.1.0"

from .kernels import BACKEND  # noqa: E402,F401

__all__ = ["BACKEND", "__version__"]
