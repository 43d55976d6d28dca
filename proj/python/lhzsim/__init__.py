"""Annealing dynamics and Landau free-energy analysis for the LHZ parity architecture.

Everything lives in the compiled extension; this package just re-exports it.
"""

try:
    from ._lhzsim import *  # noqa: F401,F403
except ImportError:  # in-tree builds keep the extension next to the package
    from _lhzsim import *  # noqa: F401,F403
