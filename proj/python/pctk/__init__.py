"""Pairwise-comparison matrix toolkit.

Generators for the Toeplitz PC-matrix families (CC, CPC, LPC, CkPC, FPC),
Perron spectra in closed form and by power iteration, consistency indices
(CI, Kii) with their analytic bounds, and the even-order LPC mean-bound
study.
"""

from ._pctk import *  # noqa: F401,F403
from ._pctk import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
