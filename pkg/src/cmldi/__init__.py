"""Staged damage identification toolkit for a tied-arch rail bridge.

Subpackages:

* ``cmldi.bridge``   parametric space-frame surrogate, modal analysis,
  moving-load transient response, record handling
* ``cmldi.signal``   stacking, band-limited spectra, Morlet scalograms,
  distance-axis images
* ``cmldi.knn``      k-nearest-neighbor classifier with automatic
  (k, distance) selection
* ``cmldi.neural``   from-scratch stacked GRU and small CNN with training
  loops
* ``cmldi.pipeline`` dataset generation, splits, staged training and
  inference, evaluation, trade studies
"""

__version__ = "0.1.0"

from cmldi.errors import InvalidInput, NumericalFailure

__all__ = ["InvalidInput", "NumericalFailure", "__version__"]
