"""
Large spectrum extraction.

Gamma(f, eta) is the set of positions x in Z_N with |f(x)| >= eta * ||f||_2 / sqrt(N),
listed by decreasing magnitude. The threshold uses the norm of the same signal whose
values are thresholded; pass f_hat to get the spectral version.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np

from .errors import DegenerateSpectrumError
from .signal import Signal, norms

logger = logging.getLogger(__name__)


class SpectrumEntry(NamedTuple):
    """One element of Gamma."""
    index: int
    magnitude: float


@dataclass(frozen=True)
class Spectrum:
    """
    Large spectrum of a signal at threshold eta.

    gamma is sorted by decreasing magnitude; equal magnitudes are ordered by
    ascending index.
    """
    n: int
    eta: float
    threshold_value: float
    gamma: Tuple[SpectrumEntry, ...]

    @property
    def indices(self) -> Tuple[int, ...]:
        """Gamma indices in greedy processing order."""
        return tuple(entry.index for entry in self.gamma)

    @property
    def size(self) -> int:
        return len(self.gamma)

    def contains(self, index: int) -> bool:
        return any(entry.index == index % self.n for entry in self.gamma)


def large_spectrum(f: Signal, eta: float) -> Spectrum:
    """
    Extract Gamma(f, eta).

    The comparison is inclusive and exact: no tolerance is applied at the threshold.

    Args:
        f: Nonzero signal
        eta: Positive threshold multiplier

    Returns:
        Spectrum sorted by decreasing magnitude, ties by ascending index

    Raises:
        DegenerateSpectrumError: If f is zero or eta is not positive
    """
    if not eta > 0:
        raise DegenerateSpectrumError(f"eta must be positive, got {eta}")
    if f.is_zero:
        raise DegenerateSpectrumError("large spectrum of the zero signal is degenerate")

    threshold = eta * norms(f).l2_mu
    mags = np.abs(f.values)
    selected = np.flatnonzero(mags >= threshold)

    # lexsort: last key is primary
    order = np.lexsort((selected, -mags[selected]))
    gamma = tuple(
        SpectrumEntry(index=int(selected[i]), magnitude=float(mags[selected[i]]))
        for i in order
    )

    logger.debug(f"Large spectrum at eta={eta}: threshold={threshold:.6g}, |Gamma|={len(gamma)}")
    return Spectrum(n=f.n, eta=float(eta), threshold_value=float(threshold), gamma=gamma)
