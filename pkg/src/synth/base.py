"""
Base Signal Generator Abstract Class
Provides common interface for all synthetic signal generators
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional, Tuple
import logging

import numpy as np

from tailspan.errors import SynthParameterError
from tailspan.signal import Signal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SynthSpec:
    """
    Description of one synthetic signal.

    Only the fields used by `kind` matter; identical specs (seed included) give
    identical signals.
    """
    kind: str
    n: int
    seed: int = 0

    # character
    frequency: int = 1
    # delta
    index: int = 0
    # constant
    value: complex = 1.0
    # sparse_fourier: explicit frequencies, or k of them drawn from the seed
    frequencies: Optional[Tuple[int, ...]] = None
    k: Optional[int] = None
    magnitudes: Optional[Tuple[float, ...]] = None
    # indicator: explicit support, or support_size positions drawn from the seed
    support: Optional[Tuple[int, ...]] = None
    support_size: Optional[int] = None
    # gaussian_noise / mixture
    amplitude: float = 1.0
    real: bool = False
    base: Optional["SynthSpec"] = None


class SignalGenerator(ABC):
    """Abstract base class for synthetic signal generators"""

    kind: str = ""

    def generate(self, spec: SynthSpec) -> Signal:
        """
        Validate common parameters and build the signal.

        Args:
            spec: Synthetic signal description

        Returns:
            Deterministic Signal of length spec.n
        """
        if spec.n < 1:
            raise SynthParameterError(f"{self.kind}: n must be positive, got {spec.n}")
        values = self._build(spec)
        logger.debug(f"Generated {self.kind} signal: n={spec.n}, seed={spec.seed}")
        return Signal(values)

    @abstractmethod
    def _build(self, spec: SynthSpec) -> np.ndarray:
        """Return the N values of the signal."""
        pass

    @staticmethod
    def _rng(seed: int) -> np.random.Generator:
        """Seeded PCG64 generator."""
        return np.random.default_rng(seed)

    @staticmethod
    def _distinct_positions(name: str, positions: Tuple[int, ...], n: int) -> np.ndarray:
        """Validate a tuple of distinct positions in [0, n)."""
        arr = np.asarray(positions, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise SynthParameterError(f"{name} must lie in [0, {n}), got {tuple(positions)}")
        if len(set(arr.tolist())) != arr.size:
            raise SynthParameterError(f"{name} must be distinct, got {tuple(positions)}")
        return arr
