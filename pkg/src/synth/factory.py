"""
Generator Factory
Handles generator selection by synthetic signal kind
"""

import logging
from typing import Any, Dict, Optional

from tailspan.errors import SynthParameterError
from tailspan.signal import Signal
from .base import SignalGenerator, SynthSpec
from .generators import (
    CharacterGenerator,
    ConstantGenerator,
    DeltaGenerator,
    GaussianNoiseGenerator,
    IndicatorGenerator,
    MixtureGenerator,
    SparseFourierGenerator,
)

logger = logging.getLogger(__name__)


class SynthFactory:
    """Factory for creating signal generators by kind"""

    GENERATORS = {
        "character": CharacterGenerator,
        "delta": DeltaGenerator,
        "constant": ConstantGenerator,
        "sparse_fourier": SparseFourierGenerator,
        "indicator": IndicatorGenerator,
        "gaussian_noise": GaussianNoiseGenerator,
        "mixture": MixtureGenerator,
    }

    @staticmethod
    def create_generator(kind: str) -> SignalGenerator:
        """
        Create a generator instance

        Args:
            kind: One of the keys of GENERATORS

        Returns:
            SignalGenerator instance

        Raises:
            SynthParameterError: If kind is not recognized
        """
        cls = SynthFactory.GENERATORS.get(kind)
        if cls is None:
            raise SynthParameterError(
                f"Unknown synthetic kind: {kind}. "
                f"Supported kinds: {', '.join(SynthFactory.GENERATORS)}"
            )
        return cls()

    @staticmethod
    def get_generator_info() -> Dict[str, Any]:
        """
        Get information about available generators

        Returns:
            Dictionary with the parameters each kind reads
        """
        return {
            "character": {"params": ["frequency"], "fourier_ratio": "1"},
            "delta": {"params": ["index"], "fourier_ratio": "sqrt(N)"},
            "constant": {"params": ["value"], "fourier_ratio": "1"},
            "sparse_fourier": {"params": ["frequencies | k", "magnitudes", "seed"],
                               "fourier_ratio": "sqrt(k) for equal magnitudes"},
            "indicator": {"params": ["support | support_size", "seed"],
                          "fourier_ratio": "depends on A"},
            "gaussian_noise": {"params": ["amplitude", "real", "seed"],
                               "fourier_ratio": "about 0.89 sqrt(N)"},
            "mixture": {"params": ["base", "amplitude", "real", "seed"],
                        "fourier_ratio": "between base and noise"},
        }


def generate(spec: SynthSpec) -> Signal:
    """
    Quick helper to generate a synthetic signal

    Args:
        spec: Synthetic signal description

    Returns:
        Deterministic Signal
    """
    return SynthFactory.create_generator(spec.kind).generate(spec)


def spec_from_options(kind: str, n: int, seed: int = 0, **options: Optional[Any]) -> SynthSpec:
    """Build a SynthSpec from loose keyword options, ignoring unset (None) values."""
    fields = {key: value for key, value in options.items() if value is not None}
    for key in ("frequencies", "magnitudes", "support"):
        if key in fields:
            fields[key] = tuple(fields[key])
    return SynthSpec(kind=kind, n=n, seed=seed, **fields)
