"""
Concrete synthetic signal generators.

Each generator is a pure function of its SynthSpec. Random choices come from a
PCG64 generator seeded with spec.seed.
"""

import logging
import math

import numpy as np

from tailspan.errors import SynthParameterError
from tailspan.signal import Signal, inverse_dft
from .base import SignalGenerator, SynthSpec

logger = logging.getLogger(__name__)


class CharacterGenerator(SignalGenerator):
    """Pure character f(x) = exp(2 pi i k x / N); its transform is a single spike."""

    kind = "character"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        x = np.arange(spec.n, dtype=np.int64)
        phase = (spec.frequency * x) % spec.n
        return np.exp(2j * np.pi * phase / spec.n)


class DeltaGenerator(SignalGenerator):
    """Unit spike at spec.index; its transform is flat."""

    kind = "delta"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        if not 0 <= spec.index < spec.n:
            raise SynthParameterError(f"delta index must lie in [0, {spec.n}), got {spec.index}")
        values = np.zeros(spec.n, dtype=np.complex128)
        values[spec.index] = 1.0
        return values


class ConstantGenerator(SignalGenerator):
    kind = "constant"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        return np.full(spec.n, spec.value, dtype=np.complex128)


class SparseFourierGenerator(SignalGenerator):
    """
    Signal whose transform is supported on k frequencies.

    Magnitudes default to 1 and phases are drawn uniformly from the seed, so with
    equal magnitudes FR = sqrt(k).
    """

    kind = "sparse_fourier"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        rng = self._rng(spec.seed)

        if spec.frequencies is not None:
            freqs = self._distinct_positions("frequencies", spec.frequencies, spec.n)
        else:
            k = spec.k if spec.k is not None else 1
            if not 1 <= k <= spec.n:
                raise SynthParameterError(f"sparse_fourier needs 1 <= k <= {spec.n}, got {k}")
            freqs = np.sort(rng.choice(spec.n, size=k, replace=False))
        if freqs.size == 0:
            raise SynthParameterError("sparse_fourier needs at least one frequency")

        if spec.magnitudes is None:
            mags = np.ones(freqs.size)
        else:
            mags = np.asarray(spec.magnitudes, dtype=np.float64)
            if mags.size != freqs.size:
                raise SynthParameterError(
                    f"sparse_fourier got {mags.size} magnitudes for {freqs.size} frequencies")
            if np.any(mags < 0) or not np.any(mags > 0):
                raise SynthParameterError("sparse_fourier magnitudes must be >= 0 and not all zero")

        phases = rng.uniform(0.0, 2.0 * np.pi, size=freqs.size)
        spectrum = np.zeros(spec.n, dtype=np.complex128)
        spectrum[freqs] = mags * np.exp(1j * phases)
        return inverse_dft(Signal(spectrum)).values


class IndicatorGenerator(SignalGenerator):
    """Indicator 1_A of a subset A of Z_N; its mean is the density |A|/N."""

    kind = "indicator"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        if spec.support is not None:
            support = self._distinct_positions("support", spec.support, spec.n)
        else:
            size = spec.support_size if spec.support_size is not None else 1
            if not 0 <= size <= spec.n:
                raise SynthParameterError(f"indicator needs 0 <= support_size <= {spec.n}, got {size}")
            support = self._rng(spec.seed).choice(spec.n, size=size, replace=False)
        values = np.zeros(spec.n, dtype=np.float64)
        values[support] = 1.0
        return values


class GaussianNoiseGenerator(SignalGenerator):
    """Circular complex Gaussian noise (unit variance), or real noise with spec.real."""

    kind = "gaussian_noise"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        if spec.amplitude < 0:
            raise SynthParameterError(f"amplitude must be >= 0, got {spec.amplitude}")
        return spec.amplitude * noise(spec.n, spec.seed, spec.real)


class MixtureGenerator(SignalGenerator):
    """Base signal plus scaled Gaussian noise."""

    kind = "mixture"

    def _build(self, spec: SynthSpec) -> np.ndarray:
        if spec.base is None:
            raise SynthParameterError("mixture needs a base spec")
        if spec.base.n != spec.n:
            raise SynthParameterError(f"mixture base has n={spec.base.n}, expected {spec.n}")
        if spec.amplitude < 0:
            raise SynthParameterError(f"amplitude must be >= 0, got {spec.amplitude}")

        # Imported here: the factory imports this module
        from .factory import generate
        base = generate(spec.base)
        return base.values + spec.amplitude * noise(spec.n, spec.seed, spec.real)


def noise(n: int, seed: int, real: bool = False) -> np.ndarray:
    """Unit-variance Gaussian samples from a PCG64 stream."""
    rng = np.random.default_rng(seed)
    if real:
        return rng.standard_normal(n)
    return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)
