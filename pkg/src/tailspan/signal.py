"""
Signals on Z_N

A signal is a finite complex sequence indexed by the integers modulo N. This module
holds the immutable Signal type, the unitary DFT and its inverse, p-norms, the
Fourier ratio and mean-centering.

The transform convention is

    f_hat(m) = N^(-1/2) * sum_x exp(-2*pi*i*x*m/N) * f(x)

which preserves the l2 norm. Any length N >= 1 is supported.
"""

import math
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional

import numpy as np

from .errors import SignalError, UndefinedFourierRatioError

# Import config for the transform method (falls back to the fast path)
try:
    from config import get_config
    HAS_CONFIG = True
except ImportError:
    HAS_CONFIG = False

logger = logging.getLogger(__name__)


def _get_fft_method() -> str:
    """Get transform method from config or use default."""
    if HAS_CONFIG:
        try:
            return get_config().analysis.fft_method
        except Exception:
            pass
    return "fast"


@dataclass(frozen=True, eq=False)
class Signal:
    """
    Complex-valued function on Z_N.

    Values are copied into a read-only complex128 array on construction, so a
    Signal can be shared freely between threads. Real input is stored with zero
    imaginary part.
    """
    values: np.ndarray

    def __post_init__(self):
        try:
            arr = np.array(self.values, dtype=np.complex128)
        except (TypeError, ValueError) as e:
            raise SignalError(f"Signal values are not numeric: {e}") from e

        if arr.ndim != 1:
            raise SignalError(f"Signal must be one-dimensional, got shape {arr.shape}")
        if arr.size < 1:
            raise SignalError("Signal must have at least one value")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise SignalError(f"Signal value at index {bad} is not finite")

        arr.setflags(write=False)
        object.__setattr__(self, 'values', arr)

    @classmethod
    def from_values(cls, values: Iterable[Any]) -> "Signal":
        """Build a Signal from any sequence of real or complex numbers."""
        if isinstance(values, np.ndarray):
            return cls(values)
        return cls(np.array(list(values)))

    @property
    def n(self) -> int:
        """Signal length N."""
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signal):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.values, other.values))

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        """True when every value is exactly zero."""
        return not bool(np.any(self.values != 0))

    @property
    def is_real(self) -> bool:
        """True when every imaginary part is exactly zero."""
        return not bool(np.any(self.values.imag != 0))

    @property
    def max_abs(self) -> float:
        """Sup norm."""
        return float(np.max(np.abs(self.values)))

    def scaled(self, c: complex) -> "Signal":
        """Return c * f."""
        return Signal(self.values * c)

    def shifted(self, k: int) -> "Signal":
        """Return the cyclic shift x -> f(x - k)."""
        return Signal(np.roll(self.values, k))


@dataclass(frozen=True)
class NormSet:
    """l1, l2, L2(mu) and the log-exponent p-norm of one signal."""
    l1: float
    l2: float
    l2_mu: float
    lp_log: Optional[float]

    def as_dict(self) -> Dict[str, Optional[float]]:
        return {
            "l1": self.l1,
            "l2": self.l2,
            "l2_mu": self.l2_mu,
            "lp_log": self.lp_log,
        }


def log_exponent(n: int) -> Optional[float]:
    """
    Exponent p = ln N / (ln N - 1) used by the log-norm bound.

    Returns None when N < 3: ln N <= 1 there and p is not an exponent >= 1.
    """
    if n < 3:
        return None
    log_n = math.log(n)
    return log_n / (log_n - 1.0)


def p_norm(values: np.ndarray, p: float) -> float:
    """(sum |v|^p)^(1/p), scaled by the largest modulus to avoid overflow."""
    mags = np.abs(np.asarray(values))
    top = float(np.max(mags)) if mags.size else 0.0
    if top == 0.0:
        return 0.0
    return top * float(np.sum((mags / top) ** p)) ** (1.0 / p)


def dft_direct(f: Signal) -> Signal:
    """
    Reference O(N^2) transform, evaluated from the defining sum.

    Exponents x*m are reduced mod N before the phase is formed so large indices
    do not lose precision.
    """
    n = f.n
    x = np.arange(n, dtype=np.int64)
    exponents = np.outer(x, x) % n
    phases = np.exp(-2j * np.pi * exponents / n)
    return Signal(phases @ f.values / math.sqrt(n))


def _inverse_dft_direct(g: Signal) -> Signal:
    n = g.n
    x = np.arange(n, dtype=np.int64)
    exponents = np.outer(x, x) % n
    phases = np.exp(2j * np.pi * exponents / n)
    return Signal(phases @ g.values / math.sqrt(n))


def dft(f: Signal) -> Signal:
    """
    Unitary DFT of f.

    Uses numpy's arbitrary-length FFT with orthonormal scaling unless the
    configuration selects the direct transform.
    """
    if _get_fft_method() == "direct":
        return dft_direct(f)
    return Signal(np.fft.fft(f.values, norm="ortho"))


def inverse_dft(g: Signal) -> Signal:
    """Inverse of dft (phase exp(+2*pi*i*x*m/N), same 1/sqrt(N) scaling)."""
    if _get_fft_method() == "direct":
        return _inverse_dft_direct(g)
    return Signal(np.fft.ifft(g.values, norm="ortho"))


def norms(f: Signal) -> NormSet:
    """
    Compute the norm set of f.

    lp_log is None when the log exponent is undefined (N < 3).
    """
    mags = np.abs(f.values)
    l1 = p_norm(mags, 1.0)
    l2 = p_norm(mags, 2.0)
    p = log_exponent(f.n)
    return NormSet(
        l1=l1,
        l2=l2,
        l2_mu=l2 / math.sqrt(f.n),
        lp_log=p_norm(mags, p) if p is not None else None,
    )


def spectral_norms(f: Signal) -> NormSet:
    """Norm set of the transform of f."""
    return norms(dft(f))


def fourier_ratio(f: Signal) -> float:
    """
    FR(f) = ||f_hat||_1 / ||f_hat||_2, a value in [1, sqrt(N)].

    Raises:
        UndefinedFourierRatioError: If f is identically zero
    """
    if f.is_zero:
        raise UndefinedFourierRatioError("undefined Fourier ratio: signal is identically zero")
    spectral = spectral_norms(f)
    return spectral.l1 / spectral.l2


def mean_center(f: Signal) -> Signal:
    """Subtract the arithmetic mean. A constant signal maps to exactly zero."""
    if np.all(f.values == f.values[0]):
        logger.debug("Mean-centering a constant signal gives the zero signal")
        return Signal(np.zeros(f.n, dtype=np.complex128))
    return Signal(f.values - f.values.mean())
