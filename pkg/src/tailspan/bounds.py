"""
Theoretical ceilings on |Lambda|, reported divided by their unknown constants.

With FR = FR(f), natural logarithms throughout:

    simple  (strong regime FR <= sqrt(N)/e):  eta^-2 * FR^2 * ln(N / FR^2)
    general (any FR, constant C' = C e^-2):   eta^-2 * FR^2 * ln N
    lognorm (any FR, on f_hat):               eta^-2 * (||f_hat||_p / ||f_hat||_2)^2 * ln N,
                                               p = ln N / (ln N - 1)

The constants are never estimated.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from .signal import Signal, fourier_ratio, spectral_norms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    """Fourier ratio, regime flag and the three Bound/C quantities for one eta."""
    n: int
    fr: float
    eta: float
    strong_regime: bool
    bound_simple_over_c: Optional[float]
    bound_general_over_cprime: float
    bound_lognorm_over_c: Optional[float]
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def operative_bound(self) -> float:
        """Bound/C used for the |Lambda| comparison: simple if available, else general."""
        if self.bound_simple_over_c is not None:
            return self.bound_simple_over_c
        return self.bound_general_over_cprime

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "fr": self.fr,
            "eta": self.eta,
            "strong_regime": self.strong_regime,
            "bound_simple_over_c": self.bound_simple_over_c,
            "bound_general_over_cprime": self.bound_general_over_cprime,
            "bound_lognorm_over_c": self.bound_lognorm_over_c,
            "notes": list(self.notes),
        }


def regime_check(fr: float, n: int) -> bool:
    """True iff fr <= sqrt(n) / e (exact floating comparison)."""
    return fr <= math.sqrt(n) / math.e


def simple_bound_over_c(fr: float, n: int, eta: float) -> Optional[float]:
    """eta^-2 FR^2 ln(N / FR^2); None when the log argument is <= 1."""
    fr_sq = fr * fr
    if fr_sq >= n:
        return None
    return fr_sq * math.log(n / fr_sq) / (eta * eta)


def general_bound_over_cprime(fr: float, n: int, eta: float) -> float:
    """eta^-2 FR^2 ln N."""
    return fr * fr * math.log(n) / (eta * eta)


def lognorm_bound_over_c(lp_log: Optional[float], l2: float, n: int, eta: float) -> Optional[float]:
    """eta^-2 (||g||_p / ||g||_2)^2 ln N for g = f_hat; None when p is undefined."""
    if lp_log is None or l2 == 0:
        return None
    ratio = lp_log / l2
    return ratio * ratio * math.log(n) / (eta * eta)


def bounds_from_fr(fr: float, n: int, eta: float,
                   spectral_lp: Optional[float] = None,
                   spectral_l2: Optional[float] = None) -> BoundReport:
    """Assemble a BoundReport from a precomputed Fourier ratio."""
    notes = []
    strong = regime_check(fr, n)
    simple = None
    if strong:
        simple = simple_bound_over_c(fr, n, eta)
        if simple is None:
            notes.append("degenerate bound: FR^2 >= N makes ln(N/FR^2) <= 0")
            logger.warning(f"Degenerate simple bound at N={n}, FR={fr:.6g}")
    else:
        notes.append("FR exceeds sqrt(N)/e: simple bound does not apply, use the general bound")

    lognorm = None
    if spectral_lp is not None and spectral_l2 is not None:
        lognorm = lognorm_bound_over_c(spectral_lp, spectral_l2, n, eta)

    return BoundReport(
        n=n,
        fr=fr,
        eta=float(eta),
        strong_regime=strong,
        bound_simple_over_c=simple,
        bound_general_over_cprime=general_bound_over_cprime(fr, n, eta),
        bound_lognorm_over_c=lognorm,
        notes=tuple(notes),
    )


def bound_report(f: Signal, eta: float) -> BoundReport:
    """
    Evaluate the ceilings for signal f at threshold eta.

    Raises:
        UndefinedFourierRatioError: If f is identically zero
    """
    fr = fourier_ratio(f)
    spectral = spectral_norms(f)
    return bounds_from_fr(fr, f.n, eta, spectral.lp_log, spectral.l2)


def within_bound(lambda_size: int, report: BoundReport) -> bool:
    """Success test: observed |Lambda| strictly below the operative Bound/C."""
    return lambda_size < report.operative_bound


def indicator_density(f: Signal) -> Optional[float]:
    """alpha = |A| / N when f is the indicator of a nonempty set A, else None."""
    values = f.values
    if np.any(values.imag != 0):
        return None
    real = values.real
    if not np.all((real == 0) | (real == 1)):
        return None
    size = int(np.count_nonzero(real))
    if size == 0:
        return None
    return size / f.n


def indicator_bound_over_c(alpha: float, eta: float) -> float:
    """
    eta^-2 ln(1/alpha), the ceiling for the large spectrum of a set indicator.

    Zero for alpha = 1 (A is all of Z_N).
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"Density must lie in (0, 1], got {alpha}")
    return math.log(1.0 / alpha) / (eta * eta)
