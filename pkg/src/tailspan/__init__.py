"""
tailspan: additive structure of the large values of a time series.

Fourier ratio, large spectrum, greedy {-1,0,1}-spanning sets and the bounds
that cap their size.
"""

from .errors import TailspanError
from .signal import (
    NormSet,
    Signal,
    dft,
    dft_direct,
    fourier_ratio,
    inverse_dft,
    mean_center,
    norms,
    spectral_norms,
)
from .spectrum import Spectrum, SpectrumEntry, large_spectrum
from .spanner import ReachSet, SpanResult, greedy_span, minimal_lambda, span_from_generators, verify_span
from .bounds import BoundReport, bound_report, regime_check
from .ingest import LoadedSeries, SeriesFile, load_series

__all__ = [
    'TailspanError',
    'NormSet',
    'Signal',
    'dft',
    'dft_direct',
    'fourier_ratio',
    'inverse_dft',
    'mean_center',
    'norms',
    'spectral_norms',
    'Spectrum',
    'SpectrumEntry',
    'large_spectrum',
    'ReachSet',
    'SpanResult',
    'greedy_span',
    'minimal_lambda',
    'span_from_generators',
    'verify_span',
    'BoundReport',
    'bound_report',
    'regime_check',
    'LoadedSeries',
    'SeriesFile',
    'load_series',
]
