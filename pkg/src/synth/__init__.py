"""
Synthetic Signal Package
Signals with controlled Fourier structure for tests and bound-scaling experiments
"""

from .base import SignalGenerator, SynthSpec
from .factory import SynthFactory, generate, spec_from_options

__all__ = [
    'SignalGenerator',
    'SynthSpec',
    'SynthFactory',
    'generate',
    'spec_from_options',
]
