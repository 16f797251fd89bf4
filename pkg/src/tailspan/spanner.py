"""
Spanning sets for the large spectrum.

greedy_span builds a set Lambda, a subset of Gamma, such that every element of Gamma is
a {-1, 0, 1}-combination of Lambda modulo N. It walks Gamma in its sorted order,
keeps the reachable set S as a membership table of N booleans, and adds gamma to
Lambda only when gamma is not yet in S:

    S <- S  u  {(s + gamma) mod N}  u  {(s - gamma) mod N}

Each residue remembers the step that first reached it, so any member of S can be
turned into an explicit coefficient vector (its certificate).

minimal_lambda is an exhaustive oracle: it tries subsets of Gamma by increasing
size, lexicographically within a size, and returns the first that spans Gamma.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import OracleBudgetExceededError, SpanDimensionError
from .spectrum import Spectrum
from .validation import SpanValidator, closure_bits

# Import config for oracle limits
try:
    from config import get_config
    HAS_CONFIG = True
except ImportError:
    HAS_CONFIG = False

logger = logging.getLogger(__name__)

Certificate = Tuple[int, ...]


def _get_oracle_budget() -> int:
    """Get oracle subset budget from config or use default."""
    if HAS_CONFIG:
        try:
            return get_config().spanner.oracle_subset_budget
        except Exception:
            pass
    return 1_048_576


class ReachSet:
    """
    Residues reachable as sum(eps_i * lambda_i) mod N, eps_i in {-1, 0, 1}.

    Starts as {0}. extend() applies one generator; for every newly reached residue
    the parent residue, the generator position and the sign are recorded.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"Modulus must be positive, got {n}")
        self.n = n
        self._mask = np.zeros(n, dtype=bool)
        self._mask[0] = True
        self._parent = np.full(n, -1, dtype=np.int64)
        self._step = np.full(n, -1, dtype=np.int64)
        self._sign = np.zeros(n, dtype=np.int8)
        self._generators: List[int] = []
        self._size = 1

    @property
    def size(self) -> int:
        return self._size

    @property
    def generators(self) -> Tuple[int, ...]:
        return tuple(self._generators)

    @property
    def members(self) -> FrozenSet[int]:
        return frozenset(int(r) for r in np.flatnonzero(self._mask))

    @property
    def is_full(self) -> bool:
        return self._size == self.n

    def contains(self, x: int) -> bool:
        return bool(self._mask[x % self.n])

    def extend(self, generator: int) -> int:
        """
        Add one generator and return the number of newly reached residues.

        Both translates are taken from S as it was before this call.
        """
        g = generator % self.n
        step = len(self._generators)
        self._generators.append(g)

        current = np.flatnonzero(self._mask)
        before = self._size
        for sign in (1, -1):
            targets = (current + sign * g) % self.n
            fresh = ~self._mask[targets]
            reached = targets[fresh]
            self._mask[reached] = True
            self._parent[reached] = current[fresh]
            self._step[reached] = step
            self._sign[reached] = sign

        self._size = int(np.count_nonzero(self._mask))
        return self._size - before

    def witness(self, x: int) -> Optional[Certificate]:
        """
        Coefficient vector eps with sum(eps_i * lambda_i) = x mod N, or None.

        Steps along the parent chain strictly decrease, so each generator is used
        at most once.
        """
        r = x % self.n
        if not self._mask[r]:
            return None
        coeffs = [0] * len(self._generators)
        while r != 0:
            coeffs[int(self._step[r])] = int(self._sign[r])
            r = int(self._parent[r])
        return tuple(coeffs)


@dataclass(frozen=True)
class SpanResult:
    """Generating set Lambda (greedy order), its reach set and per-gamma certificates."""
    generators: Tuple[int, ...]
    reach: ReachSet
    all_spanned: bool
    certificates: Dict[int, Optional[Certificate]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.reach.n

    @property
    def lambda_size(self) -> int:
        return len(self.generators)


def _check_modulus(spec: Spectrum, n: int):
    if spec.n != n:
        raise SpanDimensionError(f"Spectrum is over Z_{spec.n} but modulus {n} was given")


def _collect_certificates(reach: ReachSet, spec: Spectrum) -> Dict[int, Optional[Certificate]]:
    return {index: reach.witness(index) for index in spec.indices}


def greedy_span(spec: Spectrum, n: int) -> SpanResult:
    """
    Greedy construction of Lambda for a large spectrum.

    Args:
        spec: Large spectrum over Z_n, already sorted
        n: Modulus N

    Returns:
        SpanResult with all_spanned True and a certificate for every gamma

    Raises:
        SpanDimensionError: If spec was built over a different modulus
    """
    _check_modulus(spec, n)
    reach = ReachSet(n)

    for position, index in enumerate(spec.indices):
        if reach.is_full:
            logger.debug(f"S = Z_{n} after {position} of {spec.size} elements; stopping early")
            break
        gamma = index % n
        if reach.contains(gamma):
            continue
        added = reach.extend(gamma)
        logger.debug(f"Added {gamma} to Lambda (+{added} residues, |S|={reach.size})")

    certificates = _collect_certificates(reach, spec)
    all_spanned = all(cert is not None for cert in certificates.values())
    logger.info(f"Greedy span over Z_{n}: |Gamma|={spec.size}, |Lambda|={len(reach.generators)}, "
                f"|S|={reach.size}, spanned={all_spanned}")

    return SpanResult(
        generators=reach.generators,
        reach=reach,
        all_spanned=all_spanned,
        certificates=certificates,
    )


def span_from_generators(generators: Iterable[int], spec: Spectrum) -> SpanResult:
    """
    Build a SpanResult for a given Lambda (not necessarily a spanning one).

    Gammas outside the reach set get a None certificate and all_spanned is False.
    """
    reach = ReachSet(spec.n)
    for g in generators:
        reach.extend(int(g))
    certificates = _collect_certificates(reach, spec)
    return SpanResult(
        generators=reach.generators,
        reach=reach,
        all_spanned=all(cert is not None for cert in certificates.values()),
        certificates=certificates,
    )


def verify_span(result: SpanResult, spec: Spectrum) -> bool:
    """
    Independent check that Lambda spans Gamma.

    Reachability is recomputed from Lambda alone and every certificate is checked
    by modular arithmetic; the incremental reach set is not consulted.

    Raises:
        SpanDimensionError: If result and spec are over different moduli
    """
    return SpanValidator().validate(result, spec).valid


def oracle_subset_count(gamma_size: int, max_size: int) -> int:
    """Number of subsets minimal_lambda examines in the worst case."""
    return sum(comb(gamma_size, k) for k in range(min(max_size, gamma_size) + 1))


def minimal_lambda(spec: Spectrum, n: int, max_size: int,
                   budget: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    Smallest subset of Gamma whose {-1, 0, 1}-combinations cover Gamma.

    Subsets are tried by increasing cardinality and lexicographically within a
    cardinality, so the answer is a true minimum and deterministic.

    Args:
        spec: Large spectrum over Z_n
        n: Modulus N
        max_size: Largest cardinality to try
        budget: Maximum subsets to examine (defaults to config)

    Returns:
        Sorted tuple of generators, or None if no subset of size <= max_size spans

    Raises:
        SpanDimensionError: If spec was built over a different modulus
        OracleBudgetExceededError: If the worst-case subset count exceeds budget
    """
    _check_modulus(spec, n)
    if budget is None:
        budget = _get_oracle_budget()

    targets: Sequence[int] = sorted({index % n for index in spec.indices})
    target_bits = 0
    for t in targets:
        target_bits |= 1 << t

    worst_case = oracle_subset_count(len(targets), max_size)
    if worst_case > budget:
        raise OracleBudgetExceededError(
            f"oracle budget exceeded: |Gamma|={len(targets)}, max_size={max_size} "
            f"needs up to {worst_case} subsets (budget {budget})"
        )

    for size in range(min(max_size, len(targets)) + 1):
        logger.debug(f"Oracle trying subsets of size {size}")
        for subset in combinations(targets, size):
            if closure_bits(subset, n) & target_bits == target_bits:
                logger.info(f"Oracle found minimal |Lambda|={size} over Z_{n}")
                return tuple(subset)

    logger.info(f"Oracle found no spanning subset of size <= {max_size}")
    return None
