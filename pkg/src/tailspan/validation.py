"""
Span Validation Module

Independent verification of spanning claims. Reachability is recomputed from the
generators alone with an integer bitset (bit r set <=> residue r reachable), one
generator layer at a time, and every stored certificate is re-evaluated by modular
arithmetic.
"""

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, List, Optional

from .errors import SpanDimensionError

if TYPE_CHECKING:
    from .spanner import SpanResult
    from .spectrum import Spectrum

logger = logging.getLogger(__name__)


def _rotate(bits: int, shift: int, n: int, full: int) -> int:
    """Move bit r to bit (r + shift) mod n."""
    shift %= n
    if shift == 0:
        return bits
    return ((bits << shift) | (bits >> (n - shift))) & full


def closure_bits(generators: Iterable[int], n: int) -> int:
    """
    Bitset of all sum(eps_i * g_i) mod n with eps_i in {-1, 0, 1}.

    Each generator contributes one layer: S <- S | (S + g) | (S - g).
    """
    full = (1 << n) - 1
    bits = 1
    for g in generators:
        if bits == full:
            break
        bits = bits | _rotate(bits, g, n, full) | _rotate(bits, -g, n, full)
    return bits


@dataclass
class SpanIssue:
    """Represents a single problem found while checking a span."""
    gamma: Optional[int]
    message: str
    issue_type: str = "error"  # error, warning
    kind: str = "unreachable"  # unreachable, missing_certificate, bad_certificate, not_subset, flag_mismatch


@dataclass
class SpanCheck:
    """Result of checking a SpanResult against its spectrum."""
    valid: bool
    errors: List[SpanIssue] = field(default_factory=list)
    warnings: List[SpanIssue] = field(default_factory=list)
    reachable_count: int = 0
    checked_certificates: int = 0

    @property
    def has_errors(self) -> bool:
        """Check if there are any errors (not just warnings)."""
        return len(self.errors) > 0

    @property
    def has_warnings(self) -> bool:
        """Check if there are any warnings."""
        return len(self.warnings) > 0

    @property
    def total_issues(self) -> int:
        """Total number of issues (warnings + errors)."""
        return len(self.warnings) + len(self.errors)


class SpanValidator:
    """
    Checks that a generating set spans a large spectrum.

    Errors (make the check fail):
    - a gamma not reachable from the generators
    - a reachable gamma without a certificate
    - a certificate of the wrong length, with coefficients outside {-1, 0, 1},
      or whose residue differs from its gamma
    - an all_spanned flag that disagrees with the recomputed answer

    Warnings (reported only):
    - generators that are not elements of Gamma
    """

    def validate(self, result: "SpanResult", spec: "Spectrum") -> SpanCheck:
        """
        Validate a span result.

        Args:
            result: Generating set with certificates
            spec: Spectrum the result claims to span

        Returns:
            SpanCheck with validity and any issues

        Raises:
            SpanDimensionError: If result and spec are over different moduli
        """
        n = result.n
        if spec.n != n:
            raise SpanDimensionError(f"Span result is over Z_{n} but spectrum is over Z_{spec.n}")

        generators = [g % n for g in result.generators]
        bits = closure_bits(generators, n)
        errors: List[SpanIssue] = []
        warnings: List[SpanIssue] = []

        gamma_set = {index % n for index in spec.indices}
        for g in generators:
            if g not in gamma_set:
                warnings.append(SpanIssue(
                    gamma=None,
                    message=f"Generator {g} is not an element of Gamma",
                    issue_type="warning",
                    kind="not_subset",
                ))

        checked = 0
        spanned = True
        for index in spec.indices:
            gamma = index % n
            reachable = bool((bits >> gamma) & 1)
            if not reachable:
                spanned = False
                errors.append(SpanIssue(
                    gamma=gamma,
                    message=f"{gamma} is not a {{-1,0,1}}-combination of the generators mod {n}",
                    kind="unreachable",
                ))

            cert = result.certificates.get(index)
            if cert is None:
                if reachable:
                    errors.append(SpanIssue(
                        gamma=gamma,
                        message=f"No certificate stored for reachable {gamma}",
                        kind="missing_certificate",
                    ))
                continue

            checked += 1
            problem = self._check_certificate(cert, generators, gamma, n)
            if problem:
                errors.append(SpanIssue(gamma=gamma, message=problem, kind="bad_certificate"))

        if result.all_spanned != spanned:
            errors.append(SpanIssue(
                gamma=None,
                message=f"all_spanned={result.all_spanned} but recomputed answer is {spanned}",
                kind="flag_mismatch",
            ))

        check = SpanCheck(
            valid=len(errors) == 0,
            errors=errors,
            warnings=warnings,
            reachable_count=bin(bits).count("1"),
            checked_certificates=checked,
        )
        if check.has_errors:
            logger.warning(f"Span check failed over Z_{n}: {len(errors)} error(s), first: {errors[0].message}")
        return check

    @staticmethod
    def _check_certificate(cert, generators: List[int], gamma: int, n: int) -> Optional[str]:
        """Return a description of what is wrong with cert, or None."""
        if len(cert) != len(generators):
            return f"Certificate for {gamma} has {len(cert)} coefficients, expected {len(generators)}"
        if any(c not in (-1, 0, 1) for c in cert):
            return f"Certificate for {gamma} has coefficients outside {{-1,0,1}}: {tuple(cert)}"
        residue = sum(c * g for c, g in zip(cert, generators)) % n
        if residue != gamma:
            return f"Certificate for {gamma} evaluates to {residue} mod {n}"
        return None


def get_validator() -> SpanValidator:
    """Get a SpanValidator instance."""
    return SpanValidator()
