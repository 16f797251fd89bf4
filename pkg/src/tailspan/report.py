"""
Analysis and eta-sweep reports.

run_analyze computes the headline numbers of one series (FR, sqrt(N)/e, regime,
norms). run_sweep evaluates one row per eta:

    large_spectrum -> greedy_span -> verify_span -> bounds

Rows are independent and run on a thread pool; the report lists them by
ascending eta whatever order they finish in. Reports serialize to JSON and to a
markdown table, both without timestamps so identical inputs give identical bytes.
"""

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .bounds import BoundReport, bounds_from_fr, within_bound
from .errors import OutputError, SweepError, TailspanError
from .ingest import LoadedSeries, SeriesFile, load_series
from .signal import NormSet, Signal, fourier_ratio, mean_center, norms, spectral_norms
from .spanner import greedy_span, verify_span
from .spectrum import large_spectrum

# Import config for worker count and file names
try:
    from config import get_config
    HAS_CONFIG = True
except ImportError:
    HAS_CONFIG = False

logger = logging.getLogger(__name__)


def _get_parallel_workers() -> int:
    """Get sweep worker count from config or use default."""
    if HAS_CONFIG:
        try:
            return get_config().sweep.parallel_workers
        except Exception:
            pass
    return 4


def _get_report_names() -> Tuple[str, str]:
    """Get report file names from config or use defaults."""
    if HAS_CONFIG:
        try:
            cfg = get_config().report
            return cfg.json_name, cfg.markdown_name
        except Exception:
            pass
    return "sweep_report.json", "sweep_report.md"


@dataclass(frozen=True)
class AnalysisSummary:
    """Headline numbers of one series."""
    dataset: str
    n: int
    fr: float
    sqrt_n_over_e: float
    strong_regime: bool
    mean_centered: bool
    norms: NormSet
    spectral_norms: NormSet

    def as_dict(self) -> Dict[str, Any]:
        return {
            "dataset": self.dataset,
            "n": self.n,
            "fr": self.fr,
            "sqrt_n_over_e": self.sqrt_n_over_e,
            "strong_regime": self.strong_regime,
            "mean_centered": self.mean_centered,
            "norms": self.norms.as_dict(),
            "spectral_norms": self.spectral_norms.as_dict(),
        }


@dataclass(frozen=True)
class SweepRow:
    """One eta of a sweep."""
    eta: float
    threshold_value: float
    gamma_size: int
    lambda_size: int
    spanned: bool
    within_bound: bool
    bound_simple_over_c: Optional[float]
    bound_general_over_cprime: float
    bound_lognorm_over_c: Optional[float]
    lambda_elements: Tuple[int, ...]
    gamma_indices: Tuple[int, ...]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "eta": self.eta,
            "threshold_value": self.threshold_value,
            "gamma_size": self.gamma_size,
            "lambda_size": self.lambda_size,
            "spanned": self.spanned,
            "within_bound": self.within_bound,
            "bound_simple_over_c": self.bound_simple_over_c,
            "bound_general_over_cprime": self.bound_general_over_cprime,
            "bound_lognorm_over_c": self.bound_lognorm_over_c,
            "lambda": list(self.lambda_elements),
            "gamma": list(self.gamma_indices),
        }


@dataclass(frozen=True)
class SweepReport:
    """Table of eta rows for one series, plus the prediction summary."""
    dataset: str
    n: int
    fr: float
    mean_centered: bool
    strong_regime: bool
    rows: Tuple[SweepRow, ...]
    predictions: Dict[str, Any] = field(default_factory=dict)

    @property
    def sqrt_n_over_e(self) -> float:
        return math.sqrt(self.n) / math.e

    def as_dict(self) -> Dict[str, Any]:
        return {
            "dataset": self.dataset,
            "n": self.n,
            "fr": self.fr,
            "mean_centered": self.mean_centered,
            "strong_regime": self.strong_regime,
            "sqrt_n_over_e": self.sqrt_n_over_e,
            "rows": [row.as_dict() for row in self.rows],
            "predictions": self.predictions,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_markdown(self) -> str:
        regime = "strong (FR <= sqrt(N)/e)" if self.strong_regime else "weak (FR > sqrt(N)/e)"
        bound_label = "Bound/C" if self.strong_regime else "Bound/C'"
        lines = [
            f"# Sweep: {self.dataset}",
            "",
            f"- N = {self.n}",
            f"- FR = {self.fr:.4f}",
            f"- sqrt(N)/e = {self.sqrt_n_over_e:.4f}",
            f"- regime: {regime}",
            f"- mean-centered: {'yes' if self.mean_centered else 'no'}",
            "",
            f"| η | \\|Γ\\| | \\|Λ\\| | Spanned | {bound_label} | Within bound |",
            "|---|---|---|---|---|---|",
        ]
        for row in self.rows:
            bound = row.bound_simple_over_c if row.bound_simple_over_c is not None \
                else row.bound_general_over_cprime
            lines.append(
                f"| {row.eta:.2f} | {row.gamma_size} | {row.lambda_size} | "
                f"{'✓' if row.spanned else '✗'} | {bound:.2f} | "
                f"{'yes' if row.within_bound else 'no'} |"
            )
        return "\n".join(lines) + "\n"


def analyze_signal(signal: Signal, dataset: str = "signal", mean_centered: bool = False) -> AnalysisSummary:
    """Compute FR, regime and norms of a signal (already centered if requested)."""
    fr = fourier_ratio(signal)
    threshold = math.sqrt(signal.n) / math.e
    return AnalysisSummary(
        dataset=dataset,
        n=signal.n,
        fr=fr,
        sqrt_n_over_e=threshold,
        strong_regime=fr <= threshold,
        mean_centered=mean_centered,
        norms=norms(signal),
        spectral_norms=spectral_norms(signal),
    )


def _prepare(cfg: SeriesFile, mean_center_flag: bool) -> Tuple[LoadedSeries, Signal]:
    loaded = load_series(cfg)
    signal = mean_center(loaded.signal) if mean_center_flag else loaded.signal
    return loaded, signal


def run_analyze(cfg: SeriesFile, mean_center_flag: bool = False) -> AnalysisSummary:
    """
    Load a series and compute its headline numbers.

    Raises:
        IngestError: If the file cannot be loaded
        UndefinedFourierRatioError: If the (centered) signal is zero
    """
    loaded, signal = _prepare(cfg, mean_center_flag)
    summary = analyze_signal(signal, loaded.name, mean_center_flag)
    logger.info(f"{summary.dataset}: N={summary.n}, FR={summary.fr:.4f}, "
                f"sqrt(N)/e={summary.sqrt_n_over_e:.4f}, strong={summary.strong_regime}")
    return summary


def _sweep_row(signal: Signal, fr: float, spectral: NormSet, eta: float) -> SweepRow:
    spec = large_spectrum(signal, eta)
    span = greedy_span(spec, signal.n)
    verified = verify_span(span, spec)
    bounds: BoundReport = bounds_from_fr(fr, signal.n, eta, spectral.lp_log, spectral.l2)
    return SweepRow(
        eta=float(eta),
        threshold_value=spec.threshold_value,
        gamma_size=spec.size,
        lambda_size=span.lambda_size,
        spanned=bool(verified and span.all_spanned),
        within_bound=within_bound(span.lambda_size, bounds),
        bound_simple_over_c=bounds.bound_simple_over_c,
        bound_general_over_cprime=bounds.bound_general_over_cprime,
        bound_lognorm_over_c=bounds.bound_lognorm_over_c,
        lambda_elements=span.generators,
        gamma_indices=spec.indices,
    )


def summarize_predictions(rows: Sequence[SweepRow], strong_regime: bool) -> Dict[str, Any]:
    """
    Summarize the four predictions over a sweep.

    p1: |Lambda| stays small next to |Gamma|; p2: regime and bound family in use;
    p3: |Lambda| weakly decreasing as eta grows; p4: every row spanned.
    """
    lambda_sizes = [row.lambda_size for row in rows]
    ratios = [row.lambda_size / row.gamma_size for row in rows if row.gamma_size]
    nonincreasing = all(a >= b for a, b in zip(lambda_sizes, lambda_sizes[1:]))
    if not nonincreasing:
        logger.warning(f"|Lambda| is not monotone in eta across the sweep: {lambda_sizes}")
    return {
        "p1_max_lambda": max(lambda_sizes) if lambda_sizes else 0,
        "p1_max_gamma": max((row.gamma_size for row in rows), default=0),
        "p1_max_lambda_over_gamma": max(ratios) if ratios else None,
        "p2_strong_regime": strong_regime,
        "p2_operative_bound": "simple" if strong_regime else "general",
        "p3_lambda_nonincreasing": nonincreasing,
        "p4_all_spanned": all(row.spanned for row in rows),
        "all_within_bound": all(row.within_bound for row in rows),
    }


def sweep_signal(signal: Signal, etas: Sequence[float], dataset: str = "signal",
                 mean_centered: bool = False, workers: Optional[int] = None) -> SweepReport:
    """
    Run an eta sweep over a signal (already centered if requested).

    Repeated eta values collapse to one row.

    Raises:
        SweepError: If etas is empty, workers < 1 or any row fails (names the eta)
    """
    if not etas:
        raise SweepError(None, ValueError("at least one eta is required"))
    for eta in etas:
        if not (isinstance(eta, (int, float)) and eta > 0 and math.isfinite(eta)):
            raise SweepError(eta, ValueError("eta must be a positive finite number"))
    if workers is None:
        workers = _get_parallel_workers()
    if workers < 1:
        raise SweepError(None, ValueError(f"workers must be at least 1, got {workers}"))

    try:
        fr = fourier_ratio(signal)
        spectral = spectral_norms(signal)
    except TailspanError as e:
        raise SweepError(None, e) from e

    ordered = sorted({float(eta) for eta in etas})
    if len(ordered) < len(etas):
        logger.warning(f"Dropped {len(etas) - len(ordered)} repeated eta value(s)")
    rows: Dict[int, SweepRow] = {}

    with ThreadPoolExecutor(max_workers=min(workers, len(ordered))) as executor:
        futures = {
            executor.submit(_sweep_row, signal, fr, spectral, eta): position
            for position, eta in enumerate(ordered)
        }
        for future in as_completed(futures):
            position = futures[future]
            try:
                rows[position] = future.result()
            except Exception as e:
                raise SweepError(ordered[position], e) from e
            row = rows[position]
            logger.info(f"eta={row.eta:g}: |Gamma|={row.gamma_size}, |Lambda|={row.lambda_size}, "
                        f"spanned={row.spanned}")

    sorted_rows = tuple(rows[position] for position in range(len(ordered)))
    strong = fr <= math.sqrt(signal.n) / math.e
    return SweepReport(
        dataset=dataset,
        n=signal.n,
        fr=fr,
        mean_centered=mean_centered,
        strong_regime=strong,
        rows=sorted_rows,
        predictions=summarize_predictions(sorted_rows, strong),
    )


def run_sweep(cfg: SeriesFile, etas: Sequence[float], mean_center_flag: bool = False,
              workers: Optional[int] = None) -> Tuple[SweepReport, LoadedSeries, Signal]:
    """
    Load a series and sweep eta over it.

    Returns:
        (report, loaded series, analysed signal); the signal is the centered
        one when mean_center_flag is set
    """
    loaded, signal = _prepare(cfg, mean_center_flag)
    report = sweep_signal(signal, etas, loaded.name, mean_center_flag, workers)
    return report, loaded, signal


def write_report(report: SweepReport, out_dir: Path) -> List[Path]:
    """
    Write the JSON and markdown forms of a report.

    Raises:
        OutputError: If the directory cannot be created or written
    """
    json_name, markdown_name = _get_report_names()
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        json_path = out_dir / json_name
        markdown_path = out_dir / markdown_name
        json_path.write_text(report.to_json(), encoding="utf-8")
        markdown_path.write_text(report.to_markdown(), encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write report to {out_dir}: {e}") from e
    logger.info(f"Report saved to: {json_path}")
    return [json_path, markdown_path]
