#!/usr/bin/env python3
"""
tailspan command line

Quantifies the additive structure of the large values of a time series.

Usage:
    python analyze_tails.py analyze --input infl.csv --column rate [--mean-center]
    python analyze_tails.py sweep --input infl.csv --column rate --etas 1.04,1.05 --out DIR
    python analyze_tails.py sweep --input delhi.csv --column meantemp --preset climate --out DIR
    python analyze_tails.py span --input infl.csv --column rate --eta 1.06
    python analyze_tails.py synth --kind sparse_fourier --n 128 --k 4 --seed 7 --out sig.csv
    python analyze_tails.py oracle --input sig.csv --column real --eta 1.5 [--max-gamma 20]

Exit Codes:
    0 - Success
    1 - Analysis error, reported as one line: error code=<code> message=<json string>
    2 - Invalid command line
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import argparse
import json
import logging
import math
from pathlib import Path
from typing import List, Optional

import pandas as pd

from config import ConfigManager, get_config, get_preset
from tailspan.errors import OracleBudgetExceededError, OutputError, TailspanError, UnknownPresetError
from tailspan.figures import emit_figures
from tailspan.ingest import SeriesFile, load_series
from tailspan.report import run_analyze, run_sweep, write_report
from tailspan.signal import mean_center
from tailspan.spanner import greedy_span, minimal_lambda, span_from_generators, verify_span
from tailspan.spectrum import large_spectrum
from synth import SynthFactory, generate, spec_from_options

logger = logging.getLogger(__name__)


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s'
    )


def parse_eta_list(text: str) -> List[float]:
    """Parse '1.04,1.05,1.06'."""
    try:
        etas = [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid eta list: {text!r}")
    if not etas or any(not (eta > 0 and math.isfinite(eta)) for eta in etas):
        raise argparse.ArgumentTypeError(f"etas must be positive numbers: {text!r}")
    return etas


def parse_eta_range(text: str) -> List[float]:
    """Parse 'lo:hi:step' into an inclusive grid, rounded to 10 decimals."""
    try:
        lo, hi, step = (float(part) for part in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f"eta range must be lo:hi:step, got {text!r}")
    if not (lo > 0 and hi >= lo and step > 0):
        raise argparse.ArgumentTypeError(f"eta range needs 0 < lo <= hi and step > 0, got {text!r}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 10) for i in range(count)]


def _bounded_int(text: str, minimum: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < minimum:
        raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
    return value


def positive_int(text: str) -> int:
    """Parse an integer >= 1."""
    return _bounded_int(text, 1)


def non_negative_int(text: str) -> int:
    """Parse an integer >= 0."""
    return _bounded_int(text, 0)


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list: {text!r}")


def series_file_from_args(args) -> SeriesFile:
    """Build a SeriesFile from shared input flags and config defaults."""
    return SeriesFile.from_config(
        args.input,
        value_column=args.column,
        label_column=args.label_column,
        imag_column=args.imag_column,
        delimiter=args.delimiter,
        has_header=False if args.no_header else None,
        interpolate_missing=True if args.interpolate else None,
    )


def cmd_analyze(args) -> int:
    summary = run_analyze(series_file_from_args(args), args.mean_center)

    if args.json:
        print(json.dumps(summary.as_dict(), indent=2))
        return 0

    print("\n" + "=" * 60)
    print(f"ANALYSIS: {summary.dataset}{' (mean-centered)' if summary.mean_centered else ''}")
    print("=" * 60)
    print(f"N:              {summary.n}")
    print(f"FR:             {summary.fr:.4f}")
    print(f"sqrt(N)/e:      {summary.sqrt_n_over_e:.4f}")
    print(f"Regime:         {'strong' if summary.strong_regime else 'weak'}")
    for label, norm_set in (("signal", summary.norms), ("spectrum", summary.spectral_norms)):
        lp = f"{norm_set.lp_log:.6g}" if norm_set.lp_log is not None else "undefined"
        print(f"Norms ({label}): l1={norm_set.l1:.6g} l2={norm_set.l2:.6g} "
              f"l2_mu={norm_set.l2_mu:.6g} lp_log={lp}")
    print("=" * 60)
    return 0


def _resolve_etas(args) -> List[float]:
    if args.etas is not None:
        return args.etas
    if args.eta_range is not None:
        return args.eta_range
    try:
        return get_preset(args.preset)
    except KeyError as e:
        raise UnknownPresetError(e.args[0]) from e


def cmd_sweep(args) -> int:
    etas = _resolve_etas(args)
    report, loaded, signal = run_sweep(series_file_from_args(args), etas, args.mean_center, args.workers)

    out_dir = Path(args.out or get_config().paths.output_dir)
    written = write_report(report, out_dir)
    if not args.no_figures:
        written += emit_figures(report, signal, out_dir, loaded.labels)

    print(report.to_markdown())
    print(f"Output: {out_dir}")
    for path in written:
        print(f"  - {path}")
    return 0


def _load_analysed(args):
    loaded = load_series(series_file_from_args(args))
    signal = mean_center(loaded.signal) if args.mean_center else loaded.signal
    return loaded, signal


def cmd_span(args) -> int:
    _, signal = _load_analysed(args)
    spec = large_spectrum(signal, args.eta)
    result = greedy_span(spec, signal.n)
    verified = verify_span(result, spec)

    print(f"eta={args.eta:g}  N={signal.n}  |Gamma|={spec.size}  |Lambda|={result.lambda_size}  "
          f"|S|={result.reach.size}  spanned={'yes' if verified else 'no'}")
    print(f"Lambda: {list(result.generators)}")
    if args.certificates:
        for index in spec.indices:
            print(f"  {index}: {result.certificates.get(index)}")
    return 0 if verified else 1


def cmd_oracle(args) -> int:
    _, signal = _load_analysed(args)
    spec = large_spectrum(signal, args.eta)
    if spec.size > args.max_gamma:
        raise OracleBudgetExceededError(
            f"oracle budget exceeded: |Gamma|={spec.size} is above --max-gamma {args.max_gamma}")

    greedy = greedy_span(spec, signal.n)
    max_size = args.max_size if args.max_size is not None else spec.size
    minimal = minimal_lambda(spec, signal.n, max_size)

    print(f"eta={args.eta:g}  N={signal.n}  |Gamma|={spec.size}")
    print(f"Greedy  |Lambda|={greedy.lambda_size}: {list(greedy.generators)}")
    if minimal is None:
        print(f"Minimal: none of size <= {max_size}")
        return 1
    checked = verify_span(span_from_generators(minimal, spec), spec)
    print(f"Minimal |Lambda|={len(minimal)}: {list(minimal)}  verified={'yes' if checked else 'no'}")
    return 0 if checked else 1


def cmd_synth(args) -> int:
    spec = spec_from_options(
        args.kind, args.n, args.seed,
        frequency=args.frequency,
        index=args.index,
        value=args.value,
        k=args.k,
        frequencies=args.frequencies,
        support=args.support,
        support_size=args.support_size,
        amplitude=args.amplitude,
        real=args.real or None,
    )
    signal = generate(spec)

    out = Path(args.out)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        pd.DataFrame({
            "index": range(signal.n),
            "real": signal.values.real,
            "imag": signal.values.imag,
        }).to_csv(out, index=False, float_format="%.17g", lineterminator="\n")
    except OSError as e:
        raise OutputError(f"cannot write {out}: {e}") from e

    print(f"Wrote {signal.n} values of kind '{args.kind}' (seed {args.seed}) to {out}")
    return 0


def _add_input_flags(parser: argparse.ArgumentParser, column_required: bool = True):
    parser.add_argument('--input', required=True, help='Delimited text file with the series')
    parser.add_argument('--column', required=column_required, default='0',
                        help='Value column name or 0-based position')
    parser.add_argument('--label-column', help='Optional label/timestamp column')
    parser.add_argument('--imag-column', help='Optional imaginary-part column')
    parser.add_argument('--delimiter', help='Field delimiter (default from config: ",")')
    parser.add_argument('--no-header', action='store_true', help='File has no header row')
    parser.add_argument('--interpolate', action='store_true',
                        help='Fill missing cells by linear interpolation')
    parser.add_argument('--mean-center', action='store_true', help='Subtract the sample mean first')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Additive structure of the large values of a time series')
    parser.add_argument('--config', help='Path to config.yaml file (default: config.yaml in repo root)')
    parser.add_argument('--verbose', action='store_true', help='Debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', help='Fourier ratio, regime and norms')
    _add_input_flags(analyze)
    analyze.add_argument('--json', action='store_true', help='Print the summary as JSON')
    analyze.set_defaults(handler=cmd_analyze)

    sweep = sub.add_parser('sweep', help='Gamma / Lambda / bounds over a grid of eta')
    _add_input_flags(sweep)
    grid = sweep.add_mutually_exclusive_group(required=True)
    grid.add_argument('--etas', type=parse_eta_list, help='Comma list, e.g. 1.04,1.05')
    grid.add_argument('--eta-range', type=parse_eta_range, help='lo:hi:step, inclusive')
    grid.add_argument('--preset', help='Named grid from config.yaml (e.g. inflation, climate)')
    sweep.add_argument('--out', help='Output directory (default from config)')
    sweep.add_argument('--workers', type=positive_int, help='Parallel rows (default from config)')
    sweep.add_argument('--no-figures', action='store_true', help='Skip SVG figures and sidecars')
    sweep.set_defaults(handler=cmd_sweep)

    span = sub.add_parser('span', help='Greedy spanning set at one eta')
    _add_input_flags(span)
    span.add_argument('--eta', type=float, required=True)
    span.add_argument('--certificates', action='store_true', help='Print one certificate per gamma')
    span.set_defaults(handler=cmd_span)

    oracle = sub.add_parser('oracle', help='Exhaustive minimal Lambda next to greedy')
    _add_input_flags(oracle, column_required=False)
    oracle.add_argument('--eta', type=float, required=True)
    oracle.add_argument('--max-gamma', type=positive_int, default=None,
                        help='Refuse instances with larger Gamma (default from config: 20)')
    oracle.add_argument('--max-size', type=non_negative_int, help='Largest Lambda to try (default |Gamma|)')
    oracle.set_defaults(handler=cmd_oracle)

    synth = sub.add_parser('synth', help='Write a synthetic signal as index,real,imag CSV')
    synth.add_argument('--kind', required=True,
                       choices=[kind for kind in sorted(SynthFactory.GENERATORS) if kind != 'mixture'])
    synth.add_argument('--n', type=int, required=True)
    synth.add_argument('--seed', type=int, default=0)
    synth.add_argument('--out', required=True)
    synth.add_argument('--frequency', type=int, help='character: frequency k')
    synth.add_argument('--index', type=int, help='delta: spike position')
    synth.add_argument('--value', type=float, help='constant: value')
    synth.add_argument('--k', type=int, help='sparse_fourier: number of random frequencies')
    synth.add_argument('--frequencies', type=parse_int_list, help='sparse_fourier: explicit list')
    synth.add_argument('--support', type=parse_int_list, help='indicator: explicit subset')
    synth.add_argument('--support-size', type=int, help='indicator: random subset size')
    synth.add_argument('--amplitude', type=float, help='gaussian_noise: scale')
    synth.add_argument('--real', action='store_true', help='gaussian_noise: real-valued noise')
    synth.set_defaults(handler=cmd_synth)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        if args.config:
            ConfigManager.load(args.config)
            logger.info(f"Loaded configuration from {args.config}")
        else:
            ConfigManager.get()

        if getattr(args, 'max_gamma', None) is None and args.command == 'oracle':
            args.max_gamma = get_config().spanner.oracle_max_gamma

        return args.handler(args)
    except TailspanError as e:
        print(f"error code={e.code} message={json.dumps(str(e))}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
