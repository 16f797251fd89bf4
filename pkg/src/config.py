"""
Configuration Management Module

Provides centralized configuration loading from config.yaml with singleton pattern.
Typed access to transform, ingestion, spanner, sweep, figure and report settings.
"""

import logging
from pathlib import Path
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Any

import yaml

logger = logging.getLogger(__name__)


@dataclass
class PathsConfig:
    """Directory path configuration."""
    output_dir: str = "output/latest"


@dataclass
class AnalysisConfig:
    """Transform configuration."""
    fft_method: str = "fast"


@dataclass
class IngestConfig:
    """Delimited-text ingestion defaults."""
    delimiter: str = ","
    has_header: bool = True
    interpolate_missing: bool = False
    missing_tokens: List[str] = field(
        default_factory=lambda: ["", "NA", "N/A", "NaN", "nan", "null"]
    )


@dataclass
class SpannerConfig:
    """Greedy spanner and oracle limits."""
    oracle_subset_budget: int = 1_048_576
    oracle_max_gamma: int = 20


@dataclass
class SweepConfig:
    """Eta sweep execution settings."""
    parallel_workers: int = 4


@dataclass
class FiguresConfig:
    """Figure styling."""
    width: float = 10.0
    panel_height: float = 2.2
    series_color: str = "#1f77b4"
    gamma_color: str = "red"
    marker_size: int = 12
    svg_hashsalt: str = "tailspan"


@dataclass
class ReportConfig:
    """Output file names for sweep reports."""
    json_name: str = "sweep_report.json"
    markdown_name: str = "sweep_report.md"
    figures_dir: str = "figures"


@dataclass
class Config:
    """Main configuration container."""
    paths: PathsConfig
    analysis: AnalysisConfig
    ingest: IngestConfig
    spanner: SpannerConfig
    sweep: SweepConfig
    presets: Dict[str, List[float]]
    figures: FiguresConfig
    report: ReportConfig


class ConfigManager:
    """
    Singleton configuration manager.

    Loads configuration from config.yaml and provides typed access to values.

    Usage:
        config = ConfigManager.get()
        print(config.presets['climate'])
    """

    _instance: Optional[Config] = None
    _config_path: Optional[Path] = None

    # Default config file locations to search
    DEFAULT_PATHS = [
        Path("config.yaml"),
        Path("config.yml"),
        Path(__file__).parent.parent / "config.yaml",
    ]

    @classmethod
    def load(cls, path: Optional[str] = None) -> Config:
        """
        Load configuration from YAML file.

        Args:
            path: Optional path to config file. If None, searches default locations.

        Returns:
            Loaded Config instance
        """
        cls._config_path = None
        if path:
            cls._config_path = Path(path)
        else:
            for default_path in cls.DEFAULT_PATHS:
                if default_path.exists():
                    cls._config_path = default_path
                    break

        if cls._config_path is None or not cls._config_path.exists():
            logger.warning("No config.yaml found, using defaults")
            cls._instance = cls._create_default_config()
            return cls._instance

        logger.info(f"Loading configuration from {cls._config_path}")

        with open(cls._config_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        cls._instance = cls._parse_config(data)
        return cls._instance

    @classmethod
    def get(cls) -> Config:
        """Get the configuration instance (loads if not already loaded)."""
        if cls._instance is None:
            cls.load()
        return cls._instance

    @classmethod
    def reload(cls, path: Optional[str] = None) -> Config:
        """Force reload configuration from file."""
        cls._instance = None
        return cls.load(path)

    @classmethod
    def _parse_config(cls, data: Dict[str, Any]) -> Config:
        """Parse YAML data into typed Config object."""

        paths_data = data.get('paths', {})
        paths = PathsConfig(
            output_dir=paths_data.get('output_dir', 'output/latest'),
        )

        analysis_data = data.get('analysis', {})
        fft_method = analysis_data.get('fft_method', 'fast')
        if fft_method not in ('fast', 'direct'):
            logger.warning(f"Unknown fft_method '{fft_method}', using 'fast'")
            fft_method = 'fast'
        analysis = AnalysisConfig(fft_method=fft_method)

        ingest_data = data.get('ingest', {})
        ingest = IngestConfig(
            delimiter=ingest_data.get('delimiter', ','),
            has_header=ingest_data.get('has_header', True),
            interpolate_missing=ingest_data.get('interpolate_missing', False),
            missing_tokens=[
                str(token) for token in
                ingest_data.get('missing_tokens', IngestConfig().missing_tokens)
            ],
        )

        spanner_data = data.get('spanner', {})
        spanner = SpannerConfig(
            oracle_subset_budget=int(spanner_data.get('oracle_subset_budget', 1_048_576)),
            oracle_max_gamma=int(spanner_data.get('oracle_max_gamma', 20)),
        )

        sweep_data = data.get('sweep', {})
        sweep = SweepConfig(
            parallel_workers=max(1, int(sweep_data.get('parallel_workers', 4))),
        )

        presets = {
            name: [float(eta) for eta in etas]
            for name, etas in (data.get('presets') or {}).items()
        }
        for name, etas in cls._default_presets().items():
            presets.setdefault(name, etas)

        figures_data = data.get('figures', {})
        figures = FiguresConfig(
            width=float(figures_data.get('width', 10.0)),
            panel_height=float(figures_data.get('panel_height', 2.2)),
            series_color=figures_data.get('series_color', '#1f77b4'),
            gamma_color=figures_data.get('gamma_color', 'red'),
            marker_size=int(figures_data.get('marker_size', 12)),
            svg_hashsalt=str(figures_data.get('svg_hashsalt', 'tailspan')),
        )

        report_data = data.get('report', {})
        report = ReportConfig(
            json_name=report_data.get('json_name', 'sweep_report.json'),
            markdown_name=report_data.get('markdown_name', 'sweep_report.md'),
            figures_dir=report_data.get('figures_dir', 'figures'),
        )

        return Config(
            paths=paths,
            analysis=analysis,
            ingest=ingest,
            spanner=spanner,
            sweep=sweep,
            presets=presets,
            figures=figures,
            report=report,
        )

    @classmethod
    def _create_default_config(cls) -> Config:
        """Create default configuration when no file is found."""
        return cls._parse_config({})

    @classmethod
    def _default_presets(cls) -> Dict[str, List[float]]:
        """Eta grids for the inflation and climate series."""
        return {
            'inflation': [1.04, 1.05, 1.06, 1.07, 1.08],
            'inflation_centered': [1.5, 2.0, 2.5, 2.7],
            'climate': [1.30, 1.40, 1.43, 1.45],
            'climate_centered': [1.60, 1.90, 2.00, 2.40],
        }


def get_config() -> Config:
    """
    Convenience function to get configuration.

    Returns:
        Config instance
    """
    return ConfigManager.get()


def get_preset(name: str) -> List[float]:
    """
    Get a named eta grid.

    Args:
        name: Preset name (inflation, inflation_centered, climate, climate_centered)

    Returns:
        List of eta values in ascending order

    Raises:
        KeyError: If preset not found
    """
    config = ConfigManager.get()
    if name not in config.presets:
        raise KeyError(f"Unknown preset: {name}. Available: {sorted(config.presets.keys())}")
    return sorted(config.presets[name])
