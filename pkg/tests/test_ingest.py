"""
Tests for series ingestion in src/tailspan/ingest.py.
"""

import numpy as np
import pytest


class TestLoadSeries:
    """Test load_series on well-formed files."""

    def test_three_rows(self, simple_csv):
        """Test a header plus three values."""
        from tailspan.ingest import SeriesFile, load_series

        loaded = load_series(SeriesFile(path=simple_csv, value_column="a"))
        assert loaded.signal.n == 3
        np.testing.assert_array_equal(loaded.signal.values, [1, 2, 3])
        assert loaded.labels == ("0", "1", "2")
        assert loaded.name == "simple"

    def test_column_by_position(self, labelled_csv):
        """Test selecting the value column by 0-based position."""
        from tailspan.ingest import SeriesFile, load_series

        by_name = load_series(SeriesFile(path=labelled_csv, value_column="rate"))
        by_pos = load_series(SeriesFile(path=labelled_csv, value_column=1))
        by_text = load_series(SeriesFile(path=labelled_csv, value_column="1"))
        assert by_name.signal == by_pos.signal == by_text.signal

    def test_label_column(self, labelled_csv):
        """Test that labels are carried in file order."""
        from tailspan.ingest import SeriesFile, load_series

        loaded = load_series(SeriesFile(path=labelled_csv, value_column="rate", label_column="date"))
        assert loaded.labels[0] == "2020-01-01"
        assert loaded.labels[-1] == "2020-01-04"
        np.testing.assert_array_equal(loaded.signal.values.real, [1.5, 2.5, 3.0, 2.0])

    def test_imag_column(self, tmp_path):
        """Test combining real and imaginary columns."""
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "complex.csv"
        path.write_text("index,real,imag\n0,1,0\n1,0,1\n2,-1,0\n")
        loaded = load_series(SeriesFile(path=path, value_column="real", imag_column="imag"))
        np.testing.assert_array_equal(loaded.signal.values, [1, 1j, -1])

    def test_no_header(self, tmp_path):
        """Test a header-less file."""
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "plain.csv"
        path.write_text("4\n5\n6\n")
        loaded = load_series(SeriesFile(path=path, value_column=0, has_header=False))
        np.testing.assert_array_equal(loaded.signal.values.real, [4, 5, 6])

    def test_semicolon_delimiter(self, tmp_path):
        """Test a custom delimiter."""
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "semi.csv"
        path.write_text("t;v\n0;1.5\n1;2.5\n")
        loaded = load_series(SeriesFile(path=path, value_column="v", delimiter=";"))
        np.testing.assert_array_equal(loaded.signal.values.real, [1.5, 2.5])

    def test_crlf_and_trailing_blank_lines(self, tmp_path):
        """Test Windows line endings and blank lines at the end."""
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "crlf.csv"
        path.write_bytes(b"v\r\n1\r\n2\r\n3\r\n\r\n\r\n")
        loaded = load_series(SeriesFile(path=path, value_column="v"))
        np.testing.assert_array_equal(loaded.signal.values.real, [1, 2, 3])

    def test_whitespace_around_numbers(self, tmp_path):
        """Test that cells are stripped before parsing."""
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "spaces.csv"
        path.write_text("v\n 1.0\n2.5 \n")
        loaded = load_series(SeriesFile(path=path, value_column="v"))
        np.testing.assert_array_equal(loaded.signal.values.real, [1.0, 2.5])

    def test_from_config_defaults(self, simple_csv):
        """Test that SeriesFile.from_config reads ingestion defaults."""
        from tailspan.ingest import SeriesFile

        cfg = SeriesFile.from_config(simple_csv, value_column="a", delimiter=None)
        assert cfg.delimiter == ","
        assert cfg.has_header is True
        assert cfg.interpolate_missing is False


class TestIngestErrors:
    """Test errors raised by load_series."""

    def test_missing_file(self, tmp_path):
        """Test a path that does not exist."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        with pytest.raises(IngestError, match="not found"):
            load_series(SeriesFile(path=tmp_path / "absent.csv"))

    def test_empty_file(self, tmp_path):
        """Test a zero-byte file."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(IngestError, match="empty"):
            load_series(SeriesFile(path=path))

    def test_header_only(self, tmp_path):
        """Test a file with a header and no rows."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "header.csv"
        path.write_text("v\n")
        with pytest.raises(IngestError, match="no data rows"):
            load_series(SeriesFile(path=path, value_column="v"))

    def test_unparseable_cell_reports_row(self, tmp_path):
        """Test that a bad cell names its row and file line."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "bad.csv"
        path.write_text("v\n1\n2\nabc\n4\n")
        with pytest.raises(IngestError) as excinfo:
            load_series(SeriesFile(path=path, value_column="v"))

        assert excinfo.value.line == 4
        assert "row 2" in str(excinfo.value)
        assert "abc" in str(excinfo.value)
        assert excinfo.value.code == "ingest_error"

    def test_underscore_digits_rejected(self, tmp_path):
        """Test that '1_000' is not read as a number."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "underscore.csv"
        path.write_text("v\n1\n1_000\n")
        with pytest.raises(IngestError, match="cannot parse '1_000'") as excinfo:
            load_series(SeriesFile(path=path, value_column="v"))
        assert excinfo.value.line == 3

    def test_non_finite_cell(self, tmp_path):
        """Test that 'inf' is rejected."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "inf.csv"
        path.write_text("v\n1\ninf\n")
        with pytest.raises(IngestError, match="not finite"):
            load_series(SeriesFile(path=path, value_column="v"))

    def test_unknown_column(self, simple_csv):
        """Test selecting a column that does not exist."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        with pytest.raises(IngestError, match="matches 0 columns"):
            load_series(SeriesFile(path=simple_csv, value_column="b"))

    def test_column_position_out_of_range(self, simple_csv):
        """Test a column position past the last column."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        with pytest.raises(IngestError, match="out of range"):
            load_series(SeriesFile(path=simple_csv, value_column=3))

    def test_missing_value_is_error(self, missing_csv):
        """Test that a missing cell fails by default."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        with pytest.raises(IngestError) as excinfo:
            load_series(SeriesFile(path=missing_csv, value_column="v"))
        assert "missing value" in str(excinfo.value)
        assert excinfo.value.line == 3


class TestInterpolation:
    """Test opt-in interpolation of missing values."""

    def test_interior_gap(self, missing_csv):
        """Test a gap between two known values."""
        from tailspan.ingest import SeriesFile, load_series

        loaded = load_series(SeriesFile(path=missing_csv, value_column="v", interpolate_missing=True))
        np.testing.assert_allclose(loaded.signal.values.real, [1, 2, 3, 4])
        assert loaded.interpolated == (1,)

    def test_edges_take_nearest(self, tmp_path):
        """Test gaps at both ends."""
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "edges.csv"
        path.write_text("v\nNA\n2\n4\nnull\n")
        loaded = load_series(SeriesFile(path=path, value_column="v", interpolate_missing=True))
        np.testing.assert_allclose(loaded.signal.values.real, [2, 2, 4, 4])

    def test_all_missing(self, tmp_path):
        """Test that nothing can be interpolated from nothing."""
        from tailspan.errors import IngestError
        from tailspan.ingest import SeriesFile, load_series

        path = tmp_path / "none.csv"
        path.write_text("v,w\nNA,1\nNA,2\n")
        with pytest.raises(IngestError, match="every value is missing"):
            load_series(SeriesFile(path=path, value_column="v", interpolate_missing=True))
