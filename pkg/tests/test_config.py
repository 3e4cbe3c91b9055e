"""Tests for configuration management."""

from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from braidmono.config import Settings, get_default_cache_db_path, get_xdg_data_home


class TestSettings:
    """Test configuration loading and defaults."""

    def test_settings_loads_defaults(self, monkeypatch):
        """Test that settings loads with default values."""
        monkeypatch.delenv("BRAIDMONO_CACHE_DB_PATH", raising=False)
        monkeypatch.delenv("XDG_DATA_HOME", raising=False)

        test_settings = Settings(_env_file=None)
        expected = Path("~/.local/share/braidmono/braids.db").expanduser()
        assert test_settings.cache_db_path == expected
        assert test_settings.cache_enabled is True
        assert test_settings.precision_bits == 64
        assert test_settings.precision_ceiling == 4096
        assert test_settings.tilt == Fraction(1, 64)
        assert test_settings.coset_bound == 1_000_000
        assert test_settings.log_level == "INFO"

    def test_settings_respects_env_vars(self, monkeypatch, tmp_path):
        """Test that settings respects environment variable overrides."""
        custom_path = tmp_path / "test_braids.db"
        monkeypatch.setenv("BRAIDMONO_CACHE_DB_PATH", str(custom_path))
        monkeypatch.setenv("BRAIDMONO_CACHE_ENABLED", "false")
        monkeypatch.setenv("BRAIDMONO_PRECISION_BITS", "128")
        monkeypatch.setenv("BRAIDMONO_COSET_BOUND", "5000")
        monkeypatch.setenv("BRAIDMONO_PROJECTION_TILT", "1/32")
        monkeypatch.setenv("BRAIDMONO_LOG_LEVEL", "DEBUG")

        test_settings = Settings(_env_file=None)

        assert test_settings.cache_db_path == custom_path
        assert test_settings.cache_enabled is False
        assert test_settings.precision_bits == 128
        assert test_settings.coset_bound == 5000
        assert test_settings.tilt == Fraction(1, 32)
        assert test_settings.log_level == "DEBUG"

    def test_tilde_is_expanded(self, monkeypatch):
        monkeypatch.setenv("BRAIDMONO_CACHE_DB_PATH", "~/braids.db")
        assert Settings(_env_file=None).cache_db_path == Path("~/braids.db").expanduser()

    @pytest.mark.parametrize("tilt", ["0", "1/2", "-1/64"])
    def test_tilt_out_of_range_is_rejected(self, monkeypatch, tilt):
        monkeypatch.setenv("BRAIDMONO_PROJECTION_TILT", tilt)
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_ceiling_below_start_is_rejected(self, monkeypatch):
        monkeypatch.setenv("BRAIDMONO_PRECISION_BITS", "256")
        monkeypatch.setenv("BRAIDMONO_PRECISION_CEILING", "128")
        with pytest.raises(ValidationError, match="precision_ceiling"):
            Settings(_env_file=None)


class TestXdgDataHome:
    """Test XDG_DATA_HOME path resolution."""

    def test_get_xdg_data_home_with_env_var(self, monkeypatch, tmp_path):
        """Test that XDG_DATA_HOME environment variable is respected."""
        custom_xdg = tmp_path / "custom_xdg"
        monkeypatch.setenv("XDG_DATA_HOME", str(custom_xdg))

        assert get_xdg_data_home() == custom_xdg
        assert get_default_cache_db_path() == custom_xdg / "braidmono" / "braids.db"

    def test_get_xdg_data_home_without_env_var(self, monkeypatch):
        """Test fallback to ~/.local/share when XDG_DATA_HOME is not set."""
        monkeypatch.delenv("XDG_DATA_HOME", raising=False)

        assert get_xdg_data_home() == Path("~/.local/share").expanduser()
