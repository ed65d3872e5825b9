"""Tests for the memo cache, error hierarchy and shared validators."""
import logging
import threading

import pytest

from src.config import Config
from src.core.cache import Cache, get_cache, rule_cache
from src.core.exceptions import ConfigError, DomainError, DopplerKeygenError, NumericError, UsageError
from src.utils.logger import setup_logging
from src.utils.validators import (
    require_nonempty,
    require_nonnegative,
    require_nonnegative_int,
    require_positive,
    require_positive_int,
)


class TestCache:
    """Test suite for Cache."""

    def test_set_and_get(self):
        """Test storing and retrieving a value."""
        cache = Cache()
        cache.set(("rule", 3), "value")
        assert cache.get(("rule", 3)) == "value"
        assert cache.exists(("rule", 3))
        assert cache.get("missing") is None

    def test_eviction_of_oldest(self):
        """Test that the oldest entry is dropped once max_entries is reached."""
        cache = Cache(max_entries=2)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.set("c", 3)
        assert not cache.exists("a")
        assert len(cache) == 2

    def test_get_or_create_builds_once(self):
        """Test that the factory only runs on a miss."""
        cache = Cache()
        calls = []

        def factory():
            calls.append(1)
            return object()

        first = cache.get_or_create("k", factory)
        second = cache.get_or_create("k", factory)
        assert first is second
        assert len(calls) == 1

    def test_concurrent_get_or_create(self):
        """Test that racing threads all see one stored value."""
        cache = Cache()
        results = []

        def worker():
            results.append(cache.get_or_create("shared", lambda: object()))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r is cache.get("shared") for r in results)

    def test_delete_and_clear(self):
        """Test removing one and then all entries."""
        cache = Cache()
        cache.set("a", 1)
        cache.set("b", 2)
        cache.delete("a")
        assert not cache.exists("a")
        cache.clear()
        assert len(cache) == 0

    def test_global_instance(self):
        """Test that get_cache returns the quadrature-rule cache."""
        assert get_cache() is rule_cache


class TestExceptions:
    """Test suite for the error hierarchy."""

    def test_hierarchy(self):
        """Test that package errors also subclass the matching builtins."""
        assert issubclass(DomainError, ValueError)
        assert issubclass(UsageError, ValueError)
        assert issubclass(NumericError, ArithmeticError)
        for cls in (DomainError, UsageError, NumericError, ConfigError):
            assert issubclass(cls, DopplerKeygenError)

    def test_config_error_lists_every_problem(self):
        """Test that ConfigError keeps and reports each message."""
        err = ConfigError("bad config", ["seed: too large", "pilot_length: must be >= 1"])
        assert err.errors == ["seed: too large", "pilot_length: must be >= 1"]
        assert "seed: too large" in str(err)
        assert "pilot_length" in str(err)


class TestValidators:
    """Test suite for the shared precondition checks."""

    def test_accepts_valid_values(self):
        """Test that valid inputs are returned unchanged."""
        assert require_positive(2.5, "x") == 2.5
        assert require_nonnegative(0.0, "x") == 0.0
        assert require_positive_int(3, "n") == 3
        assert require_nonnegative_int(0, "n") == 0
        assert require_nonempty([1], "values") == [1]

    @pytest.mark.parametrize("check,value", [
        (require_positive, 0.0),
        (require_positive, float("inf")),
        (require_nonnegative, -1e-300),
        (require_positive_int, 0),
        (require_positive_int, 2.5),
        (require_positive_int, True),
        (require_nonnegative_int, -1),
        (require_nonempty, []),
    ])
    def test_rejects_invalid_values(self, check, value):
        """Test that each check raises DomainError on a bad input."""
        with pytest.raises(DomainError):
            check(value, "arg")


class TestLogging:
    """Test suite for setup_logging and runtime settings."""

    @pytest.fixture(autouse=True)
    def restore_root_logger(self):
        root = logging.getLogger()
        handlers, level = root.handlers[:], root.level
        yield
        root.handlers[:] = handlers
        root.setLevel(level)

    def test_level_names(self):
        """Test that level names are accepted in any case and unknown ones fall back to INFO."""
        setup_logging("debug")
        assert logging.getLogger().level == logging.DEBUG
        setup_logging("chatty")
        assert logging.getLogger().level == logging.INFO
        setup_logging(logging.WARNING)
        assert logging.getLogger().level == logging.WARNING

    def test_debug_flag_overrides_level(self, monkeypatch):
        """Test that DEBUG forces the effective level."""
        settings = Config()
        monkeypatch.setattr(Config, "DEBUG", True)
        assert settings.log_level == "DEBUG"
        monkeypatch.setattr(Config, "DEBUG", False)
        monkeypatch.setattr(Config, "LOG_LEVEL", "ERROR")
        assert settings.log_level == "ERROR"
