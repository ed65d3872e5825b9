"""Thread-safe memo for immutable, expensive-to-build values."""
import logging
import threading
from typing import Any, Callable, Hashable, Optional

logger = logging.getLogger(__name__)


class Cache:
    """Simple in-memory cache safe for concurrent readers and writers."""

    def __init__(self, max_entries: int = 256):
        """
        Initialize cache.

        Args:
            max_entries: Entries kept before the oldest one is evicted
        """
        self.max_entries = max_entries
        self._cache: dict = {}
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Optional[Any]:
        """
        Get value from cache.

        Args:
            key: Cache key

        Returns:
            Cached value or None if not found
        """
        with self._lock:
            return self._cache.get(key)

    def set(self, key: Hashable, value: Any) -> None:
        """
        Set value in cache.

        Args:
            key: Cache key
            value: Value to cache (must not be mutated afterwards)
        """
        with self._lock:
            self._store(key, value)

    def get_or_create(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Return the cached value for key, building it with factory on a miss.

        The factory runs outside the lock; two racing builders produce equal
        values and the first stored one wins.
        """
        value = self.get(key)
        if value is not None:
            return value
        logger.debug(f"Cache miss for {key!r}")
        value = factory()
        with self._lock:
            if key in self._cache:
                return self._cache[key]
            self._store(key, value)
        return value

    def _store(self, key: Hashable, value: Any) -> None:
        # Caller holds the lock
        if key not in self._cache and len(self._cache) >= self.max_entries:
            oldest = next(iter(self._cache))
            del self._cache[oldest]
        self._cache[key] = value

    def delete(self, key: Hashable) -> None:
        """Delete key from cache."""
        with self._lock:
            self._cache.pop(key, None)

    def clear(self) -> None:
        """Clear all cache."""
        with self._lock:
            self._cache.clear()

    def exists(self, key: Hashable) -> bool:
        """Check if key exists."""
        with self._lock:
            return key in self._cache

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)


# Global cache for quadrature rules keyed by (order, exponent)
rule_cache = Cache(max_entries=256)


def get_cache() -> Cache:
    """Get the global quadrature-rule cache instance."""
    return rule_cache
