"""Result caches for analysis lookups: bounded LRU and unlimited.

The LRU policy is the recommended one; the unlimited cache is provided for
completeness but grows without bound. Failures of the compute function are
propagated and never cached. Operations are atomic with respect to each
other; concurrent misses on the same key may both compute, last write wins
(the compute function is required to be deterministic, so all callers see
an equivalent value).
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Callable, Hashable

DEFAULT_CAPACITY = 8192


@dataclass(frozen=True)
class CacheConfig:
    policy: str = "lru"
    capacity: int = DEFAULT_CAPACITY

    def __post_init__(self):
        if self.policy not in ("lru", "unlimited"):
            raise ValueError(f"unknown cache policy {self.policy!r}")
        if self.policy == "lru" and self.capacity < 1:
            raise ValueError("lru capacity must be >= 1")


@dataclass(frozen=True)
class CacheStats:
    hits: int
    misses: int
    evictions: int
    current_size: int


class AnalysisCache:
    """get_or_compute cache with hit/miss/eviction accounting."""

    def __init__(self, config: CacheConfig | None = None):
        self.config = config or CacheConfig()
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0
        self._evictions = 0

    def get_or_compute(self, key: Hashable, compute: Callable):
        with self._lock:
            if key in self._data:
                self._hits += 1
                self._data.move_to_end(key)
                return self._data[key]
            self._misses += 1
        # Compute outside the lock: a slow miss must not serialize readers.
        value = compute(key)
        with self._lock:
            if key not in self._data:
                if (
                    self.config.policy == "lru"
                    and len(self._data) >= self.config.capacity
                ):
                    self._data.popitem(last=False)
                    self._evictions += 1
                self._data[key] = value
            else:
                self._data.move_to_end(key)
        return value

    @property
    def stats(self) -> CacheStats:
        with self._lock:
            return CacheStats(self._hits, self._misses, self._evictions, len(self._data))

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self._hits = self._misses = self._evictions = 0
