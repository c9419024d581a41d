"""
Cache management for oracle results
"""
import hashlib
import json
from config import CACHE_MAX_SIZE


class CacheManager:
    """Bounded memo of oracle values keyed on the evaluation point"""

    def __init__(self, max_size=CACHE_MAX_SIZE):
        self.cache = {}
        self.max_size = max_size
        self.hits = 0
        self.misses = 0

    def _get_cache_key(self, x, y, settings):
        """Generate cache key from the point and the oracle settings"""
        # json float repr round-trips, so distinct doubles never collide
        key_str = json.dumps({"x": float(x), "y": float(y), "settings": settings}, sort_keys=True)
        return hashlib.md5(key_str.encode()).hexdigest()

    def get(self, x, y, settings=None):
        """Get cached value if present"""
        cache_key = self._get_cache_key(x, y, settings or {})

        if cache_key in self.cache:
            self.hits += 1
            return self.cache[cache_key]["data"]

        self.misses += 1
        return None

    def set(self, x, y, settings, data):
        """Save value to cache with size limit"""
        if self.max_size <= 0:
            return

        cache_key = self._get_cache_key(x, y, settings or {})

        # Remove oldest if at capacity
        if cache_key not in self.cache and len(self.cache) >= self.max_size:
            # dicts keep insertion order, so the first key is the oldest
            del self.cache[next(iter(self.cache))]

        self.cache[cache_key] = {"data": data}

    def clear(self):
        """Clear all cache"""
        self.cache = {}
        self.hits = 0
        self.misses = 0

    def stats(self):
        """Get cache statistics"""
        return {
            "total_cached": len(self.cache),
            "max_size": self.max_size,
            "hits": self.hits,
            "misses": self.misses,
            "usage_pct": round(len(self.cache) / self.max_size * 100, 1) if self.max_size > 0 else 0,
        }
