"""On-disk cache of per-lasso braid words."""

from braidmono.cache.factory import create_cache
from braidmono.cache.protocol import BraidCacheProtocol
from braidmono.cache.sqlite import SqliteBraidCache, braid_cache_key

__all__ = [
    "BraidCacheProtocol",
    "SqliteBraidCache",
    "braid_cache_key",
    "create_cache",
]
