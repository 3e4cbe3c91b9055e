"""Cache protocol definition for per-lasso braid words.

Any cache backend that stores braid words must conform to this interface,
so that the pipeline can swap or disable backends freely.
"""

from typing import Any, Protocol


class BraidCacheProtocol(Protocol):
    """Protocol defining the cache interface for braid word storage and retrieval.

    Keys identify one tracking problem: the curve, the lasso and the
    numerical settings. Values are braid words as signed generator indices.
    """

    async def get_braid(self, key: str) -> list[int] | None:
        """Retrieve a cached braid word.

        Args:
            key: Cache key as produced by braid_cache_key()

        Returns:
            The braid letters, or None on a cache miss.
        """
        ...

    async def store_braid(
        self, key: str, letters: list[int], strands: int, metadata: dict[str, Any]
    ) -> None:
        """Store or replace a braid word.

        Args:
            key: Cache key as produced by braid_cache_key()
            letters: Signed generator indices in composition order
            strands: Number of strands of the braid
            metadata: JSON-serializable description (lasso target, nudged, ...)
        """
        ...

    async def close(self) -> None:
        """Release the backend. Safe to call multiple times."""
        ...
