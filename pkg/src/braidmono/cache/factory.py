"""Cache factory for creating braid cache instances."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from braidmono.cache.protocol import BraidCacheProtocol

logger = logging.getLogger(__name__)


def create_cache(db_path: str | Path | None = None) -> "BraidCacheProtocol":
    """Create a SqliteBraidCache instance.

    Args:
        db_path: Path to the SQLite file. If not provided, uses the configured
                 path (XDG_DATA_HOME/braidmono/braids.db by default).

    Returns:
        SqliteBraidCache instance conforming to BraidCacheProtocol.
    """
    from braidmono.cache.sqlite import SqliteBraidCache
    from braidmono.config import settings

    if db_path is None:
        db_path = settings.cache_db_path
    logger.info("Creating SqliteBraidCache with db_path: %s", db_path)
    return SqliteBraidCache(db_path)

