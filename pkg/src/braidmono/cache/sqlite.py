"""SQLite braid cache backed by aiosqlite."""

from __future__ import annotations

import hashlib
import json
import logging
import time
from fractions import Fraction
from pathlib import Path
from types import TracebackType
from typing import Any

import aiosqlite

logger = logging.getLogger(__name__)

SCHEMA = """
CREATE TABLE IF NOT EXISTS braids (
    key TEXT PRIMARY KEY,
    letters TEXT NOT NULL,
    strands INTEGER NOT NULL,
    metadata TEXT NOT NULL,
    created REAL NOT NULL
)
"""


def braid_cache_key(
    polynomial_text: str,
    lasso_description: str,
    precision: int,
    ceiling: int,
    tilt: Fraction,
) -> str:
    """SHA-256 over the canonical description of one tracking problem."""
    payload = "\n".join(
        [polynomial_text, lasso_description, str(precision), str(ceiling), str(tilt)]
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class SqliteBraidCache:
    """SQLite-backed braid cache implementing BraidCacheProtocol.

    The connection is opened lazily on first use.

    Attributes:
        db_path: Path to the SQLite database file.
    """

    def __init__(self, db_path: str | Path) -> None:
        """Initialize SqliteBraidCache with database path.

        Args:
            db_path: Path to the database file. Supports ~ expansion.
        """
        self.db_path: Path = Path(db_path).expanduser()
        self._connection: aiosqlite.Connection | None = None

    async def connection(self) -> aiosqlite.Connection:
        """Lazy-initialize the connection and the braids table."""
        if self._connection is None:
            self.db_path.parent.mkdir(parents=True, exist_ok=True)
            logger.info("Opening braid cache: %s", self.db_path)
            self._connection = await aiosqlite.connect(str(self.db_path))
            await self._connection.execute(SCHEMA)
            await self._connection.commit()
        return self._connection

    async def get_braid(self, key: str) -> list[int] | None:
        db = await self.connection()
        async with db.execute("SELECT letters FROM braids WHERE key = ?", (key,)) as cursor:
            row = await cursor.fetchone()
        if row is None:
            logger.debug("braid cache miss %s", key[:12])
            return None
        logger.debug("braid cache hit %s", key[:12])
        return [int(letter) for letter in json.loads(row[0])]

    async def store_braid(
        self, key: str, letters: list[int], strands: int, metadata: dict[str, Any]
    ) -> None:
        db = await self.connection()
        await db.execute(
            "INSERT OR REPLACE INTO braids (key, letters, strands, metadata, created) "
            "VALUES (?, ?, ?, ?, ?)",
            (key, json.dumps(letters), strands, json.dumps(metadata, sort_keys=True), time.time()),
        )
        await db.commit()

    async def count(self) -> int:
        db = await self.connection()
        async with db.execute("SELECT COUNT(*) FROM braids") as cursor:
            row = await cursor.fetchone()
        return int(row[0]) if row else 0

    async def clear(self) -> int:
        """Delete every cached braid and return how many were removed."""
        removed = await self.count()
        db = await self.connection()
        await db.execute("DELETE FROM braids")
        await db.commit()
        logger.info("Cleared %d cached braids", removed)
        return removed

    async def close(self) -> None:
        """Close the connection. Safe to call multiple times."""
        if self._connection is not None:
            logger.debug("Closing braid cache")
            await self._connection.close()
            self._connection = None

    async def __aenter__(self) -> SqliteBraidCache:
        return self

    async def __aexit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        await self.close()
