import redis.asyncio as redis
import json
from typing import Any, Optional

import structlog

from .config import settings

logger = structlog.get_logger(__name__)


class RedisClient:
    """JSON result cache. Every call degrades to a miss when redis is unreachable or disabled."""

    def __init__(self):
        self.redis = None

    async def connect(self):
        """Initialize Redis connection"""
        if not settings.CACHE_ENABLED:
            logger.info("cache_disabled")
            return
        try:
            self.redis = redis.from_url(
                settings.REDIS_URL,
                encoding="utf-8",
                decode_responses=True,
                socket_connect_timeout=5,
                socket_timeout=5,
            )
            await self.redis.ping()
            logger.info("redis_connected", url=settings.REDIS_URL)
        except Exception as e:
            logger.warning("redis_connection_failed", error=str(e))
            self.redis = None

    async def close(self):
        if self.redis:
            await self.redis.close()
            self.redis = None

    async def get(self, key: str) -> Optional[Any]:
        if not self.redis:
            return None

        try:
            data = await self.redis.get(key)
        except Exception as e:
            logger.warning("redis_get_failed", key=key, error=str(e))
            return None
        if data is None:
            logger.info("cache_miss", key=key)
            return None
        logger.info("cache_hit", key=key)
        return json.loads(data)

    async def set(self, key: str, value: Any, ttl: int | None = None) -> bool:
        if not self.redis:
            return False

        try:
            await self.redis.setex(key, ttl or settings.CACHE_TTL_RESULTS, json.dumps(value, sort_keys=True))
            return True
        except Exception as e:
            logger.warning("redis_set_failed", key=key, error=str(e))
            return False


# Global Redis client instance
redis_client = RedisClient()
