import asyncio
import json
from fractions import Fraction
from functools import partial
from typing import Any, Callable

import numpy as np
from sympy import Rational

from app.core.redis_client import redis_client


def sanitize_for_json(data):
    """Recursively convert exact rationals and numpy scalars into JSON-safe types"""
    if hasattr(data, "to_dict"):
        return sanitize_for_json(data.to_dict())
    if isinstance(data, dict):
        return {str(k): sanitize_for_json(v) for k, v in data.items()}
    elif isinstance(data, (list, tuple)):
        return [sanitize_for_json(i) for i in data]
    elif isinstance(data, (Fraction, Rational)):
        # exact values travel as "p/q" strings
        return str(data)
    elif isinstance(data, np.bool_):
        return bool(data)
    elif isinstance(data, np.integer):
        return int(data)
    elif isinstance(data, np.ndarray):
        return sanitize_for_json(data.tolist())
    else:
        return data


def dumps(payload: Any) -> str:
    """Stable JSON: sorted keys, fixed indentation."""
    return json.dumps(sanitize_for_json(payload), sort_keys=True, indent=2)


async def run_cached(cache_key: str, func: Callable, *args, **kwargs) -> Any:
    """
    Run a blocking computation in the default executor and cache its
    JSON-safe result. Results are deterministic, so entries never go stale.
    """
    cached_data = await redis_client.get(cache_key)
    if cached_data is not None:
        return cached_data

    result = await asyncio.get_event_loop().run_in_executor(None, partial(func, *args, **kwargs))
    response = sanitize_for_json(result)
    await redis_client.set(cache_key, response)
    return response
