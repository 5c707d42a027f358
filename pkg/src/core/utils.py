import logging
import sys
import time
import functools
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

import structlog

from src.core.config import settings

T = TypeVar("T")
R = TypeVar("R")

# stdout is reserved for reports
logging.basicConfig(format="%(message)s", stream=sys.stderr, level=settings.LOG_LEVEL.upper())

# Configure structured logging
structlog.configure(
    processors=[
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.processors.JSONRenderer()
    ],
    context_class=dict,
    logger_factory=structlog.stdlib.LoggerFactory(),
    wrapper_class=structlog.stdlib.BoundLogger,
    cache_logger_on_first_use=True,
)

logger = structlog.get_logger()


def log_execution_time(func: Callable) -> Callable:
    """Decorator to log function execution time"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
            execution_time = time.perf_counter() - start_time
            logger.info(
                "Function executed successfully",
                function_name=func.__name__,
                execution_time=execution_time
            )
            return result
        except Exception as e:
            execution_time = time.perf_counter() - start_time
            logger.error(
                "Function execution failed",
                function_name=func.__name__,
                execution_time=execution_time,
                error=str(e)
            )
            raise
    return wrapper


def worker_count(requested: Optional[int] = None) -> int:
    """Effective number of worker threads, never below one"""
    value = requested if requested is not None else settings.FLOP_VERIFY_THREADS
    return max(1, int(value or 1))


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Map ``func`` over ``items``; results always come back in input order.

    Runs on threads, so CPU-bound pure-Python ``func`` gains nothing from
    ``workers > 1``; ``func`` may be a closure, which a process pool could not pickle.
    """
    items = list(items)
    count = worker_count(workers)
    if count == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=count) as executor:
        return list(executor.map(func, items))
