import functools
import time
from typing import Any, Callable


def timeit(log_func: Callable[[str], None] = print,
           msg: str = "Function {func_name} took {elapsed_time:.2f} seconds"):
    """
    Decorator to measure and log the wall time of a harness entry point.

    Args:
        log_func: Logging function, e.g., logger.info.
        msg: Message format, supports {func_name} and {elapsed_time}.

    Returns:
        Decorated function with timing.
    """

    def decorator(func: Callable) -> Callable:

        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            start = time.perf_counter()
            result = func(*args, **kwargs)
            elapsed = time.perf_counter() - start
            if log_func:
                log_func(msg.format(func_name=func.__name__, elapsed_time=elapsed))
            return result

        return wrapper

    return decorator


def measure(func: Callable[[], Any], repetitions: int) -> list[float]:
    """
    Run ``func`` ``repetitions`` times and return the per-call wall times in seconds.

    One untimed warm-up call runs first.
    """
    func()
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter()
        func()
        samples.append(time.perf_counter() - start)
    return samples
