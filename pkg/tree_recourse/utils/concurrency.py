import concurrent.futures
import os


__all__ = ('THREADS_ENV_VARS', 'max_workers', 'parallel_map')


# Checked in order; the second is an alias of the first.
THREADS_ENV_VARS = ("TCREX_THREADS", "TREE_RECOURSE_THREADS")


def max_workers(env=None):
    """
    Returns the number of worker threads to use, read from the
    `TCREX_THREADS` environment variable (or its alias
    `TREE_RECOURSE_THREADS`) and defaulting to the number of CPUs.  Never
    less than 1.
    """
    env = os.environ if env is None else env
    for name in THREADS_ENV_VARS:
        value = env.get(name, None)
        if value is None:
            continue
        try:
            return max(1, int(value))
        except ValueError:
            from .stdout import stdout
            stdout.warning(f"Ignoring invalid {name} value {value!r}.")
    return max(1, os.cpu_count() or 1)


def parallel_map(func, items, workers=None, serial=False):
    """
    Applies `func` to every item and returns the results in the order of
    `items`, regardless of the order in which the workers finish.
    """
    items = list(items)
    workers = max_workers() if workers is None else max(1, workers)
    if serial or workers == 1 or len(items) <= 1:
        return [func(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
