import math
import pathlib


__all__ = (
    'path_formatter', 'humanize_list', 'format_number', 'CONJUNCTIONS')


CONJUNCTIONS = ['or', 'and']


def path_formatter():
    def _formatter(value):
        if value is None:
            return None
        elif not isinstance(value, pathlib.Path):
            return pathlib.Path(value)
        return value
    return _formatter


def humanize_list(value, callback=str, conjunction='and', oxford_comma=True):
    """
    Returns a human readable string for the provided iterable.

    >>> humanize_list(['rho', 'tau', 'trees'])
    'rho, tau, and trees'
    """
    if conjunction.lower() not in CONJUNCTIONS:
        raise TypeError(
            "Expected values `or` or `and` for conjunction, but received "
            f"{conjunction}."
        )
    elif value is None:
        return value

    value = list(value)
    if len(value) == 0:
        return ""
    elif len(value) == 1:
        return callback(value[0])
    joined = ", ".join(map(callback, value[:-1]))
    if len(value) >= 3 and oxford_comma:
        joined += ","
    return f"{joined} {conjunction.lower()} {callback(value[-1])}"


def format_number(value):
    """
    Formats a real number with the shortest decimal representation that
    round-trips through :obj:`float`.  Integral values drop the trailing
    `.0` so that thresholds such as `3.0` print as `3`.

    >>> format_number(2.5)
    '2.5'
    >>> format_number(3.0)
    '3'
    >>> format_number(float('-inf'))
    '-inf'
    """
    value = float(value)
    if math.isinf(value):
        return "+inf" if value > 0 else "-inf"
    text = repr(value)
    if text.endswith(".0"):
        return text[:-2]
    return text
