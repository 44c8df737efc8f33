import string as string_module

from .builtins import empty, ensure_iterable, get_attribute, is_iterable


__all__ = (
    'cjoin', 'get_string_formatted_kwargs', 'conditionally_format_string')


class ConditionalString:
    def __init__(self, string, conditional):
        self._string = string
        self._conditional = conditional

    def value(self):
        return self._string if self._conditional else None


def cjoin(*args, delimiter=" ", invalids=empty, formatter=None):
    """
    Joins the provided arguments into a single string, skipping any argument
    that is in `invalids` (by default just `None`).  Arguments wrapped in
    :obj:`cjoin.Conditional` are only included when their conditional holds.

    >>> cjoin("Rule", None, "R3")
    'Rule R3'
    >>> cjoin("change", cjoin.Conditional("(worst case)", False))
    'change'
    """
    invalids = ensure_iterable(empty.default(invalids, [None]))
    parts = []
    for a in args:
        if isinstance(a, ConditionalString):
            a = a.value()
        if a in invalids:
            continue
        parts.append(formatter(str(a)) if formatter is not None else str(a))
    return delimiter.join(parts)


cjoin.Conditional = ConditionalString


def get_string_formatted_kwargs(value):
    """
    Returns the names of the format arguments in the provided string, in order
    and without duplicates.

    >>> get_string_formatted_kwargs("Rule {rule} needs {count} changes.")
    ['rule', 'count']
    """
    names = []
    for _, field_name, _, _ in string_module.Formatter().parse(value):
        if field_name and field_name not in names:
            names.append(field_name)
    return names


def conditionally_format_string(string, *args, **kwargs):
    """
    Formats a string, or chooses and formats the best of several strings, by
    injecting only those format arguments that are present and non-null on
    the provided object, :obj:`dict` or keyword arguments.  Missing arguments
    are left in place instead of raising.

    When several strings are provided and `optimized` is True (the default),
    the chosen string is the one with the fewest missing arguments, and among
    those the one with the most arguments:

    >>> conditionally_format_string([
    ...     "Received {count} cells, limit is {limit}.",
    ...     "Received {count} cells.",
    ...     "Received too many cells."
    ... ], {"count": 12})
    'Received 12 cells.'

    When `optimized` is False, every string is formatted and the list is
    returned.

    Parameters:
    ----------
    string: :obj:`str` or :obj:`list` or :obj:`tuple`
        The string or the candidate strings.

    obj: :obj:`dict` or :obj:`object` or :obj:`type` (optional)
        The source of format argument values.  Can be provided as the second
        positional argument, as the `obj` keyword or implicitly as keyword
        arguments.

    optimized: :obj:`bool` (optional)
        Default: True

    is_null: :obj:`lambda` (optional)
        Determines whether a value counts as missing.

        Default: lambda v: v is None
    """
    if len(args) not in (0, 1):
        raise TypeError(f"Expected 0 or 1 arguments but received {len(args)}.")

    optimized = kwargs.pop('optimized', True)
    is_null = kwargs.pop('is_null', lambda v: v is None)

    if args:
        obj = args[0]
    elif 'obj' in kwargs:
        obj = kwargs.pop('obj')
    else:
        obj = dict(kwargs)

    def lookup(name):
        return get_attribute(obj, name, strict=False)

    def missing_count(s):
        names = get_string_formatted_kwargs(s)
        return len([n for n in names if is_null(lookup(n))]), len(names)

    def best_choice(choices):
        scored = [(s, ) + missing_count(s) for s in choices]
        fewest_missing = min(t[1] for t in scored)
        candidates = [t for t in scored if t[1] == fewest_missing]
        most_args = max(t[2] for t in candidates)
        return [t[0] for t in candidates if t[2] == most_args][0]

    def conditionally_format(s):
        for name in get_string_formatted_kwargs(s):
            value = lookup(name)
            if not is_null(value):
                s = s.replace("{%s}" % name, str(value))
        return s.strip()

    if string is None or (is_iterable(string) and len(string) == 0):
        return None
    strings = ensure_iterable(string)
    if any(not isinstance(s, str) for s in strings):
        raise TypeError("Expected all format choices to be of type str.")
    if optimized:
        return conditionally_format(best_choice(strings))
    elif is_iterable(string):
        return [conditionally_format(s) for s in strings]
    return conditionally_format(string)
