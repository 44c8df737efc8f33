__all__ = (
    'empty', 'LazyFn', 'obj_name', 'is_function', 'is_iterable',
    'iterable_from_args', 'ensure_iterable', 'get_attribute',
    'merge_without_duplicates'
)


class empty:
    """
    Represents the absence of a value in places where `None` is itself a
    meaningful value (e.g. a config that is allowed to be null).
    """
    @classmethod
    def default(cls, value, default):
        if value is empty:
            return default
        return value


class LazyFn:
    """
    Defers a call until the value is actually needed.  Arguments that are
    themselves callables are evaluated at call time, which lets defaults such
    as the current working directory be resolved when a workflow runs rather
    than when the module is imported.

    >>> default_dir = LazyFn(pathlib.Path, args=[os.getcwd])
    >>> default_dir()
    PosixPath('/home/...')
    """
    def __init__(self, func, *args, **kwargs):
        self._func = func
        if len(args) == 0 and 'args' in kwargs:
            self._args = list(kwargs.pop('args'))
        else:
            self._args = list(args)
        self._kwargs = kwargs.pop('kwargs', kwargs)

    def __call__(self):
        arguments = [a() if is_function(a) else a for a in self._args]
        return self._func(*arguments, **self._kwargs)


def obj_name(obj):
    if isinstance(obj, str):
        return obj
    elif hasattr(obj, '__name__'):
        return obj.__name__
    return obj.__class__.__name__


def is_function(func):
    return callable(func) and not isinstance(func, type)


def is_iterable(value):
    return not isinstance(value, (str, bytes)) and hasattr(value, '__iter__')


def iterable_from_args(*args, cast=list, strict=True):
    """
    Normalizes the arguments `f(a, b)` and `f([a, b])` to the same iterable.
    """
    if len(args) == 0:
        if strict:
            raise ValueError("At least one value must be provided.")
        return cast()
    elif len(args) == 1:
        if is_iterable(args[0]):
            return cast(args[0])
        return cast([args[0]])
    return cast(args[:])


def ensure_iterable(value, strict=False, cast=list, cast_none=True):
    """
    Ensures that the provided value is an iterable that can be indexed
    numerically.  Strings are treated as a single value.
    """
    if value is None:
        return cast() if cast_none else None
    elif isinstance(value, str):
        return cast([value])
    elif hasattr(value, '__iter__') and not isinstance(value, type):
        # A set is iterable but not indexable, so always cast.
        return cast(value)
    elif strict:
        raise ValueError(f"Value {value} is not an iterable.")
    return cast([value])


def get_attribute(*args, **kwargs):
    """
    Reads an attribute from an object, a class or a :obj:`dict`.  Nested
    attributes are separated by the `delimiter`, i.e. `get_attribute(obj,
    'target.labels')`.

    Parameters:
    ----------
    obj: :obj:`type` or :obj:`object` or :obj:`dict` (optional)
        The object the attribute is read from.  If not provided positionally,
        the keyword arguments are used as the lookup mapping.

    attr: :obj:`str`
        The possibly nested attribute name.

    strict: :obj:`bool` (optional)
        Whether or not a missing attribute raises instead of returning the
        `default`.

        Default: True

    default (optional)
        Returned for missing attributes when `strict` is False.

        Default: None
    """
    strict = kwargs.pop('strict', True)
    default = kwargs.pop('default', None)
    delimiter = kwargs.pop('delimiter', '.')

    if len(args) == 2:
        obj, attr = args
    elif len(args) == 1:
        obj, attr = dict(kwargs), args[0]
    else:
        raise TypeError(
            "The number of positional arguments should be 1 or 2, but "
            f"received {len(args)}."
        )

    parts = [p for p in attr.split(delimiter) if p]
    if len(parts) > 1:
        # Intermediate lookups cannot fall back to a default.
        value = get_attribute(obj, parts[0], strict=True, delimiter=delimiter)
        return get_attribute(value, delimiter.join(parts[1:]),
            strict=strict, default=default, delimiter=delimiter)
    attr = parts[0] if parts else attr

    if isinstance(obj, dict):
        if attr not in obj and strict:
            raise KeyError(
                f"The attribute {attr} does not exist in the provided "
                "dictionary."
            )
        return obj.get(attr, default)
    elif not hasattr(obj, attr) and strict:
        raise AttributeError(
            f"The attribute {attr} does not exist on the provided "
            f"{obj_name(obj)}."
        )
    return getattr(obj, attr, default)


def merge_without_duplicates(*arrays, attr=None, prioritized=None):
    """
    Merges the provided arrays in order, keeping one element per unique value
    of `attr`.  An element defined later replaces an earlier one with the same
    unique value unless `prioritized` returns False for the later element.

    This is how attribute and configuration lists declared on a class are
    combined with those declared on its bases.
    """
    def unique_value(e):
        return e if attr is None else get_attribute(e, attr)

    merged = []
    for array in arrays:
        for element in array or []:
            value = unique_value(element)
            existing = [i for i, e in enumerate(merged)
                if unique_value(e) == value]
            if not existing:
                merged.append(element)
            elif prioritized is None or prioritized(element) is not False:
                merged[existing[0]] = element
    return merged
