from abc import ABC

from tree_recourse import utils


__all__ = (
    'FormattableModelMixin', 'Formatter', 'ExceptionAttribute',
    'StringFormatChoices', 'ExcParams'
)


class FormattableModelMixin:
    """
    A mixin for objects that are configured with one or more formatters that
    are applied to a value before it is returned.

    Parameters:
    ----------
    formatter: :obj:`lambda` or :obj:`Formatter` or :obj:`list` (optional)
        A single formatter or an iterable of formatters, applied in order.  A
        plain function receives only the value, a :obj:`Formatter` also
        receives the extra context passed to :obj:`format`.

    format_null_values: :obj:`bool` (optional)
        Whether or not the formatters are applied to `None`.

        Default: False
    """
    def __init__(self, **kwargs):
        self._formatter = kwargs.pop('formatter', None)
        self._format_null_values = kwargs.pop('format_null_values', False)

    @property
    def format_null_values(self):
        return self._format_null_values

    @property
    def formatter(self):
        return utils.ensure_iterable(self._formatter)

    def format(self, value, *args, **kwargs):
        if value is None and not self.format_null_values:
            return value
        for fmt in self.formatter:
            if isinstance(fmt, Formatter):
                value = fmt(value, *args, **kwargs)
            else:
                value = fmt(value)
        return value


class Formatter:
    """
    Wraps a factory that, given some context (typically the instance that owns
    the value), returns the formatting function or functions to apply.

    >>> ExceptionAttribute(
    ...     name='content',
    ...     formatter=Formatter(lambda instance: [
    ...         utils.ensure_iterable,
    ...         functools.partial(
    ...             utils.conditionally_format_string, obj=instance)
    ...     ])
    ... )
    """
    def __init__(self, func):
        self._func = func

    def __call__(self, value, *args, **kwargs):
        for func in utils.ensure_iterable(self._func(*args, **kwargs)):
            value = func(value)
        return value


class ExceptionAttribute(FormattableModelMixin):
    """
    Describes an attribute of an :obj:`AbstractException`: how it is provided
    on initialization (`accessor`), what it defaults to and how it is
    formatted when read.
    """
    def __init__(self, name, **kwargs):
        self._name = name
        self._accessor = kwargs.pop('accessor', None)
        self._default = kwargs.pop('default', None)
        FormattableModelMixin.__init__(self, **kwargs)

    def __repr__(self):
        return f"<ExceptionAttribute name={self._name}>"

    @property
    def name(self):
        return self._name

    @property
    def default(self):
        return self._default

    @property
    def accessor(self):
        return self._accessor or self._name


class StringFormatChoices:
    """
    A conditional group of string choices for an exception's `content`,
    `prefix` or `detail`.  The choices only take part in the selection of the
    best formatted string when `func(instance)` is True.  When `isolated`, a
    passing group replaces every other choice.

    >>> content = [
    ...     StringFormatChoices(
    ...         func=lambda instance: instance.limit is not None,
    ...         isolated=True,
    ...         choices=["The grid has {count} cells, the limit is {limit}."]
    ...     ),
    ...     "The grid has {count} cells."
    ... ]
    """
    def __init__(self, func, choices, isolated=False):
        self._func = func
        self._choices = choices
        self._isolated = isolated

    def __call__(self, instance):
        return self._func(instance) is True

    @property
    def choices(self):
        return utils.ensure_iterable(self._choices)

    @property
    def isolated(self):
        return self._isolated

    @classmethod
    def flattener(cls, instance):
        def fn(value):
            return cls.flatten(instance, value)
        return fn

    @classmethod
    def flatten(cls, instance, value):
        flattened = []
        for choice in value:
            if isinstance(choice, dict):
                choice = cls(**choice)
            if not isinstance(choice, cls):
                flattened.append(choice)
            elif choice(instance):
                if choice.isolated:
                    return choice.choices
                flattened += choice.choices
        return flattened


class ExcParams(ABC):
    """
    Base for objects that construct and raise an exception on behalf of an
    instance, configured by `exc_cls`, `exc_kwargs` and `exc_message`.  Both
    `exc_kwargs` and `exc_message` may be callables taking the instance.
    """
    attrs = ['exc_cls', 'exc_kwargs', 'exc_message']

    def __init__(self, **kwargs):
        for attr in self.attrs:
            setattr(self, f"_{attr}", kwargs.pop(attr, None))

    @property
    def exc_cls(self):
        return self._exc_cls

    def exc_kwargs(self, instance):
        if self._exc_kwargs is not None and callable(self._exc_kwargs):
            return self._exc_kwargs(instance)
        return self._exc_kwargs

    def exc_message(self, instance, **kwargs):
        if kwargs.get('message') is not None:
            return kwargs['message']
        elif self._exc_message is not None:
            if utils.is_function(self._exc_message):
                return self._exc_message(instance)
            return self._exc_message
        return kwargs.get(
            'default_message',
            "There was an error related to an instance of "
            f"{utils.obj_name(instance)}."
        )
