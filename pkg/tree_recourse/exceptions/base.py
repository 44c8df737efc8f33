import functools

from tree_recourse import utils

from .attributes import StringFormatChoices, Formatter, ExceptionAttribute
from .meta import ExceptionMetaClass


def string_choices_formatter(**kwargs):
    return Formatter(lambda instance: [
        utils.ensure_iterable,
        StringFormatChoices.flattener(instance),
        functools.partial(
            utils.conditionally_format_string, obj=instance, **kwargs)
    ])


class AbstractException(Exception, metaclass=ExceptionMetaClass):
    """
    Abstract base class for all exceptions raised by this package.  It is
    never raised directly.

    Each attribute in `attributes` can be provided on initialization, defined
    statically on the class (as a plain attribute or an @property) or
    defaulted with a `default_<name>` class attribute:

    >>> class CellLimitExceededError(RecourseError):
    ...     attributes = [
    ...         ExceptionAttribute(name='count'),
    ...         ExceptionAttribute(name='limit'),
    ...     ]
    ...     content = [
    ...         "The grid has {count} cells, exceeding the limit of {limit}.",
    ...         "The grid has too many cells."
    ...     ]
    >>> str(CellLimitExceededError(count=12, limit=10))
    'The grid has 12 cells, exceeding the limit of 10.'

    Parameters:
    ----------
    content (or `message` on initialization): :obj:`str` or :obj:`list`
        The core message.  When several strings are provided, the one whose
        format arguments are best filled by the instance is used.

        Default: None

    prefix: :obj:`str` or :obj:`list` (optional)
        Displayed before the `content`, chosen the same way.

        Default: None

    detail: :obj:`str` or :obj:`list` (optional)
        Additional lines displayed after the core message.

        Default: None

    detail_prefix: :obj:`str` or :obj:`list` (optional)
        A prefix for every detail line, or one prefix per line.

        Default: None

    detail_indent: :obj:`str` or :obj:`list` (optional)
        Default: "--> "

    klass: :obj:`str` or :obj:`type` or :obj:`object` (optional)
        The class or instance the error relates to.

    func: :obj:`str` or :obj:`lambda` (optional)
        The function the error relates to.

    exit_code: :obj:`int` (class attribute)
        The process exit status used when the error reaches the command line.

        Default: 1
    """
    exit_code = 1
    attributes = [
        ExceptionAttribute(name='detail', formatter=utils.ensure_iterable),
        ExceptionAttribute(name='klass', formatter=utils.obj_name),
        ExceptionAttribute(name='func', formatter=utils.obj_name),
        ExceptionAttribute(
            name='detail_indent', formatter=utils.ensure_iterable),
        ExceptionAttribute(name='indent'),
        ExceptionAttribute(
            name='content',
            accessor='message',
            formatter=string_choices_formatter()
        ),
        ExceptionAttribute(
            name='detail_prefix',
            # Every detail prefix is formatted, not just the best one.
            formatter=string_choices_formatter(optimized=False)
        ),
        ExceptionAttribute(name='prefix', formatter=string_choices_formatter()),
    ]
    default_detail_indent = "--> "

    def __init__(self, **kwargs):
        required = getattr(self, 'required_on_init', [])
        for attr in self.attributes:
            if attr.accessor in required \
                    and kwargs.get(attr.accessor, None) is None:
                raise TypeError(
                    f"The parameter {attr.accessor} is required to initialize "
                    f"the exception class {self.__class__}."
                )
            setattr(self, f'_{attr.name}', kwargs.pop(attr.accessor, None))
        super().__init__()

    def get_detail_attribute(self, i, attr):
        values = getattr(self, attr)
        if not values:
            return None
        # A single value applies to every detail line, a short list repeats its
        # last element.
        return values[min(i, len(values) - 1)]

    @classmethod
    def format_prefix_value(cls, value, msg):
        if value is None:
            return value
        end_char = '.' if msg is None else ':'
        value = value.rstrip('.:')
        return f"{value}{end_char}"

    @property
    def message(self):
        components = [utils.cjoin(
            self.indent,
            self.format_prefix_value(self.prefix, self.content),
            self.content
        )]
        for i, d in enumerate(self.detail or []):
            components.append(utils.cjoin(
                self.get_detail_attribute(i, 'detail_indent'),
                self.format_prefix_value(
                    self.get_detail_attribute(i, 'detail_prefix'), d),
                utils.conditionally_format_string(d, self)
            ))
        return "\n".join(components)

    def __str__(self):
        return self.message
