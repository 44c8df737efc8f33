from tree_recourse import utils, exceptions


__all__ = (
    'ConfigError', 'ConfigLookupError', 'NotConfiguredError',
    'ConfigLockedError', 'ConfigRequiredError', 'ConfigInvalidError'
)


class ConfigError(exceptions.ParamError):
    prefix = None
    content = [
        "There was a configuration error.",
        "There was an error with config {humanized_param}."
    ]

    def __init__(self, *args, **kwargs):
        from .config import Config
        if args and isinstance(args[0], Config):
            kwargs.setdefault('param', args[0].param)
        super().__init__(**kwargs)


class ConfigLookupError(ConfigError):
    required_on_init = ['param']
    content = "The config {humanized_param} does not exist."


class NotConfiguredError(ConfigError):
    """
    Raised when a configured value is read before the instance was configured.
    """
    content = [
        "The instance has not yet been configured.",
        "The config {humanized_param} was not yet configured."
    ]


class ConfigLockedError(ConfigError):
    """
    Raised when a value is assigned on an instance that was already
    configured.  Use `replace()` to obtain a modified copy.
    """
    content = [
        "The configuration is locked.",
        "The config {humanized_param} cannot be changed after configuration, "
        "use replace() instead."
    ]


class ConfigRequiredError(ConfigError):
    content = "The config {humanized_param} is required."
    required_on_init = ['param']


class ConfigInvalidError(ConfigError):
    """
    Raised when a configured value fails validation, either its type or one
    of the validators of the :obj:`Config`.
    """
    attributes = [
        exceptions.ExceptionAttribute(name='value'),
        exceptions.ExceptionAttribute(
            name='valid_types',
            formatter=utils.ensure_iterable
        ),
    ]
    content = [
        "Received invalid value {value}.",
        "Received invalid value {value} for config {humanized_param}.",
        "Received invalid value for config {humanized_param}, "
        "expected values of type {humanized_valid_types}.",
        "Received invalid value {value} for config {humanized_param}, "
        "expected values of type {humanized_valid_types}.",
    ]

    @property
    def humanized_valid_types(self):
        if not self.valid_types:
            return None
        return utils.humanize_list(
            self.valid_types, callback=utils.obj_name, conjunction="or")
