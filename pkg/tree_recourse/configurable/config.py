import contextlib
import inspect

from tree_recourse import utils, exceptions

from .exceptions import (
    ConfigRequiredError, ConfigInvalidError, NotConfiguredError,
    ConfigLockedError)


class not_provided:
    """
    Placeholder for a parameter that is absent from the configuration values.
    """


class Config(exceptions.FormattableModelMixin):
    """
    A descriptor for a single configurable attribute of a :obj:`Configurable`
    class.  It defaults, validates and formats the value, and stores it on
    the instance it configures, so two instances of the same class never share
    values.

    >>> class RecourseConfig(Configurable):
    ...     configuration = [
    ...         Config(param='tau', required=True, valid_types=(int, float)),
    ...         Config(param='seed', default=0, valid_types=int),
    ...     ]

    Parameters:
    ----------
    param: :obj:`str`
        The attribute name, provided positionally or as a keyword.

    accessor: :obj:`str` (optional)
        The key the value is read under, when it differs from `param`.

    required: :obj:`bool` (optional)
        Default: False

    default (optional)
        A value, or a callable taking no arguments or the instance being
        configured.  Used when the value is absent or null.

    allow_null: :obj:`bool` (optional)
        Default: False

    valid_types: :obj:`type` or :obj:`tuple` (optional)
        Booleans are never accepted as integers.

    validate: :obj:`lambda` or :obj:`list` (optional)
        Callables taking the value, returning False or a message when the
        value is invalid.

    formatter: :obj:`lambda` or :obj:`list` (optional)
        Applied to the value when it is read.
    """
    def __init__(self, *args, **kwargs):
        if len(args) == 1 and isinstance(args[0], str):
            kwargs.setdefault('param', args[0])
        if 'param' not in kwargs:
            raise exceptions.RequiredParamError(
                param='param', klass=self.__class__)
        self._kwargs = kwargs
        exceptions.FormattableModelMixin.__init__(
            self,
            formatter=kwargs.get('formatter', None),
            format_null_values=kwargs.get('format_null_values', False)
        )

    def __repr__(self):
        return f"<Config param={self.param}>"

    @property
    def param(self):
        return self._kwargs['param']

    @property
    def accessor(self):
        return self._kwargs.get('accessor', self.param)

    @property
    def required(self):
        return self._kwargs.get('required', False)

    @property
    def allow_null(self):
        return self._kwargs.get('allow_null', False)

    @property
    def default(self):
        return self._kwargs.get('default', utils.empty)

    @property
    def default_provided(self):
        return self.default is not utils.empty

    @property
    def valid_types(self):
        valid_types = self._kwargs.get('valid_types', None)
        if valid_types is not None:
            return utils.ensure_iterable(valid_types, cast=tuple)
        return None

    @property
    def validators(self):
        return utils.ensure_iterable(self._kwargs.get('validate', None))

    @staticmethod
    def values(instance):
        return instance.__dict__.setdefault('_config_values', {})

    def read(self, config=None):
        """
        Reads the value from a :obj:`dict` (by key) or any other object (by
        attribute).  Returns :obj:`not_provided` when it is absent.
        """
        if config is None:
            return not_provided
        elif isinstance(config, dict):
            return config.get(self.accessor, not_provided)
        return getattr(config, self.accessor, not_provided)

    def default_value(self, instance):
        if utils.is_function(self.default):
            nargs = len(inspect.signature(self.default).parameters)
            if nargs == 0:
                return self.default()
            elif nargs == 1:
                return self.default(instance)
            raise exceptions.InvalidParamError(
                param='default',
                message=(
                    "If provided as a callable, the {humanized_param} "
                    "parameter must take 0 or 1 argument(s)."
                )
            )
        return self.default

    def validate(self, value):
        if value is None:
            if not self.allow_null:
                raise ConfigInvalidError(
                    param=self.param,
                    message="The config {humanized_param} cannot be null."
                )
            return value
        if self.valid_types is not None:
            is_bool = isinstance(value, bool) and bool not in self.valid_types
            if is_bool or not isinstance(value, self.valid_types):
                raise ConfigInvalidError(
                    param=self.param,
                    valid_types=self.valid_types,
                    value=value
                )
        for validator in self.validators:
            result = validator(value)
            if result is False or isinstance(result, str):
                raise ConfigInvalidError(
                    param=self.param,
                    value=value,
                    detail=result if isinstance(result, str) else None
                )
        return value

    def configure(self, instance, config=None):
        """
        Reads, defaults and validates the value for this parameter from the
        provided configuration values and stores it on the instance.
        """
        value = self.read(config)
        defaulted = False
        if value is not_provided or (value is None and not self.allow_null):
            if self.default_provided:
                value, defaulted = self.default_value(instance), True
            elif value is not_provided and self.required:
                raise ConfigRequiredError(
                    param=self.accessor, klass=instance)
            elif value is not_provided:
                return
        with self.configuring(instance):
            self.__set__(instance, self.validate(value))
        if defaulted:
            instance.__dict__.setdefault('_defaulted', set()).add(self.param)

    @contextlib.contextmanager
    def configuring(self, instance):
        instance.__dict__['_configuring'] = True
        try:
            yield self
        finally:
            instance.__dict__['_configuring'] = False

    def __get__(self, obj, objtype=None):
        if obj is None:
            return self
        values = self.values(obj)
        if self.param not in values:
            raise NotConfiguredError(param=self.param, klass=obj)
        return self.format(values[self.param])

    def __set__(self, instance, value):
        if not instance.__dict__.get('_configuring', False):
            raise ConfigLockedError(param=self.param, klass=instance)
        self.values(instance)[self.param] = value
