from tree_recourse import utils

from .decorators import ensure_configured
from .exceptions import ConfigLookupError
from .meta import ConfigurableMetaClass


__all__ = ('Configurable', )


class Configurable(metaclass=ConfigurableMetaClass):
    """
    Base class for objects whose attributes are declared as :obj:`Config`
    descriptors.  Classes that set `configure_on_init = True` are configured
    from the `config` keyword, or from matching keyword arguments, when they
    are created:

    >>> config = RecourseConfig(tau=0.9, rho=0.1, target=target)
    >>> config.trees
    1
    >>> config.replace(trees=5).trees
    5

    Once configured, the values of an instance are locked.
    """
    configure_on_init = False

    def __init__(self, **kwargs):
        self._was_configured = False
        if self.is_configurable and self.configure_on_init:
            config = kwargs.pop('config', utils.empty)
            if config is utils.empty:
                config = {
                    c.accessor: kwargs.pop(c.accessor)
                    for c in self.configuration if c.accessor in kwargs
                }
            self.configure(config)

    def __repr__(self):
        if not self.was_configured:
            return f"<{self.__class__.__name__} (unconfigured)>"
        values = " ".join([f"{k}={v!r}" for k, v in self.to_dict().items()])
        return f"<{self.__class__.__name__} {values}>"

    @property
    def was_configured(self):
        return self.__dict__.get('_was_configured', False)

    def configure(self, config=None, **kwargs):
        """
        Configures every :obj:`Config` of the class from the provided values,
        given as a :obj:`dict`, an object or keyword arguments.
        """
        if config is None and kwargs:
            config = kwargs
        for cfg in self.configuration:
            cfg.configure(self, config=config)
        self._was_configured = True
        self.post_configure()

    def post_configure(self):
        """
        Hook for validation across several configured values.
        """

    @ensure_configured(is_property=True)
    def defaulted_configurations(self):
        defaulted = self.__dict__.get('_defaulted', set())
        return [c for c in self.configuration if c.param in defaulted]

    @ensure_configured
    def configuration_was_defaulted(self, param):
        if param not in [c.param for c in self.configuration]:
            raise ConfigLookupError(param=param)
        return param in [c.param for c in self.defaulted_configurations]

    @ensure_configured
    def to_dict(self):
        values = self.__dict__.get('_config_values', {})
        return {c.param: getattr(self, c.param)
            for c in self.configuration if c.param in values}

    @ensure_configured
    def replace(self, **changes):
        """
        Returns a new, configured instance with the values of this instance
        updated by `changes`.  The changed values are validated again.
        """
        by_param = {c.param: c for c in self.configuration}
        for param in changes:
            if param not in by_param:
                raise ConfigLookupError(param=param)
        values = dict(self.__dict__.get('_config_values', {}))
        values.update(changes)
        raw = {by_param[k].accessor: v for k, v in values.items()}
        instance = self.__class__.__new__(self.__class__)
        instance._was_configured = False
        instance.configure(raw)
        return instance
