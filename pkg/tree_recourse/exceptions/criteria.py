from tree_recourse import utils

from .attributes import ExcParams
from .base import AbstractException
from .exceptions import InvalidParamError, RequiredParamError


class Criteria(ExcParams):
    """
    A condition an instance must meet before a decorated method may be called
    or a decorated property accessed.

    Parameters:
    ----------
    func: :obj:`lambda` (optional)
        Takes the instance and returns True, False or a failure message.
        Required if `attr` is not provided.

    attr: :obj:`str` (optional)
        An attribute of the instance whose value is compared to `value`.
        Required if `func` is not provided.

    value (optional)
        Default: True

    default_value (optional)
        Used when the instance lacks `attr`; otherwise a missing attribute
        raises :obj:`InvalidParamError`.
    """
    def __init__(self, **kwargs):
        self._func = kwargs.pop('func', None)
        self._attr = kwargs.pop('attr', None)
        self._value = kwargs.pop('value', True)
        self._default_value = kwargs.pop('default_value', utils.empty)
        if self._func is None and self._attr is None:
            raise RequiredParamError(
                param=['func', 'attr'],
                conjunction='or',
                klass=self.__class__
            )
        super().__init__(**kwargs)

    def __call__(self, instance, strict=True):
        if self._func is not None:
            result = self._func(instance)
            if result is False or isinstance(result, str):
                return self.failed(
                    instance,
                    strict=strict,
                    message=result if isinstance(result, str) else None
                )
            return True
        if self.get_instance_value(instance) != self._value:
            return self.failed(
                instance,
                strict=strict,
                default_message=(
                    f"The value of attribute {self._attr} on the "
                    f"{utils.obj_name(instance)} instance does not equal "
                    f"{self._value}."
                )
            )
        return True

    def get_instance_value(self, instance):
        if self._default_value is not utils.empty:
            return getattr(instance, self._attr, self._default_value)
        try:
            return getattr(instance, self._attr)
        except AttributeError as e:
            raise InvalidParamError(
                param='attr',
                message=(
                    f"The {utils.obj_name(instance)} does not have an "
                    f"attribute {self._attr}."
                )
            ) from e

    def failed(self, instance, strict=True, **kwargs):
        if strict:
            self.raise_exception(instance, **kwargs)
        return False

    def raise_exception(self, instance, **kwargs):
        exc_cls = self.exc_cls or TypeError
        if issubclass(exc_cls, AbstractException):
            # The exception's own content is used unless a message is given.
            exc_kwargs = dict(self.exc_kwargs(instance) or {})
            if kwargs.get('message') is not None \
                    or self._exc_message is not None:
                exc_kwargs.update(
                    message=self.exc_message(instance, **kwargs))
            raise exc_cls(**exc_kwargs)
        raise exc_cls(self.exc_message(instance, **kwargs))

    def provide_missing_values(self, decorator_factory):
        """
        Fills in `exc_cls`, `exc_kwargs` and `exc_message` from the owning
        :obj:`check_instance` when this criteria does not define them.
        """
        for k in self.attrs:
            v = getattr(decorator_factory, f"_{k}")
            if v is not None and getattr(self, f"_{k}") is None:
                setattr(self, f"_{k}", v)
