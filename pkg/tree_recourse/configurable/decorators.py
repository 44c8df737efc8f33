from tree_recourse import exceptions

from .exceptions import NotConfiguredError


ensure_configured = exceptions.check_instance(
    exc_cls=NotConfiguredError,
    exc_kwargs=lambda instance: {'klass': instance},
    criteria=[
        exceptions.Criteria(attr='was_configured')
    ]
)
