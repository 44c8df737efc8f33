from .config import Config  # noqa
from .configurable import *  # noqa
from .decorators import ensure_configured  # noqa
from .exceptions import *  # noqa
from .meta import ConfigurableMetaClass, NotConfigurable  # noqa
