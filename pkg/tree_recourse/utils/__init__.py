from .abstract import *  # noqa
from .builtins import *  # noqa
from .concurrency import *  # noqa
from .formatters import *  # noqa
from .fs import *  # noqa
from .stdout import stdout, Spinner, Timer  # noqa
from .strings import *  # noqa
