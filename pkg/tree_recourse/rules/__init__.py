from .algebra import *  # noqa
from .categorical import *  # noqa
from .exceptions import *  # noqa
from .rule import *  # noqa
from .stats import *  # noqa
