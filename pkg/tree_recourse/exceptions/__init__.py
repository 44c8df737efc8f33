from .attributes import *  # noqa
from .base import AbstractException  # noqa
from .criteria import Criteria  # noqa
from .decorators import *  # noqa
from .exceptions import *  # noqa
