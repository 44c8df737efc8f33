from .assignment import *  # noqa
from .builder import *  # noqa
from .config import *  # noqa
from .exceptions import *  # noqa
from .explanation import *  # noqa
from .grid import *  # noqa
from .metarules import *  # noqa
from .model import *  # noqa
from .model_set import *  # noqa
from .selection import *  # noqa
