from .sources import *  # noqa
from .workflow import *  # noqa
