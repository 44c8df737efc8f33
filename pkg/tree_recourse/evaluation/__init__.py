from .distance import *  # noqa
from .evaluate import *  # noqa
from .exceptions import *  # noqa
from .report import *  # noqa
from .sweep import *  # noqa
