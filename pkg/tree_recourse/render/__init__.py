from .clauses import *  # noqa
from .exceptions import *  # noqa
from .explanation import *  # noqa
from .summary import *  # noqa
from .tree import *  # noqa
