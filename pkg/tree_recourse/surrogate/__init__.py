from .black_box import *  # noqa
from .exceptions import *  # noqa
from .extraction import *  # noqa
from .forest import *  # noqa
from .growth import *  # noqa
from .tree import *  # noqa
