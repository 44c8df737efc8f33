from .black_box import *  # noqa
from .csv_io import *  # noqa
from .dataset import *  # noqa
from .exceptions import *  # noqa
from .percentile import *  # noqa
from .schema import *  # noqa
from .targets import *  # noqa
