from .kinds import ModelKind, ModelKinds  # noqa
from .output_type import OutputType, OutputTypes  # noqa
from .slug import Slug  # noqa
