from tree_recourse import exceptions


__all__ = ('SurrogateFormatError', )


class SurrogateFormatError(exceptions.RecourseError):
    attributes = [exceptions.ExceptionAttribute(name='path')]
    content = [
        "The surrogate model document is invalid.",
        "The surrogate model document {path} is invalid."
    ]
