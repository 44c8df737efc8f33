from tree_recourse import exceptions


__all__ = ('RenderError', 'UnparsableTextError', 'UnplottableRuleError')


class RenderError(exceptions.RecourseError):
    content = "The rule model could not be rendered."


class UnparsableTextError(RenderError):
    attributes = [exceptions.ExceptionAttribute(name='clause')]
    content = [
        "The explanation text could not be parsed.",
        "The clause `{clause}` could not be parsed.",
    ]


class UnplottableRuleError(RenderError):
    attributes = [
        exceptions.ExceptionAttribute(name='rule'),
        exceptions.ExceptionAttribute(name='count'),
    ]
    content = [
        "Only rules bounding one or two numerical features can be plotted.",
        "The rule {rule} bounds {count} numerical features, only one or two "
        "can be plotted.",
    ]
