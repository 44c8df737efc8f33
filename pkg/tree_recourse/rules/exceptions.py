from tree_recourse import exceptions


__all__ = ('RuleError', 'MalformedRuleError', 'IrreparableRuleError')


class RuleError(exceptions.RecourseError):
    content = "The rule is invalid."


class MalformedRuleError(RuleError):
    """
    Raised when the bounds of a rule over a categorical group are neither a
    single hot category nor a set of cold categories.
    """
    attributes = [exceptions.ExceptionAttribute(name='group')]
    content = [
        "The rule is not well-formed over a categorical feature.",
        "The rule is not well-formed over the categorical feature `{group}`."
    ]


class IrreparableRuleError(RuleError):
    attributes = [exceptions.ExceptionAttribute(name='group')]
    content = [
        "The rule cannot be simplified.",
        "The rule cannot be simplified, it constrains the categorical "
        "feature `{group}` in a way no input satisfies."
    ]
