from tree_recourse import exceptions


__all__ = (
    'EngineError', 'NoValidRulesError', 'CellLimitExceededError',
    'ImpossibleCellError', 'NotFittedError', 'ModelFormatError'
)


class EngineError(exceptions.RecourseError):
    content = "The rule model could not be fit."


class NoValidRulesError(EngineError):
    """
    Raised when no candidate rule reaches both the feasibility and accuracy
    thresholds.  The fit should be retried with other hyperparameters.
    """
    exit_code = 2
    attributes = [
        exceptions.ExceptionAttribute(name='tau'),
        exceptions.ExceptionAttribute(name='rho'),
    ]
    content = [
        "No valid counterfactual rule was found.",
        "No valid counterfactual rule was found with tau={tau} and "
        "rho={rho}.  Try other hyperparameters.",
    ]


class CellLimitExceededError(EngineError):
    exit_code = 3
    attributes = [
        exceptions.ExceptionAttribute(name='count'),
        exceptions.ExceptionAttribute(name='limit'),
    ]
    required_on_init = ['count', 'limit']
    content = (
        "The bounds of the rules induce {count} grid cells, exceeding the "
        "limit of {limit}."
    )


class ImpossibleCellError(EngineError):
    attributes = [exceptions.ExceptionAttribute(name='cell')]
    content = [
        "A prototype could not be placed inside its grid cell.",
        "A prototype could not be placed inside the grid cell {cell}.",
    ]


class NotFittedError(EngineError):
    content = [
        "The rule model has not been fit.",
        "The {klass} has not been fit.",
    ]


class ModelFormatError(EngineError):
    attributes = [exceptions.ExceptionAttribute(name='path')]
    content = [
        "The rule model document is invalid.",
        "The rule model document {path} is invalid.",
    ]
