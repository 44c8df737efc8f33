from tree_recourse import exceptions


__all__ = ('EvaluationError', 'EmptyTestSetError', 'TooFewRowsError')


class EvaluationError(exceptions.RecourseError):
    content = "The rule model could not be evaluated."


class EmptyTestSetError(EvaluationError):
    content = (
        "The test set does not contain any instance whose output lies "
        "outside of the target."
    )


class TooFewRowsError(EvaluationError):
    attributes = [
        exceptions.ExceptionAttribute(name='rows'),
        exceptions.ExceptionAttribute(name='folds'),
    ]
    content = [
        "There are too few rows for cross-validation.",
        "Cross-validation over {folds} folds requires at least {folds} rows, "
        "but only {rows} were provided.",
    ]
