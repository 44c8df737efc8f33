from tree_recourse import exceptions


__all__ = (
    'DataError', 'SchemaError', 'MissingColumnError', 'MissingDataError',
    'EmptyDataError', 'UnknownCategoryError', 'UnparsableNumberError',
    'OneHotViolationError', 'DimensionMismatchError', 'PredictionFailureError',
    'TypeMismatchError', 'LabelMismatchError', 'DataFileError'
)


class DataError(exceptions.RecourseError):
    content = "There was an error with the provided data."


class SchemaError(DataError):
    content = [
        "The feature schema is invalid.",
        "The feature schema {path} is invalid."
    ]
    attributes = [exceptions.ExceptionAttribute(name='path')]


class MissingColumnError(DataError):
    attributes = [
        exceptions.ExceptionAttribute(name='column'),
        exceptions.ExceptionAttribute(name='path'),
    ]
    content = [
        "A column declared by the schema is missing.",
        "The column `{column}` declared by the schema is missing.",
        "The column `{column}` declared by the schema is missing from "
        "{path}."
    ]


class EmptyDataError(DataError):
    content = "The dataset does not contain any rows."


class MissingDataError(EmptyDataError):
    attributes = [exceptions.ExceptionAttribute(name='path')]
    content = [
        "The data does not contain any rows.",
        "The file {path} only contains a header.",
    ]


class CellError(DataError):
    """
    Base class for errors located at a specific data row and column.  Rows are
    numbered from 0, the header excluded.
    """
    attributes = [
        exceptions.ExceptionAttribute(name='row'),
        exceptions.ExceptionAttribute(name='column'),
        exceptions.ExceptionAttribute(name='value'),
    ]


class UnknownCategoryError(CellError):
    content = [
        "Encountered an undeclared category.",
        "Encountered undeclared category '{value}' in column `{column}`.",
        "Encountered undeclared category '{value}' in column `{column}` "
        "at row {row}."
    ]


class UnparsableNumberError(CellError):
    content = [
        "Encountered a value that is not a finite number.",
        "The value {value} in column `{column}` is not a finite number.",
        "The value {value} in column `{column}` at row {row} is not a finite "
        "number."
    ]


class OneHotViolationError(DataError):
    attributes = [
        exceptions.ExceptionAttribute(name='row'),
        exceptions.ExceptionAttribute(name='feature'),
    ]
    content = [
        "A categorical group is not one-hot encoded.",
        "The categorical feature `{feature}` is not one-hot encoded at row "
        "{row}.",
    ]


class DimensionMismatchError(DataError):
    attributes = [
        exceptions.ExceptionAttribute(name='expected'),
        exceptions.ExceptionAttribute(name='received'),
    ]
    content = [
        "The input has the wrong dimensionality.",
        "Expected an input of dimension {expected}, but received one of "
        "dimension {received}."
    ]


class PredictionFailureError(DataError):
    attributes = [exceptions.ExceptionAttribute(name='row')]
    content = [
        "The black-box model failed to produce an output.",
        "The black-box model failed to produce an output for row {row}.",
    ]


class TypeMismatchError(DataError):
    attributes = [
        exceptions.ExceptionAttribute(name='value'),
        exceptions.ExceptionAttribute(name='target'),
    ]
    content = [
        "The model output is inconsistent with the target.",
        "The model output {value} is inconsistent with the target {target}.",
    ]


class LabelMismatchError(DataError):
    """
    Raised when a target or an output refers to a class label the model does
    not produce, or when a target variant does not match the model kind.
    """
    content = "The target does not match the model outputs."


class DataFileError(DataError):
    attributes = [exceptions.ExceptionAttribute(name='path')]
    content = [
        "A data file could not be read.",
        "The file {path} could not be read.",
    ]
