import csv
import pathlib

from .dataset import Dataset, LabeledDataset
from .exceptions import (
    MissingColumnError, MissingDataError, DataFileError, UnparsableNumberError)


__all__ = ('read_csv_records', 'load_csv', 'load_labeled_csv', 'write_csv')


def read_csv_records(path):
    """
    Reads a comma separated UTF-8 file with a header row and returns the
    header along with every data row as a :obj:`dict`.
    """
    path = pathlib.Path(path)
    try:
        with open(path, newline='', encoding='utf-8') as csvfile:
            reader = csv.DictReader(csvfile, delimiter=',')
            records = list(reader)
            header = list(reader.fieldnames or [])
    except OSError as e:
        raise DataFileError(path=path, detail=str(e)) from e
    return header, records


def _check_columns(header, columns, path):
    for column in columns:
        if column not in header:
            raise MissingColumnError(column=column, path=path)


def load_csv(path, schema):
    """
    Loads the rows of a CSV file as a :obj:`Dataset`, one-hot encoding the
    categorical columns in schema order.  Row order is preserved and columns
    not declared by the schema are ignored.
    """
    header, records = read_csv_records(path)
    _check_columns(header, schema.feature_names, path)
    if len(records) == 0:
        raise MissingDataError(path=path)
    return Dataset(schema, [
        schema.encode_record(record, row=i)
        for i, record in enumerate(records)
    ])


def load_labeled_csv(path, schema, output_column, kind):
    """
    Loads a CSV file whose `output_column` holds precomputed model outputs.
    """
    header, records = read_csv_records(path)
    _check_columns(header, schema.feature_names + [output_column], path)
    if len(records) == 0:
        raise MissingDataError(path=path)
    rows, outputs = [], []
    for i, record in enumerate(records):
        rows.append(schema.encode_record(record, row=i))
        value = (record[output_column] or "").strip()
        if kind.is_classifier:
            outputs.append(value)
        else:
            try:
                outputs.append(float(value))
            except ValueError as e:
                raise UnparsableNumberError(
                    row=i, column=output_column, value=value) from e
    return LabeledDataset(Dataset(schema, rows), outputs, kind)


def write_csv(path, header, rows):
    with open(str(path), 'w', newline='', encoding='utf-8') as csvfile:
        writer = csv.writer(csvfile, delimiter=',')
        writer.writerow(header)
        writer.writerows(rows)
