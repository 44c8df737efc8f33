import numpy as np

from tree_recourse.models import ModelKind

from .exceptions import (
    EmptyDataError, DimensionMismatchError, OneHotViolationError,
    UnparsableNumberError, LabelMismatchError)


__all__ = ('Dataset', 'LabeledDataset', 'canonical_label')


def canonical_label(value):
    """
    Returns the canonical string form of a classifier output, so that a label
    read from a CSV file ("1") and a label produced by a predictor (1 or 1.0)
    compare equal.
    """
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if np.isfinite(value) and float(value).is_integer():
            return str(int(value))
        return repr(float(value))
    return str(value).strip()


class Dataset:
    """
    An immutable set of N encoded input vectors over a :obj:`FeatureSchema`.
    Every row is checked on construction: values must be finite and every
    categorical group must be one-hot.

    Parameters:
    ----------
    schema: :obj:`FeatureSchema`
    rows: :obj:`numpy.ndarray` or :obj:`list`
        An (N, D) array of encoded input vectors.
    """
    def __init__(self, schema, rows):
        rows = np.array(rows, dtype=float)
        if rows.ndim == 1 and rows.size == 0:
            raise EmptyDataError()
        if rows.ndim != 2:
            raise DimensionMismatchError(
                expected=schema.D, received=rows.shape[-1])
        if rows.shape[0] == 0:
            raise EmptyDataError()
        if rows.shape[1] != schema.D:
            raise DimensionMismatchError(
                expected=schema.D, received=rows.shape[1])

        not_finite = np.argwhere(~np.isfinite(rows))
        if len(not_finite):
            row, dim = not_finite[0]
            raise UnparsableNumberError(
                row=int(row),
                column=schema.dimension_names[dim],
                value=rows[row, dim]
            )
        for feature in schema.categorical_groups:
            block = rows[:, feature.indices]
            valid = np.all((block == 0.0) | (block == 1.0), axis=1) \
                & (block.sum(axis=1) == 1.0)
            if not np.all(valid):
                raise OneHotViolationError(
                    row=int(np.argmin(valid)), feature=feature.name)

        rows.setflags(write=False)
        self._schema = schema
        self._rows = rows

    def __repr__(self):
        return f"<Dataset N={self.N} D={self.D}>"

    def __len__(self):
        return self.N

    def __iter__(self):
        for row in self._rows:
            yield row

    def __getitem__(self, i):
        return self._rows[i]

    @property
    def schema(self):
        return self._schema

    @property
    def rows(self):
        return self._rows

    @property
    def N(self):
        return self._rows.shape[0]

    @property
    def D(self):
        return self._rows.shape[1]

    @property
    def column_min(self):
        return self._rows.min(axis=0)

    @property
    def column_max(self):
        return self._rows.max(axis=0)

    def subset(self, indices):
        return Dataset(self._schema, self._rows[np.asarray(indices, dtype=int)])

    def records(self):
        return [self._schema.decode_row(x) for x in self._rows]


class LabeledDataset:
    """
    A :obj:`Dataset` paired with one model output per row: canonical string
    labels for classifiers, real values for regressors.
    """
    def __init__(self, data, outputs, kind):
        kind = ModelKind.for_slug(kind)
        if len(outputs) != data.N:
            raise DimensionMismatchError(
                message=(
                    f"Expected {data.N} model outputs, one per row, but "
                    f"received {len(outputs)}."
                )
            )
        if kind.is_classifier:
            outputs = np.array(
                [canonical_label(y) for y in outputs], dtype=object)
        else:
            try:
                outputs = np.array(outputs, dtype=float)
            except (TypeError, ValueError) as e:
                raise LabelMismatchError(
                    detail="Regressor outputs must be real numbers.") from e
            if not np.all(np.isfinite(outputs)):
                raise LabelMismatchError(
                    detail="Regressor outputs must be finite.")
        outputs.setflags(write=False)
        self._data = data
        self._outputs = outputs
        self._kind = kind

    def __repr__(self):
        return f"<LabeledDataset N={self.N} kind={self.kind.slug}>"

    def __len__(self):
        return self.N

    @property
    def data(self):
        return self._data

    @property
    def schema(self):
        return self._data.schema

    @property
    def rows(self):
        return self._data.rows

    @property
    def N(self):
        return self._data.N

    @property
    def outputs(self):
        return self._outputs

    @property
    def kind(self):
        return self._kind

    @property
    def labels(self):
        """
        The sorted set of distinct labels for classifiers.
        """
        if not self._kind.is_classifier:
            raise LabelMismatchError(
                detail="Only classifier outputs have labels.")
        return sorted(set(self._outputs.tolist()))

    @property
    def label_codes(self):
        """
        Integer codes of the outputs into :obj:`labels`.
        """
        labels = self.labels
        lookup = {label: i for i, label in enumerate(labels)}
        return np.array([lookup[y] for y in self._outputs], dtype=int)

    def subset(self, indices):
        indices = np.asarray(indices, dtype=int)
        return LabeledDataset(
            self._data.subset(indices), self._outputs[indices], self._kind)
