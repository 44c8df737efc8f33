import numpy as np


__all__ = ('PercentileTable', 'percentile_transform')


class PercentileTable:
    """
    Per-dimension empirical CDFs of a training dataset.  The percentile of a
    value is the fraction of training values less than or equal to it, so
    a constant dimension maps its single value to 1 and anything below it
    to 0.  Categorical dimensions are the identity on {0, 1}.
    """
    def __init__(self, sorted_columns, categorical):
        self._sorted_columns = sorted_columns
        self._categorical = np.asarray(categorical, dtype=bool)

    def __repr__(self):
        return f"<PercentileTable D={self.D}>"

    @classmethod
    def from_dataset(cls, data):
        categorical = data.schema.is_categorical_dim
        columns = [
            None if categorical[d] else np.sort(data.rows[:, d])
            for d in range(data.D)
        ]
        return cls(columns, categorical)

    @property
    def D(self):
        return len(self._sorted_columns)

    def percentile(self, d, value):
        if self._categorical[d]:
            return np.asarray(value, dtype=float)
        column = self._sorted_columns[d]
        counts = np.searchsorted(column, value, side='right')
        return counts / float(column.shape[0])

    def transform(self, x):
        x = np.asarray(x, dtype=float)
        return np.array([float(self.percentile(d, x[d]))
            for d in range(self.D)])


def percentile_transform(data):
    return PercentileTable.from_dataset(data)
