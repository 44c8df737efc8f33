import shlex
import subprocess

import numpy as np

from tree_recourse import utils
from tree_recourse.models import ModelKind

from .dataset import LabeledDataset
from .exceptions import PredictionFailureError


__all__ = (
    'BlackBoxModel', 'CallableModel', 'ExternalProcessModel',
    'PrecomputedModel', 'label_with_model'
)


class BlackBoxModel:
    """
    Abstract base for a model that is only accessed through its predictions.

    Parameters:
    ----------
    kind: :obj:`ModelKind` or :obj:`str`
        Either a classifier or a regressor.

    serial: :obj:`bool` (class attribute)
        Whether or not :obj:`predict` must not be called concurrently.  Serial
        models are labelled one row at a time.

        Default: False
    """
    serial = False

    def __init__(self, kind):
        self._kind = ModelKind.for_slug(kind)

    def __repr__(self):
        return f"<{self.__class__.__name__} kind={self.kind.slug}>"

    @property
    def kind(self):
        return self._kind

    def predict(self, x):
        raise NotImplementedError()

    def predict_batch(self, rows, workers=None):
        """
        Predicts every row, in order.  A failure on any row surfaces as a
        :obj:`PredictionFailureError` naming the first failing row.
        """
        rows = np.asarray(rows, dtype=float)

        def predict_row(i):
            try:
                return self.predict(rows[i])
            except Exception as e:
                raise PredictionFailureError(row=i, detail=str(e)) from e

        return utils.parallel_map(
            predict_row,
            range(rows.shape[0]),
            workers=workers,
            serial=self.serial
        )


class CallableModel(BlackBoxModel):
    """
    Wraps any Python callable that maps an encoded input vector to an output.

    >>> model = CallableModel(lambda x: int(x[0] > 0), kind='classifier')
    """
    def __init__(self, func, kind, serial=False):
        super().__init__(kind)
        self._func = func
        self.serial = serial

    def predict(self, x):
        return self._func(np.asarray(x, dtype=float))


class ExternalProcessModel(BlackBoxModel):
    """
    Runs an external command that reads newline delimited input vectors of D
    comma separated numbers on its standard input and writes one output token
    per line on its standard output.  A batch is answered by a single
    invocation of the command.
    """
    serial = True

    def __init__(self, command, kind, timeout=None):
        super().__init__(kind)
        self._command = command
        self._timeout = timeout

    def __repr__(self):
        return f"<ExternalProcessModel command={self._command!r}>"

    @property
    def command(self):
        return shlex.split(self._command) \
            if isinstance(self._command, str) else list(self._command)

    def _parse(self, token, row):
        token = token.strip()
        if self.kind.is_classifier:
            return token
        try:
            return float(token)
        except ValueError as e:
            raise PredictionFailureError(
                row=row,
                detail=f"The output {token} is not a real number."
            ) from e

    def predict(self, x):
        return self.predict_batch(np.asarray([x], dtype=float))[0]

    def predict_batch(self, rows, workers=None):
        rows = np.asarray(rows, dtype=float)
        payload = "".join([
            ",".join([repr(float(v)) for v in row]) + "\n" for row in rows])
        try:
            result = subprocess.run(
                self.command,
                input=payload,
                capture_output=True,
                text=True,
                timeout=self._timeout,
                check=False
            )
        except (OSError, subprocess.SubprocessError) as e:
            raise PredictionFailureError(row=0, detail=str(e)) from e
        lines = [line for line in result.stdout.splitlines()
            if line.strip() != ""]
        if result.returncode != 0:
            raise PredictionFailureError(
                row=len(lines),
                detail=(result.stderr.strip()
                    or f"The command exited with status {result.returncode}.")
            )
        if len(lines) < rows.shape[0]:
            raise PredictionFailureError(
                row=len(lines),
                detail="The command produced fewer outputs than inputs."
            )
        return [self._parse(token, i)
            for i, token in enumerate(lines[:rows.shape[0]])]


class PrecomputedModel(BlackBoxModel):
    """
    Answers predictions from outputs that were computed ahead of time, e.g.
    read from an output column of the data file.  Only the exact inputs of
    the provided :obj:`LabeledDataset` can be predicted.
    """
    def __init__(self, labeled):
        super().__init__(labeled.kind)
        self._lookup = {}
        for x, y in zip(labeled.rows, labeled.outputs):
            self._lookup.setdefault(x.tobytes(), y)

    def __len__(self):
        return len(self._lookup)

    def predict(self, x):
        key = np.asarray(x, dtype=float).tobytes()
        if key not in self._lookup:
            raise LookupError(
                "No precomputed output is available for the input.")
        return self._lookup[key]


def label_with_model(data, model, workers=None):
    """
    Labels every row of `data` with the output of the black-box `model`.
    """
    utils.stdout.log(f"Labelling {data.N} rows with {model!r}.")
    outputs = model.predict_batch(data.rows, workers=workers)
    return LabeledDataset(data, outputs, model.kind)
