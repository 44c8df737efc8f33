import json
import pathlib

from tree_recourse.data import BlackBoxModel, FeatureSchema

from .exceptions import SurrogateFormatError
from .forest import Surrogate


__all__ = ('SurrogateModel', )


class SurrogateModel(BlackBoxModel):
    """
    Serves a tree or forest grown in this package as a black-box model, e.g.
    the `black_box.json` written alongside synthetic datasets.  The document
    is `{"format_version": 1, "schema": ..., "surrogate": ...}`, where the
    schema is optional.
    """
    format_version = 1

    def __init__(self, surrogate, schema=None):
        super().__init__(surrogate.kind)
        self._surrogate = surrogate
        self._schema = schema

    def __repr__(self):
        return f"<SurrogateModel {self._surrogate!r}>"

    @property
    def surrogate(self):
        return self._surrogate

    @property
    def schema(self):
        return self._schema

    def predict(self, x):
        return self._surrogate.predict(x)

    def to_dict(self):
        data = {
            'format_version': self.format_version,
            'surrogate': self._surrogate.to_dict(),
        }
        if self._schema is not None:
            data['schema'] = self._schema.to_dict()
        return data

    def dump(self, path):
        with open(path, 'w', encoding='utf-8') as stream:
            json.dump(self.to_dict(), stream, sort_keys=True, indent=2)

    @classmethod
    def load(cls, path):
        path = pathlib.Path(path)
        try:
            with open(path, encoding='utf-8') as stream:
                data = json.load(stream)
        except (OSError, ValueError) as e:
            raise SurrogateFormatError(path=path, detail=str(e)) from e
        if not isinstance(data, dict) or 'surrogate' not in data:
            raise SurrogateFormatError(
                path=path, detail="Expected a `surrogate` document.")
        schema = None
        if data.get('schema') is not None:
            schema = FeatureSchema.from_dict(data['schema'], path=path)
        return cls(Surrogate.from_dict(data['surrogate']), schema=schema)
