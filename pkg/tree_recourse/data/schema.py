import hashlib
import json
import pathlib

import numpy as np
import yaml

from .exceptions import (
    SchemaError, UnknownCategoryError, UnparsableNumberError,
    DimensionMismatchError)


__all__ = ('Numerical', 'CategoricalGroup', 'FeatureSchema')


class Feature:
    kind = None

    def __init__(self, name):
        if not isinstance(name, str) or name.strip() == "":
            raise SchemaError(
                message="Every feature must have a non-empty name.")
        self._name = name
        self._start = None

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.name}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(json.dumps(self.to_dict(), sort_keys=True))

    @property
    def name(self):
        return self._name

    @property
    def indices(self):
        return list(range(self._start, self._start + self.width))


class Numerical(Feature):
    kind = 'numerical'
    width = 1

    @property
    def dimension_names(self):
        return [self.name]

    def encode(self, raw, row=None):
        try:
            value = float(str(raw).strip())
        except ValueError as e:
            raise UnparsableNumberError(
                row=row, column=self.name, value=raw) from e
        if not np.isfinite(value):
            raise UnparsableNumberError(row=row, column=self.name, value=raw)
        return [value]

    def decode(self, values):
        return float(values[0])

    def to_dict(self):
        return {'name': self.name, 'type': self.kind}


class CategoricalGroup(Feature):
    """
    A categorical feature encoded as a contiguous block of one-hot dimensions,
    one per category in declared order.  Dimension names are `name=category`.
    """
    kind = 'categorical'

    def __init__(self, name, categories):
        super().__init__(name)
        categories = [str(c) for c in (categories or [])]
        if len(categories) < 2:
            raise SchemaError(message=(
                f"The categorical feature `{name}` must declare at least two "
                "categories."
            ))
        elif len(set(categories)) != len(categories):
            raise SchemaError(message=(
                f"The categorical feature `{name}` declares duplicate "
                "categories."
            ))
        self._categories = categories

    @property
    def categories(self):
        return list(self._categories)

    @property
    def width(self):
        return len(self._categories)

    @property
    def dimension_names(self):
        return [f"{self.name}={c}" for c in self._categories]

    def encode(self, raw, row=None):
        value = str(raw).strip()
        if value not in self._categories:
            raise UnknownCategoryError(row=row, column=self.name, value=raw)
        return [1.0 if c == value else 0.0 for c in self._categories]

    def decode(self, values):
        return self._categories[int(np.argmax(values))]

    def to_dict(self):
        return {
            'name': self.name,
            'type': self.kind,
            'categories': self.categories
        }


FEATURE_TYPES = {
    Numerical.kind: Numerical,
    CategoricalGroup.kind: CategoricalGroup,
}


class FeatureSchema:
    """
    Declares the input space: an ordered list of numerical features and
    categorical groups.  Encoded dimensions follow declaration order, with
    every categorical group expanded in declared category order.

    >>> schema = FeatureSchema([
    ...     Numerical('x1'),
    ...     CategoricalGroup('color', ['blue', 'red'])
    ... ])
    >>> schema.D
    3
    >>> schema.encode_record({'x1': '2.0', 'color': 'red'})
    array([2., 0., 1.])
    """
    def __init__(self, features):
        features = list(features)
        if len(features) == 0:
            raise SchemaError(message="The schema must declare a feature.")
        names = [f.name for f in features]
        duplicates = sorted(set([n for n in names if names.count(n) > 1]))
        if duplicates:
            raise SchemaError(message=(
                f"The schema declares duplicate features: "
                f"{', '.join(duplicates)}."
            ))
        start = 0
        for f in features:
            f._start = start
            start += f.width
        self._features = features
        self._D = start
        self._dim_to_feature = []
        for i, f in enumerate(features):
            self._dim_to_feature += [i] * f.width

    def __repr__(self):
        return f"<FeatureSchema features={[f.name for f in self._features]}>"

    def __eq__(self, other):
        return isinstance(other, FeatureSchema) \
            and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(self.fingerprint)

    @property
    def features(self):
        return list(self._features)

    @property
    def D(self):
        return self._D

    @property
    def feature_names(self):
        return [f.name for f in self._features]

    @property
    def dimension_names(self):
        names = []
        for f in self._features:
            names += f.dimension_names
        return names

    @property
    def numerical_dims(self):
        return [f.indices[0] for f in self._features
            if isinstance(f, Numerical)]

    @property
    def categorical_groups(self):
        return [f for f in self._features if isinstance(f, CategoricalGroup)]

    @property
    def groups(self):
        """
        Maps every categorical group name to its index set.
        """
        return {f.name: f.indices for f in self.categorical_groups}

    @property
    def is_categorical_dim(self):
        mask = np.zeros(self._D, dtype=bool)
        for f in self.categorical_groups:
            mask[f.indices] = True
        return mask

    def feature(self, name):
        for f in self._features:
            if f.name == name:
                return f
        raise LookupError(f"There is no feature named {name}.")

    def feature_for_dim(self, d):
        return self._features[self._dim_to_feature[d]]

    def check_dimension(self, x):
        x = np.asarray(x, dtype=float)
        if x.ndim != 1 or x.shape[0] != self._D:
            raise DimensionMismatchError(
                expected=self._D, received=x.shape[-1] if x.ndim else 0)
        return x

    def encode_record(self, record, row=None):
        """
        Encodes a record, a mapping of feature name to raw (string) value, as
        an input vector.
        """
        encoded = []
        for f in self._features:
            encoded += f.encode(record[f.name], row=row)
        return np.array(encoded, dtype=float)

    def decode_row(self, x):
        x = self.check_dimension(x)
        return {f.name: f.decode(x[f.indices]) for f in self._features}

    def to_dict(self):
        return {'features': [f.to_dict() for f in self._features]}

    @property
    def fingerprint(self):
        return hashlib.sha256(
            json.dumps(self.to_dict(), sort_keys=True).encode('utf-8')
        ).hexdigest()

    @classmethod
    def from_dict(cls, data, path=None):
        if not isinstance(data, dict) or not isinstance(
                data.get('features', None), list):
            raise SchemaError(
                path=path,
                detail="Expected a mapping with a list of `features`."
            )
        features = []
        for descriptor in data['features']:
            if not isinstance(descriptor, dict) or 'name' not in descriptor:
                raise SchemaError(
                    path=path,
                    detail=f"Invalid feature descriptor {descriptor}."
                )
            kind = descriptor.get('type', Numerical.kind)
            if kind not in FEATURE_TYPES:
                raise SchemaError(
                    path=path,
                    detail=(
                        f"Unknown type `{kind}` for feature "
                        f"`{descriptor['name']}`, expected numerical or "
                        "categorical."
                    )
                )
            if kind == CategoricalGroup.kind:
                features.append(CategoricalGroup(
                    str(descriptor['name']), descriptor.get('categories')))
            else:
                features.append(Numerical(str(descriptor['name'])))
        return cls(features)

    @classmethod
    def load(cls, path):
        path = pathlib.Path(path)
        try:
            with open(path, encoding='utf-8') as stream:
                data = yaml.safe_load(stream)
        except OSError as e:
            raise SchemaError(path=path, detail=str(e)) from e
        except yaml.YAMLError as e:
            raise SchemaError(path=path, detail=str(e)) from e
        return cls.from_dict(data, path=path)

    def dump(self, path):
        with open(path, 'w', encoding='utf-8') as stream:
            yaml.safe_dump(self.to_dict(), stream, sort_keys=False)
