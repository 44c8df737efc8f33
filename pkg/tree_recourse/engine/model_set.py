import json

import numpy as np

from tree_recourse import exceptions, utils
from tree_recourse.data import (
    ClassSet, Interval, LabelMismatchError, canonical_label)

from .builder import RuleModelBuilder
from .exceptions import ModelFormatError
from .model import FORMAT_VERSION, RuleModel, read_document


__all__ = (
    'UNTARGETED', 'REGRESSION_SPLIT', 'RuleModelSet', 'fit_untargeted',
    'fit_regression_split', 'load_model'
)


UNTARGETED = 'untargeted'
REGRESSION_SPLIT = 'regression_split'


class RuleModelSet:
    """
    Several rule models fit over the same data, one of which answers each
    input depending on the model output for it.

    With the `untargeted` policy there is one member per label y, fit for the
    target of every other label, and an input is answered by the member of
    its own label.  With the `regression_split` policy there are two members
    fit for (mu, inf) and (-inf, mu], and an input whose output is at most mu
    is answered by the (mu, inf) member.
    """
    policies = (UNTARGETED, REGRESSION_SPLIT)

    def __init__(self, policy, members, threshold=None):
        if policy not in self.policies:
            raise exceptions.InvalidParamError(
                param='policy',
                value=policy,
                message=f"Unknown model set policy {policy}."
            )
        if policy == REGRESSION_SPLIT and threshold is None:
            raise exceptions.RequiredParamError(
                param='threshold', klass=self.__class__)
        self._policy = policy
        self._members = dict(members)
        self._threshold = None if threshold is None else float(threshold)

    def __repr__(self):
        return (
            f"<RuleModelSet policy={self._policy} "
            f"members={list(self._members)}>"
        )

    @property
    def policy(self):
        return self._policy

    @property
    def threshold(self):
        return self._threshold

    @property
    def members(self):
        return dict(self._members)

    @property
    def schema(self):
        return list(self._members.values())[0].schema

    @property
    def kind(self):
        return list(self._members.values())[0].kind

    @property
    def fit_time(self):
        times = [m.fit_time for m in self._members.values()
            if m.fit_time is not None]
        return sum(times) if times else None

    def member_key(self, output, threshold=None):
        """
        The key of the member answering an input with the given output.  A
        `regression_split` set splits at `threshold` when provided, at the
        threshold it was fit for otherwise.
        """
        threshold = self._threshold if threshold is None else threshold
        if self._policy == UNTARGETED:
            key = canonical_label(output)
        elif float(output) <= threshold:
            key = 'above'
        else:
            key = 'below'
        if key not in self._members:
            raise LabelMismatchError(message=(
                f"The model set has no member for the output {output}."
            ))
        return key

    def member_for(self, output, threshold=None):
        return self._members[self.member_key(output, threshold=threshold)]

    def explain(self, x, output=None, threshold=None):
        if output is None:
            raise exceptions.RequiredParamError(
                param='output',
                message=(
                    "A model set requires the model output of the input to "
                    "choose the member that answers it."
                )
            )
        key = self.member_key(output, threshold=threshold)
        return self._members[key].explain(x, output=output, member=key)

    def explain_many(self, rows, outputs=None, workers=None):
        rows = np.atleast_2d(np.asarray(rows, dtype=float))
        outputs = [None] * rows.shape[0] if outputs is None else list(outputs)
        return utils.parallel_map(
            lambda i: self.explain(rows[i], output=outputs[i]),
            range(rows.shape[0]),
            workers=workers
        )

    def to_dict(self):
        return {
            'format_version': FORMAT_VERSION,
            'policy': self._policy,
            'threshold': self._threshold,
            'members': {k: m.to_dict() for k, m in self._members.items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def dump(self, path):
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write(self.to_json())
            stream.write("\n")

    @classmethod
    def from_dict(cls, data, path=None):
        try:
            return cls(
                policy=data['policy'],
                members={
                    k: RuleModel.from_dict(m, path=path)
                    for k, m in sorted(data['members'].items())
                },
                threshold=data.get('threshold')
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise ModelFormatError(path=path, detail=str(e)) from e


def fit_untargeted(labeled, config, schema, workers=None):
    """
    Fits one member per label y of the classifier for the target of every
    other label.  The surrogate is grown once.  The target of `config` is
    replaced for every member.
    """
    labels = labeled.labels
    if len(labels) < 2:
        raise LabelMismatchError(message=(
            "An untargeted model requires at least two distinct labels."
        ))
    builder = RuleModelBuilder(schema, workers=workers)
    members = {}
    for y in labels:
        member_config = config.replace(
            target=ClassSet([label for label in labels if label != y]))
        if not builder.is_fitted:
            members[y] = builder.fit(labeled, member_config)
        else:
            members[y] = builder.refit_target(member_config)
    return RuleModelSet(UNTARGETED, members)


def fit_regression_split(labeled, config, schema, threshold=None,
        workers=None):
    """
    Fits both halves of the output space split at `threshold`, the mean
    training output when not provided.
    """
    if threshold is None:
        threshold = float(np.mean(labeled.outputs))
    builder = RuleModelBuilder(schema, workers=workers)
    members = {
        'above': builder.fit(
            labeled, config.replace(target=Interval.above(threshold))),
    }
    members['below'] = builder.refit_target(
        config.replace(target=Interval.below(threshold)))
    return RuleModelSet(REGRESSION_SPLIT, members, threshold=threshold)


def load_model(path):
    """
    Loads either a :obj:`RuleModel` or a :obj:`RuleModelSet` document.
    """
    data = read_document(path)
    if 'policy' in data:
        return RuleModelSet.from_dict(data, path=path)
    return RuleModel.from_dict(data, path=path)
