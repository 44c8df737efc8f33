import json
import pathlib

import numpy as np

from tree_recourse import rules, utils
from tree_recourse.data import FeatureSchema, SchemaError
from tree_recourse.models import ModelKind

from .config import RecourseConfig
from .exceptions import ModelFormatError
from .explanation import Explanation
from .metarules import MetaruleTree


__all__ = ('FORMAT_VERSION', 'RuleModel', 'explain', 'read_document')


FORMAT_VERSION = 1


def read_document(path):
    path = pathlib.Path(path)
    try:
        with open(path, encoding='utf-8') as stream:
            data = json.load(stream)
    except (OSError, ValueError) as e:
        raise ModelFormatError(path=path, detail=str(e)) from e
    if not isinstance(data, dict):
        raise ModelFormatError(path=path, detail="Expected a JSON object.")
    if data.get('format_version') != FORMAT_VERSION:
        raise ModelFormatError(
            path=path,
            detail=(
                f"Unsupported format version {data.get('format_version')}, "
                f"expected {FORMAT_VERSION}."
            )
        )
    return data


class RuleModel:
    """
    A fitted rule model: the maximal-valid rules with their statistics on
    the training data, the metarule tree used to look up the optimal rule of
    an input, and the configuration and schema they were fit with.

    Rules are identified as `R0, R1, ...` in canonical order and metarules
    as `M0, M1, ...` in preorder of the metarule tree.
    """
    def __init__(self, schema, config, kind, rules, stats, metarule_tree,
            provenance=None):
        self._schema = schema
        self._config = config
        self._kind = ModelKind.for_slug(kind)
        self._rules = list(rules)
        self._stats = list(stats)
        self._metarule_tree = metarule_tree
        self._provenance = dict(provenance or {})
        self.fit_time = None

    def __repr__(self):
        return (
            f"<RuleModel rules={len(self._rules)} "
            f"metarules={self.metarule_count}>"
        )

    @property
    def schema(self):
        return self._schema

    @property
    def config(self):
        return self._config

    @property
    def target(self):
        return self._config.target

    @property
    def kind(self):
        return self._kind

    @property
    def rules(self):
        return list(self._rules)

    @property
    def stats(self):
        return list(self._stats)

    @property
    def rule_ids(self):
        return [f"R{i}" for i in range(len(self._rules))]

    @property
    def metarule_tree(self):
        return self._metarule_tree

    @property
    def metarule_count(self):
        return self._metarule_tree.leaf_count

    @property
    def provenance(self):
        return dict(self._provenance)

    @property
    def cell_count(self):
        return self._provenance.get('cell_count')

    def explain(self, x, output=None, member=None):
        """
        Looks up the metarule containing the input and returns its rule as an
        :obj:`Explanation`.  When the model output for the input is provided,
        the explanation records whether it already belongs to the target.
        """
        x = self._schema.check_dimension(x)
        j = self._metarule_tree.lookup(x)
        i = self._metarule_tree.leaf_rule_index(j)
        rule = self._rules[i]
        change_dims = rules.violated_dims(x, rule)
        keep_dims = [d for d in rule.finite_dims if d not in change_dims]
        return Explanation(
            instance=x,
            rule=rule,
            rule_index=i,
            metarule=self._metarule_tree.metarules[j],
            metarule_index=j,
            change_dims=change_dims,
            keep_dims=keep_dims,
            target=self.target,
            output=output,
            already_satisfied=output is not None
            and self.target.matches(output),
            member=member
        )

    def explain_many(self, rows, outputs=None, workers=None):
        """
        Explains every row, returning the explanations in row order.
        """
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
            'kind': self._kind.slug,
            'schema': self._schema.to_dict(),
            'config': self._config.to_json(),
            'rules': [
                {
                    'id': rule_id,
                    'bounds': rule.to_dict(),
                    'stats': stats.to_dict()
                }
                for rule_id, rule, stats
                in zip(self.rule_ids, self._rules, self._stats)
            ],
            'metarule_tree': self._metarule_tree.to_dict(),
            'provenance': self._provenance,
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
            schema = FeatureSchema.from_dict(data['schema'], path=path)
            return cls(
                schema=schema,
                config=RecourseConfig.from_json(data['config']),
                kind=data['kind'],
                rules=[rules.Rule.from_dict(r['bounds'])
                    for r in data['rules']],
                stats=[rules.RuleStats.from_dict(r['stats'])
                    for r in data['rules']],
                metarule_tree=MetaruleTree.from_dict(
                    data['metarule_tree'], schema.D),
                provenance=data.get('provenance')
            )
        except SchemaError:
            raise
        except (KeyError, TypeError, ValueError, LookupError) as e:
            raise ModelFormatError(path=path, detail=str(e)) from e

    @classmethod
    def load(cls, path):
        return cls.from_dict(read_document(path), path=path)


def explain(model, x, output=None):
    return model.explain(x, output=output)
