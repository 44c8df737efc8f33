import numpy as np

from tree_recourse import configurable, exceptions, surrogate, utils

from .assignment import assign_optimal_rules, rule_feasibilities
from .exceptions import NotFittedError
from .grid import GridAxes, build_grid, make_prototypes
from .metarules import grow_metarule_tree
from .model import RuleModel
from .selection import maximal_valid_rules, candidate_stats


__all__ = ('RuleModelBuilder', 'fit')


ensure_fitted = exceptions.check_instance(
    exc_cls=NotFittedError,
    exc_kwargs=lambda instance: {'klass': instance},
    criteria=[exceptions.Criteria(attr='is_fitted')]
)


class RuleModelBuilder:
    """
    Fits rule models over a labeled dataset.  The surrogate and its candidate
    rules are computed once by :obj:`fit`, after which :obj:`refit_target`
    fits models for other targets and thresholds from the same candidates.

    A builder is not safe to use from several threads at once.

    Parameters:
    ----------
    schema: :obj:`FeatureSchema`

    workers: :obj:`int` (optional)
        The number of worker threads, read from the environment when not
        provided.
    """
    def __init__(self, schema, workers=None):
        self._schema = schema
        self._workers = workers
        self._labeled = None
        self._config = None
        self._surrogate = None
        self._candidates = None

    def __repr__(self):
        return f"<RuleModelBuilder fitted={self.is_fitted}>"

    @property
    def is_fitted(self):
        return self._candidates is not None

    @property
    def schema(self):
        return self._schema

    @ensure_fitted(is_property=True)
    def surrogate(self):
        return self._surrogate

    @ensure_fitted(is_property=True)
    def candidates(self):
        return list(self._candidates)

    @ensure_fitted(is_property=True)
    def labeled(self):
        return self._labeled

    def fit(self, labeled, config):
        """
        Grows the surrogate over the labeled dataset, extracts its candidate
        rules and fits a :obj:`RuleModel` for the configured target.
        """
        self.check_target(config)
        config.target.check_kind(labeled.kind)
        with utils.Timer() as timer:
            self._surrogate = surrogate.grow_forest(
                labeled,
                T=config.trees,
                rho=config.rho,
                seed=config.seed,
                max_features=config.max_features,
                workers=self._workers
            )
            self._candidates = surrogate.extract_rules(
                self._surrogate, self._schema)
            self._labeled = labeled
            self._config = config
            utils.stdout.log(
                f"Extracted {len(self._candidates)} candidate rules from "
                f"{self._surrogate.T} tree(s)."
            )
            model = self._fit_target(config)
        model.fit_time = timer.elapsed
        return model

    @ensure_fitted
    def refit_target(self, config):
        """
        Fits a :obj:`RuleModel` for a new target or new thresholds, reusing
        the candidate rules of the last :obj:`fit`.
        """
        self.check_target(config)
        config.target.check_kind(self._labeled.kind)
        if self._config.surrogate_changed(config):
            utils.stdout.warning(
                "The surrogate settings differ from the ones it was grown "
                "with, the existing candidate rules are reused."
            )
        with utils.Timer() as timer:
            model = self._fit_target(config)
        model.fit_time = timer.elapsed
        return model

    def check_target(self, config):
        if config.target is None:
            raise configurable.ConfigRequiredError(
                param='target', klass=config)

    def _fit_target(self, config):
        labeled = self._labeled
        covers_every_output = bool(
            np.all(config.target.mask(labeled.outputs)))
        if covers_every_output:
            utils.stdout.warning(
                f"The target {config.target.describe()} contains every "
                "training output, every rule is trivially accurate."
            )
        stats = candidate_stats(self._candidates, labeled, config.target)
        maximal = maximal_valid_rules(
            self._candidates, labeled, config, self._schema, stats=stats)

        axes = GridAxes(maximal, self._schema)
        cells = build_grid(maximal, self._schema, config.cell_limit, axes=axes)
        cells = make_prototypes(cells, self._schema, labeled.data)
        cells = assign_optimal_rules(
            cells, maximal, labeled.data,
            feasibilities=rule_feasibilities(maximal, labeled.data),
            workers=self._workers
        )
        tree = grow_metarule_tree(cells, maximal, self._schema, axes=axes)

        by_rule = {}
        for rule, rule_stats in zip(self._candidates, stats):
            by_rule.setdefault(rule, rule_stats)
        return RuleModel(
            schema=self._schema,
            config=config,
            kind=labeled.kind,
            rules=maximal,
            stats=[by_rule[rule] for rule in maximal],
            metarule_tree=tree,
            provenance={
                'surrogate_fingerprint': self._surrogate.fingerprint,
                'schema_fingerprint': self._schema.fingerprint,
                'candidate_count': len(self._candidates),
                'cell_count': len(cells),
                'training_rows': labeled.N,
                'target_covers_every_output': covers_every_output,
            }
        )


def fit(labeled, config, schema, workers=None):
    return RuleModelBuilder(schema, workers=workers).fit(labeled, config)
