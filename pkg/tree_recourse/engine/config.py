from tree_recourse import configurable
from tree_recourse.data import TargetSpec, target_from_dict


__all__ = ('RecourseConfig', 'DEFAULT_CELL_LIMIT')


DEFAULT_CELL_LIMIT = 100000


def in_unit_interval(value):
    if not 0.0 < value <= 1.0:
        return f"The value {value} must be in (0, 1]."
    return True


def at_least_one(value):
    if value < 1:
        return f"The value {value} must be at least 1."
    return True


class RecourseConfig(configurable.Configurable):
    """
    The hyperparameters of a rule model fit.

    Parameters:
    ----------
    rho: :obj:`float`
        The feasibility threshold in (0, 1]: every rule must contain at least
        this fraction of the training rows.  Also the minimum leaf fraction of
        the surrogate trees.

    tau: :obj:`float`
        The accuracy threshold in (0, 1].

    target: :obj:`TargetSpec` (optional)
        The target outputs.  Required to fit a single model, model sets
        derive the target of each member.

    trees: :obj:`int` (optional)
        The number of surrogate trees.  A single tree is grown on the full
        dataset, several on bootstrap resamples.

        Default: 1

    cell_limit: :obj:`int` (optional)
        Default: 100000

    seed: :obj:`int` (optional)
        Default: 0

    max_features: :obj:`int` (optional)
        The number of dimensions each surrogate node considers, all of them
        when not provided.

        Default: None
    """
    configure_on_init = True
    configuration = [
        configurable.Config(
            param='rho',
            required=True,
            valid_types=(int, float),
            validate=in_unit_interval,
            formatter=float
        ),
        configurable.Config(
            param='tau',
            required=True,
            valid_types=(int, float),
            validate=in_unit_interval,
            formatter=float
        ),
        configurable.Config(
            param='target',
            default=None,
            allow_null=True,
            valid_types=TargetSpec
        ),
        configurable.Config(
            param='trees',
            default=1,
            valid_types=int,
            validate=at_least_one
        ),
        configurable.Config(
            param='cell_limit',
            default=DEFAULT_CELL_LIMIT,
            valid_types=int,
            validate=at_least_one
        ),
        configurable.Config(param='seed', default=0, valid_types=int),
        configurable.Config(
            param='max_features',
            default=None,
            allow_null=True,
            valid_types=int,
            validate=at_least_one
        ),
    ]

    def surrogate_changed(self, other):
        """
        Whether or not the surrogate grown under `other` differs from the one
        grown under this configuration.
        """
        return any([getattr(self, p) != getattr(other, p)
            for p in ('rho', 'trees', 'seed', 'max_features')])

    def to_json(self):
        data = self.to_dict()
        if self.target is not None:
            data['target'] = self.target.to_dict()
        return data

    @classmethod
    def from_json(cls, data):
        data = dict(data)
        if data.get('target') is not None:
            data['target'] = target_from_dict(data['target'])
        return cls(config=data)
