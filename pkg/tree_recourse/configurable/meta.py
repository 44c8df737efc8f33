from tree_recourse import utils, exceptions

from .config import Config


class NotConfigurable:
    """
    Placeholder for the `configuration` of a class that extends a configurable
    class but should not itself be configurable.
    """


def standardize_configurations(configuration):
    standardized, invalid = [], []
    for c in configuration:
        if isinstance(c, Config):
            standardized.append(c)
        elif isinstance(c, dict):
            standardized.append(Config(**c))
        else:
            invalid.append(c)
    if invalid:
        raise exceptions.InvalidParamError(
            param='configuration',
            valid_types=(Config, dict),
            value=invalid
        )
    return standardized


class ConfigurableMetaClass(type):
    """
    Meta class for :obj:`Configurable` classes.  The :obj:`Config` instances
    declared in the `configuration` of a class are merged with those of its
    bases, a :obj:`Config` declared on the child replacing one with the same
    `param` on a base, and installed on the class as descriptors.

    >>> class Workflow(Configurable):
    ...     configuration = [Config(param='seed', default=0)]
    >>> class FitWorkflow(Workflow):
    ...     configuration = [Config(param='data', required=True)]
    >>> [c.param for c in FitWorkflow.configuration]
    ['seed', 'data']
    """
    def __new__(cls, name, bases, dct):
        declared = dct.get('configuration', None)
        if declared is NotConfigurable:
            dct['configuration'] = []
            dct['is_configurable'] = False
            return super().__new__(cls, name, bases, dct)
        elif declared is not None and not utils.is_iterable(declared):
            raise exceptions.InvalidParamError(
                valid_types=(list, tuple),
                value=declared,
                param='configuration'
            )

        configuration_sets = []
        for base in bases:
            base_configuration = getattr(base, 'configuration', None)
            if utils.is_iterable(base_configuration) \
                    and getattr(base, 'is_configurable', False):
                configuration_sets.append(base_configuration)
        if declared is not None:
            configuration_sets.append(standardize_configurations(declared))

        dct['configuration'] = utils.merge_without_duplicates(
            *configuration_sets, attr='param')
        dct['is_configurable'] = len(dct['configuration']) != 0
        klass = super().__new__(cls, name, bases, dct)
        for config in dct['configuration']:
            setattr(klass, config.param, config)
        return klass
