import numpy as np

from tree_recourse import engine, exceptions, surrogate, utils
from tree_recourse.data import (
    ClassSet, ExternalProcessModel, Interval, PrecomputedModel, load_csv,
    label_with_model, load_labeled_csv)
from tree_recourse.models import ModelKind, ModelKinds


__all__ = (
    'TARGET_PARAMS', 'resolve_kind', 'black_box_model', 'load_labeled',
    'evaluation_model', 'resolve_target'
)


TARGET_PARAMS = [
    'target_class', 'target_untargeted', 'target_high', 'target_low',
    'target_split'
]


def resolve_kind(kind=None, model=None, direction=None, split=False):
    """
    The kind of the black box: the one provided, else the one of the loaded
    model, else a regressor when a regression target is requested.
    """
    if kind is not None:
        return ModelKind.for_slug(kind)
    elif model is not None:
        return model.kind
    elif direction is not None or split:
        return ModelKinds.REGRESSOR
    return ModelKinds.CLASSIFIER


def black_box_model(kind, black_box=None, model_command=None):
    if black_box is not None and model_command is not None:
        raise exceptions.InvalidParamError(
            param=['black_box', 'model_command'],
            message="Only one of the black box sources may be provided."
        )
    elif black_box is not None:
        return surrogate.SurrogateModel.load(black_box)
    elif model_command is not None:
        return ExternalProcessModel(model_command, kind)
    return None


def load_labeled(path, schema, kind, output_column=None, model=None,
        workers=None):
    """
    Loads the rows of a CSV file along with the black-box outputs for them,
    read from `output_column` or computed by `model`.
    """
    if output_column is not None:
        return load_labeled_csv(path, schema, output_column, kind)
    elif model is not None:
        return label_with_model(load_csv(path, schema), model, workers=workers)
    raise exceptions.RequiredParamError(
        param=['output_column', 'black_box', 'model_command'],
        conjunction='or'
    )


def evaluation_model(labeled, model=None):
    """
    The black box a cross-validation labels its rows with: the provided model
    or the precomputed outputs of the data file.
    """
    return model if model is not None else PrecomputedModel(labeled)


def resolve_target(kind, labeled, target_class=None, untargeted=False,
        direction=None, threshold=None, split=False):
    """
    Builds the target of a fit from the command line target flags.

    Returns the :obj:`TargetSpec` and the policy of the model set to fit, one
    of which is None.  Regression targets split the outputs at `threshold`,
    the mean training output when not provided.
    """
    modes = [bool(target_class), bool(untargeted), direction is not None,
        bool(split)]
    if sum(modes) == 0:
        raise exceptions.RequiredParamError(
            param=TARGET_PARAMS, conjunction='or')
    elif sum(modes) > 1:
        raise exceptions.InvalidParamError(
            param=TARGET_PARAMS,
            message="Only one target may be provided."
        )
    if kind.is_classifier:
        if direction is not None or split:
            raise exceptions.InvalidParamError(
                param=['target_high', 'target_low', 'target_split'],
                message="Regression targets require a regressor."
            )
        elif untargeted:
            return None, engine.UNTARGETED
        return ClassSet(list(utils.ensure_iterable(target_class))), None

    if target_class or untargeted:
        raise exceptions.InvalidParamError(
            param=['target_class', 'target_untargeted'],
            message="Class targets require a classifier."
        )
    mu = float(np.mean(labeled.outputs)) if threshold is None \
        else float(threshold)
    if split:
        return None, engine.REGRESSION_SPLIT
    elif direction == 'high':
        return Interval.above(mu), None
    return Interval.below(mu), None
