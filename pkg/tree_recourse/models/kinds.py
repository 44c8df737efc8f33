from .slug import Slug


class ModelKind(Slug(plural_model='tree_recourse.models.ModelKinds')):
    """
    The kind of a black-box model: a classifier producing labels from a finite
    set or a regressor producing real values.  The kind determines the split
    criterion of the surrogate trees and the form of the target.
    """
    def __init__(self, slug, criterion, target_variant):
        super().__init__(slug)
        self._criterion = criterion
        self._target_variant = target_variant

    @property
    def criterion(self):
        return self._criterion

    @property
    def target_variant(self):
        return self._target_variant

    @property
    def is_classifier(self):
        return self.slug == 'classifier'


class ModelKinds(Slug(
    singular_model=ModelKind,
    choices={
        'classifier': ModelKind(
            'classifier', criterion='gini', target_variant='class_set'),
        'regressor': ModelKind(
            'regressor', criterion='variance', target_variant='interval'),
    }
)):
    pass
