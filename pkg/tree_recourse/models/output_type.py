from .slug import Slug


class OutputType(Slug(plural_model='tree_recourse.models.OutputTypes')):
    pass


class OutputTypes(Slug(
    singular_model=OutputType,
    choices={
        'text': OutputType('text'),
        'json': OutputType('json'),
        'csv': OutputType('csv'),
    }
)):
    pass
