from tree_recourse import utils, exceptions


def Slug(**options):
    """
    A class factory that generates the base class of a slug-based model, in
    either its singular or its plural form.  Slug models describe a discrete
    set of options that are referenced by a short string, the slug.

    The singular form represents one option.  Instantiating it twice with the
    same slug returns the same instance:

    >>> class ModelKind(Slug(plural_model='tree_recourse.models.ModelKinds')):
    ...     def __init__(self, slug, criterion):
    ...         super().__init__(slug)
    ...         self._criterion = criterion
    >>> ModelKind('classifier', 'gini') is ModelKind.for_slug('classifier')
    True

    The plural form is created with the discrete `choices` and represents any
    subset of them.  Every choice is also attached to the plural class under
    its upper case key, and `HUMANIZED` lists every slug:

    >>> class ModelKinds(Slug(
    ...     singular_model=ModelKind,
    ...     choices={
    ...         'classifier': ModelKind('classifier', 'gini'),
    ...         'regressor': ModelKind('regressor', 'variance'),
    ...     }
    ... )):
    ...     pass
    >>> ModelKinds.CLASSIFIER
    <ModelKind classifier>

    Parameters:
    ----------
    singular_model: :obj:`type`
        The singular form of the slug model.  Required for the plural form.

    plural_model: :obj:`type` or :obj:`str`
        The plural form of the slug model, or its dotted import path when it
        is defined after the singular form.  Required for the singular form.

    choices: :obj:`dict`
        The discrete options.  Required for the plural form.
    """
    plural_model = options.pop('plural_model', None)
    singular_model = options.pop('singular_model', None)
    if plural_model is None and singular_model is None:
        raise TypeError(
            "A slug model must either define its plural counterpart or its "
            "singular counterpart."
        )
    elif singular_model is not None:
        return plural_slug_base(singular_model, options.pop('choices', None))
    elif 'choices' in options:
        raise TypeError(
            "The singular form of a slug model cannot define the set of "
            "discrete choices for that slug model."
        )
    return singular_slug_base(plural_model)


def to_model(value):
    if isinstance(value, str):
        module_path, name = value.rsplit('.', 1)
        module = __import__(module_path, fromlist=[name])
        return getattr(module, name)
    return value


def singular_slug_base(plural_model):
    class SingleSlug:
        instances = None

        def __new__(cls, slug, *args, **kwargs):
            if not isinstance(slug, str):
                raise exceptions.InvalidParamError(
                    param='slug', valid_types=(str, ), value=slug)
            if cls.instances is None:
                cls.instances = {}
            if slug not in cls.instances:
                cls.instances[slug] = super().__new__(cls)
            return cls.instances[slug]

        def __init__(self, slug):
            self._slug = slug

        def __repr__(self):
            return f"<{self.__class__.__name__} {self.slug}>"

        def __str__(self):
            return self.slug

        @property
        def slug(self):
            return self._slug

        @classmethod
        def for_slug(cls, slug):
            if isinstance(slug, cls):
                return slug
            for instance in to_model(plural_model).__ALL__:
                if instance.slug == slug:
                    return instance
            raise LookupError(
                f"There is no {cls.__name__} associated with slug {slug}.")

    return SingleSlug


def plural_slug_base(singular_model, choices):
    if not choices:
        raise TypeError(
            "The plural form of a slug model must define the individual "
            "discrete slug choices that it can be composed of."
        )

    class MultipleSlugs(utils.ImmutableSequence):
        def __init__(self, *slugs):
            slugs = utils.iterable_from_args(*slugs, strict=False)
            resolved = []
            for s in slugs:
                s = singular_model.for_slug(s)
                if s not in resolved:
                    resolved.append(s)
            super().__init__(resolved)

        def __repr__(self):
            return f"<{self.__class__.__name__} slugs={self.slugs}>"

        @property
        def slugs(self):
            return [s.slug for s in self]

        @classmethod
        def all(cls):
            return cls(cls.__ALL__)

    __ALL__ = []
    for key, value in choices.items():
        if not isinstance(value, singular_model):
            raise ValueError(
                f"Encountered type {type(value)} as an option.  Options must "
                f"be an instance of {singular_model.__name__}."
            )
        setattr(MultipleSlugs, key.upper(), value)
        __ALL__.append(value)
    MultipleSlugs.__ALL__ = __ALL__
    MultipleSlugs.SLUGS = [s.slug for s in __ALL__]
    MultipleSlugs.HUMANIZED = utils.humanize_list(
        MultipleSlugs.SLUGS, conjunction="or")
    return MultipleSlugs
