from tree_recourse import utils


class ExceptionMetaClass(type):
    """
    Meta class for :obj:`AbstractException` that merges the `attributes`
    declared on a class with those of its bases and replaces every attribute
    with an @property returning its formatted value.

    A value is resolved in the following order:

    (1) The value provided on initialization.
    (2) The value defined statically on the class, as a plain attribute or as
        an @property.
    (3) The `default` of the :obj:`ExceptionAttribute`.
    (4) A `default_<name>` attribute defined on the class.
    """
    def __new__(cls, name, bases, dct):
        attributes = [getattr(b, 'attributes', []) for b in bases]
        dct['attributes'] = utils.merge_without_duplicates(
            *(attributes + [dct.get('attributes', [])]),
            attr='name'
        )
        # Static values are captured before they are replaced by the generated
        # properties, so subclasses can still override them.
        statics = {}
        for b in bases:
            statics.update(getattr(b, '_static_attributes', {}))
        for attr in dct['attributes']:
            if attr.name in dct:
                statics[attr.name] = dct[attr.name]
        dct['_static_attributes'] = statics

        klass = super().__new__(cls, name, bases, dct)
        for attr in dct['attributes']:
            setattr(klass, attr.name, property(cls.attribute_getter(attr)))
        return klass

    @staticmethod
    def attribute_getter(attr):
        def getter(instance):
            value = getattr(instance, f'_{attr.name}', None)
            if value is None:
                static = type(instance)._static_attributes.get(
                    attr.name, None)
                if isinstance(static, property):
                    value = static.fget(instance)
                else:
                    value = static
            if value is None:
                value = attr.default
            if value is None:
                value = getattr(type(instance), f'default_{attr.name}', None)
            return attr.format(value, instance)
        return getter
