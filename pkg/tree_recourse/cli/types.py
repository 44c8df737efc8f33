import pathlib
import click

from tree_recourse.models import OutputType, OutputTypes


class PathType(click.Path):
    def convert(self, value, param, ctx):
        value = super().convert(value, param, ctx)
        return pathlib.Path(value)


class DirectoryType(PathType):
    def convert(self, value, param, ctx):
        value = super().convert(value, param, ctx)
        if value.exists():
            if not value.is_dir():
                self.fail(
                    f"The path {str(value)} is not a directory.",
                    param,
                    ctx
                )
        elif value.suffix != "":
            self.fail(
                f"The path {str(value)} is not a directory.",
                param,
                ctx
            )
        return value


class CommaSeparatedListType(click.types.StringParamType):
    """
    A comma separated list of values, returned in the order provided with
    duplicates removed.
    """
    name = "list"

    def convert_value(self, value, param=None, ctx=None):
        return value.strip()

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        value = super().convert(value, param, ctx)
        results = []
        for v in value.split(','):
            if v.strip() == "":
                continue
            converted = self.convert_value(v, param, ctx)
            if converted not in results:
                results.append(converted)
        if not results:
            self.fail("At least one value must be provided.", param, ctx)
        return results


class NumberListType(CommaSeparatedListType):
    def __init__(self, cast=float, *args, **kwargs):
        self._cast = cast
        super().__init__(*args, **kwargs)

    def convert_value(self, value, param=None, ctx=None):
        try:
            return self._cast(value.strip())
        except ValueError:
            self.fail(
                f"The value {value.strip()!r} is not a valid "
                f"{self._cast.__name__}.",
                param,
                ctx
            )


class OutputTypeType(click.Choice):
    def __init__(self, *args, **kwargs):
        super().__init__(OutputTypes.SLUGS, case_sensitive=False)

    def convert(self, value, param, ctx):
        if isinstance(value, OutputType):
            return value.slug
        return super().convert(value, param, ctx).lower()
