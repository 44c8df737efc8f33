import pathlib


__all__ = ('ensure_directory', )


def ensure_directory(path):
    """
    Creates the directory (and its parents) if it does not exist and returns
    it as a :obj:`pathlib.Path`.
    """
    path = pathlib.Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path
