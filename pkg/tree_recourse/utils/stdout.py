import copy
import sys
import threading
import time

import click

from .builtins import ensure_iterable, empty
from .formatters import humanize_list


class Terminal:
    BOLD = '\033[1m'
    ITALIC = '\033[3m'
    END = '\033[0m'
    BLUE = '\033[0;94m'
    CYAN = '\033[96m'
    GREEN = '\033[92m'
    YELLOW = '\033[33m'
    RED = '\033[31m'

    LEVEL_COLOR_MAP = {
        'warning': YELLOW,
        'error': RED,
        'success': GREEN,
        'info': BLUE,
        'debug': CYAN,
    }
    STYLE_CODES = {
        'bold': BOLD,
        'italic': ITALIC,
    }

    @classmethod
    def reset(cls, text, reset=True):
        if reset:
            return text + cls.END
        return text

    @classmethod
    def get_styles(cls, style=None, bold=empty):
        styles = ensure_iterable(style)
        if bold is True and 'bold' not in styles:
            styles.append('bold')
        elif bold is False:
            styles = [s for s in styles if s != 'bold']
        invalid = [s for s in styles if s not in cls.STYLE_CODES]
        if len(invalid) == 1:
            raise ValueError(f"The provided style {invalid[0]} is invalid.")
        elif invalid:
            raise ValueError(
                f"The provided styles {humanize_list(invalid)} are invalid.")
        return styles

    @classmethod
    def get_color(cls, color=None, level=None):
        if color is not None:
            if not hasattr(cls, color.upper()):
                raise LookupError(f"Invalid color {color} provided.")
            return getattr(cls, color.upper())
        elif level is not None:
            if level.lower() not in cls.LEVEL_COLOR_MAP:
                raise LookupError(f"Invalid level provided: {level}.")
            return cls.LEVEL_COLOR_MAP[level.lower()]
        return None

    @classmethod
    def color(cls, text, color=None, level=None, reset=False):
        code = cls.get_color(color=color, level=level)
        if code is None:
            return text
        return cls.reset(code + text, reset=reset)

    @classmethod
    def style(cls, text, color=None, level=None, style=None, bold=empty,
            reset=True):
        text = cls.color(text, color=color, level=level)
        for s in cls.get_styles(style=style, bold=bold):
            text = cls.STYLE_CODES[s] + text
        if text.startswith('\033'):
            return cls.reset(text, reset=reset)
        return text

    @classmethod
    def get_prefix(cls, prefix=None, color=None, level=None):
        if prefix is None:
            return None
        if not prefix.endswith(":"):
            prefix = f"{prefix}:"
        return cls.style(prefix, color=color, level=level, bold=True)

    @classmethod
    def get_indent_prefix(cls, indent=None):
        if indent is not None:
            return "-" * 2 * indent + ">"
        return None

    @classmethod
    def message(cls, text, prefix=None, color=None, level=None, indent=None,
            style=None, bold=empty, plain=False):
        if plain:
            parts = [cls.get_indent_prefix(indent),
                None if prefix is None else prefix.rstrip(':') + ':', text]
        else:
            parts = [
                cls.get_indent_prefix(indent),
                cls.get_prefix(prefix=prefix, color=color, level=level),
                cls.style(
                    text, color=color, level=level, style=style, bold=bold)
            ]
        return " ".join([p for p in parts if p is not None])


class MessageFn:
    """
    A configured message writer.  Calling it with a string formats and echoes
    the message, calling it with only keyword arguments returns a new
    :obj:`MessageFn` with those keyword arguments layered on top.

    >>> stdout.warning("The rule set is empty.")
    >>> indented = stdout.info(indent=1)
    >>> indented("Grown 3 trees.")

    Messages carry a verbosity `level`; a message is only displayed when
    :obj:`stdout.verbosity` is at least that level.
    """
    def __init__(self, **kwargs):
        self._kwargs = kwargs

    def __call__(self, *args, **kwargs):
        display = kwargs.pop('display', True)
        base_kwargs = copy.deepcopy(self._kwargs)
        base_kwargs.update(**kwargs)
        if not args:
            return self.__class__(**base_kwargs)
        if len(args) != 1 or not isinstance(args[0], str):
            raise TypeError(f"Improper call of {self.__class__}.")

        verbosity = base_kwargs.pop('verbosity', 1)
        err = base_kwargs.pop('err', False)
        data = Terminal.message(
            args[0], plain=not stdout.styled, **base_kwargs)
        if display is True and stdout.verbosity >= verbosity:
            click.echo(data, err=err)
        return data

    def display(self, message, **kwargs):
        if 'display' in kwargs:
            raise TypeError(
                "The `display` parameter is redundant for this method.")
        return self(message, display=True, **kwargs)

    def format(self, message, **kwargs):
        if 'display' in kwargs:
            raise TypeError(
                "The `display` parameter is redundant for this method.")
        return self(message, display=False, **kwargs)


class stdout:
    """
    The console channels of the package.  `verbosity` is 1 by default, 0 with
    `--quiet` (only warnings and errors) and 2 with `--verbose` (adds the
    `log` channel).  `styled` turns off ANSI codes for non-terminal output.
    """
    verbosity = 1
    styled = True

    echo = MessageFn(verbosity=0)
    info = MessageFn(level="info")
    success = MessageFn(level="success")
    warning = MessageFn(level="warning", prefix="Warning", verbosity=0)
    error = MessageFn(level="error", prefix="Error", verbosity=0, err=True)
    log = MessageFn(level="debug", prefix="Debug", verbosity=2, err=True)

    @classmethod
    def configure(cls, verbosity=1, styled=None):
        cls.verbosity = verbosity
        if styled is not None:
            cls.styled = styled


class Spinner:
    """
    Displays a spinning cursor while the wrapped block runs.  Nothing is
    written when stdout is not a terminal or when running quietly.
    """
    cursor_chars = '|/-\\'

    def __init__(self, delay=None, label=None):
        self._label = label
        self._delay = float(delay) if delay else 0.05
        self._busy = False
        self._thread = None

    @property
    def active(self):
        return sys.stdout.isatty() and stdout.verbosity >= 1

    def __enter__(self):
        if not self.active:
            return self
        self._busy = True
        if self._label is not None:
            sys.stdout.write(f"{self._label} ")
        self._thread = threading.Thread(target=self.spinner_task, daemon=True)
        self._thread.start()
        return self

    def __exit__(self, *exc_args):
        if self._thread is not None:
            self._busy = False
            self._thread.join()
            sys.stdout.write('\n')
            sys.stdout.flush()
        return False

    @classmethod
    def spinning_cursor(cls):
        while True:
            for cursor in cls.cursor_chars:
                yield cursor

    def spinner_task(self):
        cursor = self.spinning_cursor()
        while self._busy:
            sys.stdout.write(next(cursor))
            sys.stdout.flush()
            time.sleep(self._delay)
            sys.stdout.write('\b')
            sys.stdout.flush()


class Timer:
    """
    Measures the wall time of the wrapped block with a monotonic clock.

    >>> with Timer() as timer:
    ...     model = builder.fit(labeled)
    >>> timer.elapsed
    0.0123
    """
    def __init__(self):
        self._start = None
        self._elapsed = None

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc_args):
        self._elapsed = time.perf_counter() - self._start
        return False

    @property
    def elapsed(self):
        if self._elapsed is not None:
            return self._elapsed
        elif self._start is not None:
            return time.perf_counter() - self._start
        return 0.0
