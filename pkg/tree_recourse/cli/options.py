from configparser import ConfigParser
import click

from tree_recourse import utils
from tree_recourse.models import ModelKinds

from .help import HelpText, SweepHelpText, SynthHelpText
from .types import DirectoryType, NumberListType, OutputTypeType, PathType


class Option:
    """
    A click option named after its parameter, `model_in` becoming
    `--model-in`.  Additional declarations may be provided as `decls`.
    """
    def __init__(self, name, help_text="", decls=None, **kwargs):
        self.name = name
        self.help_text = help_text
        self.decls = decls
        self.kwargs = kwargs

    def __call__(self, func):
        decls = self.decls or [f"--{self.name.replace('_', '-')}"]
        return click.option(*decls, help=self.help_text, **self.kwargs)(func)


class Options(utils.MutableSequence):
    def __call__(self, func):
        for option in self:
            func = option(func)
        return func


def configure(ctx, param, filename):
    if filename is not None:
        cfg = ConfigParser()
        cfg.read(filename)
        try:
            opts = dict(cfg['options'])
        except KeyError:
            opts = {}
        ctx.default_map = opts


config_option = Option(
    name='config',
    type=PathType(exists=True, dir_okay=False),
    callback=configure,
    is_eager=True,
    expose_value=False,
    help_text=HelpText.CONFIG
)

report_dir_option = Option(
    name='report_dir',
    type=DirectoryType(),
    help_text=HelpText.REPORT_DIR
)

output_type_option = Option(
    name='output_type',
    decls=['--format', 'output_type'],
    type=OutputTypeType(),
    help_text=HelpText.OUTPUT_TYPE
)

model_in_option = Option(
    name='model_in',
    type=PathType(exists=True, dir_okay=False),
    help_text=HelpText.MODEL_IN
)

output_options = Options(config_option, report_dir_option, output_type_option)

source_options = Options(
    Option(
        name='output_column',
        type=str,
        help_text=HelpText.OUTPUT_COLUMN
    ),
    Option(
        name='black_box',
        type=PathType(exists=True, dir_okay=False),
        help_text=HelpText.BLACK_BOX
    ),
    Option(name='model_command', type=str, help_text=HelpText.MODEL_COMMAND),
)

data_options = source_options.merge(
    Option(
        name='data',
        type=PathType(exists=True, dir_okay=False),
        help_text=HelpText.DATA
    ),
    Option(
        name='schema',
        type=PathType(exists=True, dir_okay=False),
        help_text=HelpText.SCHEMA
    ),
    Option(
        name='kind',
        type=click.Choice(ModelKinds.SLUGS, case_sensitive=False),
        help_text=HelpText.KIND
    ),
)

target_options = Options(
    Option(
        name='target_class',
        multiple=True,
        type=str,
        help_text=HelpText.TARGET_CLASS
    ),
    Option(
        name='target_untargeted',
        is_flag=True,
        default=False,
        help_text=HelpText.TARGET_UNTARGETED
    ),
    Option(
        name='target_high',
        decls=['--target-high/--target-low', 'target_high'],
        default=None,
        help_text=HelpText.TARGET_HIGH
    ),
    Option(name='threshold', type=float, help_text=HelpText.THRESHOLD),
    Option(
        name='target_split',
        is_flag=True,
        default=False,
        help_text=HelpText.TARGET_SPLIT
    ),
)

surrogate_options = Options(
    Option(name='cell_limit', type=int, help_text=HelpText.CELL_LIMIT),
    Option(name='seed', type=int, help_text=HelpText.SEED),
    Option(name='max_features', type=int, help_text=HelpText.MAX_FEATURES),
)

fit_options = surrogate_options.merge(
    Option(name='tau', type=float, help_text=HelpText.TAU),
    Option(name='rho', type=float, help_text=HelpText.RHO),
    Option(name='trees', type=int, help_text=HelpText.TREES),
)

fold_options = Options(
    Option(name='folds', type=int, help_text=HelpText.FOLDS),
    Option(
        name='tolerate_failures',
        is_flag=True,
        default=False,
        help_text=HelpText.TOLERATE_FAILURES
    ),
)

fit_command_options = Options(
    config_option,
    Option(
        name='model_out',
        type=PathType(dir_okay=False),
        required=True,
        help_text=HelpText.MODEL_OUT
    ),
).merge(*data_options, *fit_options, *target_options)

explain_command_options = output_options.merge(
    Option(
        name='model_in',
        type=PathType(exists=True, dir_okay=False),
        required=True,
        help_text=HelpText.MODEL_IN
    ),
    Option(
        name='data',
        type=PathType(exists=True, dir_okay=False),
        help_text=HelpText.DATA
    ),
    *source_options
)

evaluate_command_options = output_options.merge(
    model_in_option,
    *data_options, *fit_options, *target_options, *fold_options
)

render_command_options = output_options.merge(
    Option(
        name='model_in',
        type=PathType(exists=True, dir_okay=False),
        required=True,
        help_text=HelpText.MODEL_IN
    ),
    Option(
        name='sample',
        type=PathType(exists=True, dir_okay=False),
        help_text=HelpText.SAMPLE
    ),
    Option(
        name='summary',
        is_flag=True,
        default=False,
        help_text=HelpText.SUMMARY
    ),
    Option(name='plot_rule', type=int, help_text=HelpText.PLOT_RULE),
    Option(name='output_column', type=str, help_text=HelpText.OUTPUT_COLUMN),
)

synth_command_options = Options(
    config_option,
    Option(
        name='report_dir',
        type=DirectoryType(),
        required=True,
        help_text=SynthHelpText.REPORT_DIR
    ),
    Option(
        name='problem',
        type=click.Choice(['clusters', 'l_shape', 'regression']),
        default='clusters',
        help_text=SynthHelpText.PROBLEM
    ),
    Option(name='seed', type=int, default=0, help_text=SynthHelpText.SEED),
    Option(name='rows', type=int, default=500, help_text=SynthHelpText.ROWS),
    Option(
        name='categorical',
        is_flag=True,
        default=False,
        help_text=SynthHelpText.CATEGORICAL
    ),
)

sweep_command_options = Options(
    config_option,
    Option(
        name='report_dir',
        type=DirectoryType(),
        required=True,
        help_text=HelpText.REPORT_DIR
    ),
    Option(
        name='trees',
        type=NumberListType(cast=int),
        help_text=SweepHelpText.TREES
    ),
    Option(
        name='tau',
        type=NumberListType(cast=float),
        required=True,
        help_text=SweepHelpText.TAU
    ),
    Option(
        name='rho',
        type=NumberListType(cast=float),
        required=True,
        help_text=SweepHelpText.RHO
    ),
    Option(name='folds', type=int, help_text=HelpText.FOLDS),
).merge(*data_options, *surrogate_options, *target_options)
