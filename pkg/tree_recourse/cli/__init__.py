import sys
import click

import tree_recourse
from tree_recourse import exceptions, utils
from tree_recourse.workflows import (
    EvaluateWorkflow, ExplainWorkflow, FitWorkflow, RenderWorkflow,
    SweepWorkflow, SynthWorkflow)

from .options import (
    evaluate_command_options, explain_command_options, fit_command_options,
    render_command_options, sweep_command_options, synth_command_options)


def welcome_message():
    utils.stdout.info(
        f"Welcome to {tree_recourse.__appname__} "
        f"{tree_recourse.__version__}!",
        err=True
    )


class RecourseGroup(click.Group):
    """
    Maps every failure to the exit status of the command line: 1 for usage,
    validation and I/O errors, otherwise the `exit_code` of the
    :obj:`RecourseError` raised.
    """
    def main(self, args=None, prog_name=None, complete_var=None,
            standalone_mode=True, **extra):
        if not standalone_mode:
            return super().main(args=args, prog_name=prog_name,
                complete_var=complete_var, standalone_mode=False, **extra)
        try:
            result = super().main(args=args, prog_name=prog_name,
                complete_var=complete_var, standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            sys.exit(1)
        except click.Abort:
            utils.stdout.error("Aborted.")
            sys.exit(1)
        except exceptions.RecourseError as e:
            utils.stdout.error(e.message)
            sys.exit(e.exit_code)
        sys.exit(result if isinstance(result, int) else 0)


@click.group(cls=RecourseGroup)
@click.option('--quiet', is_flag=True, default=False,
    help="Only print warnings, errors and results.")
@click.option('--verbose', is_flag=True, default=False,
    help="Also print debugging messages.")
@click.pass_context
def cli(ctx, quiet, verbose):
    verbosity = 0 if quiet else (2 if verbose else 1)
    utils.stdout.configure(verbosity=verbosity, styled=sys.stdout.isatty())
    welcome_message()


@cli.command()
@fit_command_options
def fit(**kwargs):
    """
    Fits a rule model over the data and writes it to the model file.
    """
    FitWorkflow(config=kwargs)()


@cli.command()
@explain_command_options
def explain(**kwargs):
    """
    Explains every row of the data file with a fitted model.
    """
    ExplainWorkflow(config=kwargs)()


@cli.command()
@evaluate_command_options
def evaluate(**kwargs):
    """
    Scores a fitted model over the data file, or cross-validates fits over
    it when no model is provided.
    """
    EvaluateWorkflow(config=kwargs)()


@cli.command()
@render_command_options
def render(**kwargs):
    """
    Prints the metarule tree of a fitted model.
    """
    RenderWorkflow(config=kwargs)()


@cli.command()
@synth_command_options
def synth(**kwargs):
    """
    Writes a seeded synthetic dataset along with its black-box model.
    """
    SynthWorkflow(config=kwargs)()


@cli.command()
@sweep_command_options
def sweep(**kwargs):
    """
    Cross-validates every combination of trees, tau and rho.
    """
    SweepWorkflow(config=kwargs)()
