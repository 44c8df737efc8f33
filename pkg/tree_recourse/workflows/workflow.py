import csv
import io
import json

from tree_recourse import (
    configurable, engine, evaluation, exceptions, render, synth, utils)
from tree_recourse.data import FeatureSchema, load_csv
from tree_recourse.models import OutputType, OutputTypes

from .sources import (
    black_box_model, evaluation_model, load_labeled, resolve_kind,
    resolve_target)


__all__ = (
    'FitWorkflow', 'ExplainWorkflow', 'EvaluateWorkflow', 'RenderWorkflow',
    'SynthWorkflow', 'SweepWorkflow'
)


def output_type_formatter(value):
    return OutputType.for_slug(value)


class Workflow(configurable.Configurable):
    """
    Base class for the work behind a command, configured from the values of
    its command line options and performed by calling it.
    """
    configure_on_init = True
    configuration = [
        configurable.Config(param='workers', default=None, allow_null=True),
        configurable.Config(
            param='output_type',
            default='text',
            formatter=output_type_formatter
        ),
        configurable.Config(
            param='report_dir',
            default=None,
            allow_null=True,
            formatter=utils.path_formatter()
        ),
    ]

    def __call__(self):
        return self.run()

    def run(self):
        raise NotImplementedError()

    def emit(self, text):
        utils.stdout.echo(text)

    def write_report(self, name, text):
        if self.report_dir is None:
            return None
        path = utils.ensure_directory(self.report_dir) / name
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write(text)
            stream.write("\n")
        utils.stdout.info(f"Writing to {str(path)}")
        return path


class LabeledWorkflow(Workflow):
    """
    A workflow reading a data file whose black-box outputs are taken from an
    output column, a serialized tree model or an external command.
    """
    configuration = [
        configurable.Config(
            param='data',
            required=True,
            formatter=utils.path_formatter()
        ),
        configurable.Config(
            param='schema',
            default=None,
            allow_null=True,
            formatter=utils.path_formatter()
        ),
        configurable.Config(param='output_column', default=None,
            allow_null=True),
        configurable.Config(param='black_box', default=None, allow_null=True),
        configurable.Config(param='model_command', default=None,
            allow_null=True),
        configurable.Config(param='kind', default=None, allow_null=True),
    ]

    @property
    def has_outputs(self):
        return self.output_column is not None \
            or self.black_box is not None \
            or self.model_command is not None

    def black_box_and_kind(self, direction=None, split=False):
        model = black_box_model(
            resolve_kind(self.kind, direction=direction, split=split),
            black_box=self.black_box,
            model_command=self.model_command
        )
        kind = resolve_kind(
            self.kind, model=model, direction=direction, split=split)
        return model, kind

    def load_labeled(self, schema, kind, model):
        return load_labeled(
            self.data, schema, kind,
            output_column=self.output_column,
            model=model,
            workers=self.workers
        )

    def load_schema(self):
        if self.schema is None:
            raise configurable.ConfigRequiredError(param='schema', klass=self)
        return FeatureSchema.load(self.schema)


class FittingWorkflow(LabeledWorkflow):
    """
    A workflow fitting rule models, validating its hyperparameters before any
    data is read.
    """
    configuration = [
        configurable.Config(param='tau', default=None, allow_null=True),
        configurable.Config(param='rho', default=None, allow_null=True),
        configurable.Config(param='trees', default=1),
        configurable.Config(
            param='cell_limit', default=engine.DEFAULT_CELL_LIMIT),
        configurable.Config(param='seed', default=0),
        configurable.Config(param='max_features', default=None,
            allow_null=True),
        configurable.Config(param='target_class', default=None,
            allow_null=True),
        configurable.Config(param='target_untargeted', default=False),
        configurable.Config(param='target_high', default=None,
            allow_null=True),
        configurable.Config(param='threshold', default=None, allow_null=True),
        configurable.Config(param='target_split', default=False),
    ]

    def post_configure(self):
        self._recourse_config = self.make_recourse_config()

    def make_recourse_config(self):
        return engine.RecourseConfig(config=dict(
            tau=self.tau,
            rho=self.rho,
            trees=self.trees,
            cell_limit=self.cell_limit,
            seed=self.seed,
            max_features=self.max_features
        ))

    @property
    def recourse_config(self):
        return self._recourse_config

    @property
    def direction(self):
        if self.target_high is None:
            return None
        return 'high' if self.target_high else 'low'

    def resolve_target(self, kind, labeled):
        return resolve_target(
            kind, labeled,
            target_class=self.target_class,
            untargeted=self.target_untargeted,
            direction=self.direction,
            threshold=self.threshold,
            split=self.target_split
        )


def describe_fit(model):
    members = [m for _, m in render.members_of(model)]
    rules = sum([len(m.rules) for m in members])
    metarules = sum([m.metarule_count for m in members])
    cells = sum([m.cell_count or 0 for m in members])
    fit_time = model.fit_time or 0.0
    return (
        f"Fit {rules} rule(s) in {metarules} metarule(s) over {cells} grid "
        f"cell(s) in {fit_time:.3f}s."
    )


class FitWorkflow(FittingWorkflow):
    configuration = [
        configurable.Config(
            param='model_out',
            required=True,
            formatter=utils.path_formatter()
        ),
    ]

    def run(self):
        schema = self.load_schema()
        model, kind = self.black_box_and_kind(
            direction=self.direction, split=self.target_split)
        labeled = self.load_labeled(schema, kind, model)
        target, policy = self.resolve_target(kind, labeled)
        config = self.recourse_config.replace(target=target)

        with utils.Spinner(
                label=utils.stdout.info('Fitting', display=False)):
            if policy == engine.UNTARGETED:
                rule_model = engine.fit_untargeted(
                    labeled, config, schema, workers=self.workers)
            elif policy == engine.REGRESSION_SPLIT:
                rule_model = engine.fit_regression_split(
                    labeled, config, schema,
                    threshold=self.threshold,
                    workers=self.workers
                )
            else:
                rule_model = engine.fit(
                    labeled, config, schema, workers=self.workers)

        rule_model.dump(self.model_out)
        utils.stdout.success(describe_fit(rule_model))
        utils.stdout.info(f"Writing to {str(self.model_out)}")
        return rule_model


class ExplainWorkflow(LabeledWorkflow):
    configuration = [
        configurable.Config(
            param='model_in',
            required=True,
            formatter=utils.path_formatter()
        ),
    ]

    def load_rows(self, model):
        if not self.has_outputs:
            return load_csv(self.data, model.schema).rows, None
        black_box = black_box_model(
            model.kind,
            black_box=self.black_box,
            model_command=self.model_command
        )
        labeled = self.load_labeled(model.schema, model.kind, black_box)
        return labeled.rows, list(labeled.outputs)

    def run(self):
        model = engine.load_model(self.model_in)
        rows, outputs = self.load_rows(model)
        with utils.Timer() as timer:
            explanations = model.explain_many(
                rows, outputs=outputs, workers=self.workers)
        utils.stdout.log(
            f"Explained {len(explanations)} rows in {timer.elapsed:.3f}s.")

        texts = [render.render_explanation(e, model.schema)
            for e in explanations]
        documents = [render.explanation_to_dict(e, model.schema)
            for e in explanations]
        lines = [json.dumps(d, sort_keys=True) for d in documents]
        if self.output_type == OutputTypes.JSON:
            self.emit("\n".join(lines))
        elif self.output_type == OutputTypes.CSV:
            self.emit(self.to_csv(documents))
        else:
            self.emit("\n\n".join(texts))
        self.write_report("explanations.txt", "\n\n".join(texts))
        self.write_report("explanations.jsonl", "\n".join(lines))
        return explanations

    def to_csv(self, documents):
        header = ['row', 'rule', 'metarule', 'sparsity', 'already_satisfied',
            'changes', 'keeps']
        rows = [
            [i, d['rule'], d['metarule'], d['sparsity'],
                str(d['already_satisfied']).lower(), "; ".join(d['changes']),
                "; ".join(d['keeps'])]
            for i, d in enumerate(documents)
        ]
        stream = io.StringIO()
        writer = csv.writer(stream, delimiter=',', lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return stream.getvalue().rstrip("\n")


class EvaluateWorkflow(FittingWorkflow):
    """
    Evaluates a fitted model over the data file or, without a model,
    cross-validates fits over the data file.
    """
    configuration = [
        configurable.Config(
            param='model_in',
            default=None,
            allow_null=True,
            formatter=utils.path_formatter()
        ),
        configurable.Config(param='folds', default=10),
        configurable.Config(param='tolerate_failures', default=False),
    ]

    def make_recourse_config(self):
        if self.model_in is not None:
            return None
        return super().make_recourse_config()

    def evaluate_model(self):
        model = engine.load_model(self.model_in)
        black_box = black_box_model(
            model.kind,
            black_box=self.black_box,
            model_command=self.model_command
        )
        labeled = self.load_labeled(model.schema, model.kind, black_box)
        return [evaluation.evaluate(model, labeled)]

    def cross_validate(self):
        schema = self.load_schema()
        model, kind = self.black_box_and_kind(
            direction=self.direction, split=self.target_split)
        labeled = self.load_labeled(schema, kind, model)
        config = self.recourse_config
        if kind.is_classifier:
            target, _ = self.resolve_target(kind, labeled)
            config = config.replace(target=target)
        with utils.Spinner(
                label=utils.stdout.info('Cross-validating', display=False)):
            return evaluation.cross_validate(
                labeled.data,
                evaluation_model(labeled, model),
                config,
                folds=self.folds,
                seed=self.seed,
                tolerate_failures=self.tolerate_failures,
                workers=self.workers
            )

    def run(self):
        if self.model_in is not None:
            reports = self.evaluate_model()
        else:
            reports = self.cross_validate()
        summary = evaluation.summarize(reports)
        if self.report_dir is not None:
            evaluation.write_reports(reports, self.report_dir)
            utils.stdout.info(f"Writing to {str(self.report_dir)}")
        self.emit(json.dumps(summary, sort_keys=True, indent=2))
        return reports


class RenderWorkflow(Workflow):
    configuration = [
        configurable.Config(
            param='model_in',
            required=True,
            formatter=utils.path_formatter()
        ),
        configurable.Config(
            param='sample',
            default=None,
            allow_null=True,
            formatter=utils.path_formatter()
        ),
        configurable.Config(param='summary', default=False),
        configurable.Config(param='plot_rule', default=None, allow_null=True),
        configurable.Config(param='output_column', default=None,
            allow_null=True),
    ]

    def load_sample(self, model):
        if self.sample is None:
            return None
        return load_csv(self.sample, model.schema)

    def feature_usage(self, model, sample):
        if isinstance(model, engine.RuleModelSet):
            return None
        explanations = model.explain_many(sample.rows, workers=self.workers)
        return render.feature_usage_summary(explanations, model.schema)

    def export_rule_plot(self, model):
        if self.sample is None or self.output_column is None \
                or self.report_dir is None:
            raise configurable.ConfigRequiredError(
                param=['sample', 'output_column', 'report_dir'], klass=self)
        elif isinstance(model, engine.RuleModelSet):
            raise exceptions.InvalidParamError(
                param='plot_rule',
                message="Rules of a model set cannot be plotted."
            )
        labeled = load_labeled(
            self.sample, model.schema, model.kind,
            output_column=self.output_column
        )
        path = utils.ensure_directory(self.report_dir) \
            / f"rule-R{self.plot_rule}.csv"
        render.export_rule_plot(model, self.plot_rule, labeled, path)
        utils.stdout.info(f"Writing to {str(path)}")
        return path

    def run(self):
        model = engine.load_model(self.model_in)
        sample = self.load_sample(model)
        tree = render.render_metarule_tree(
            model, sample=sample.rows if sample is not None else None)
        document = {'tree': tree}
        texts = [tree]
        if self.summary:
            document['summary'] = render.render_global_summary(model)
            texts.append(document['summary'])
        if sample is not None:
            usage = self.feature_usage(model, sample)
            if usage is not None:
                document['feature_usage'] = usage
                texts.append("\n".join([
                    f"{name}: change {counts['change']}, "
                    f"keep {counts['keep']}"
                    for name, counts in usage.items()
                ]))

        if self.output_type == OutputTypes.JSON:
            self.emit(json.dumps(document, sort_keys=True, indent=2))
        else:
            self.emit("\n\n".join(texts))
        self.write_report("tree.txt", tree)

        if self.plot_rule is not None:
            self.export_rule_plot(model)
        return document


class SynthWorkflow(Workflow):
    configuration = [
        configurable.Config(param='problem', default='clusters'),
        configurable.Config(param='seed', default=0),
        configurable.Config(param='rows', default=500),
        configurable.Config(param='categorical', default=False),
        configurable.Config(
            param='report_dir',
            required=True,
            formatter=utils.path_formatter()
        ),
    ]

    def run(self):
        fixture = synth.PROBLEMS[self.problem](
            seed=self.seed, n=self.rows, categorical=self.categorical)
        directory = synth.write_fixture(fixture, self.report_dir)
        utils.stdout.success(
            f"Wrote {fixture.labeled.N} rows to {str(directory)}.")
        return fixture


class SweepWorkflow(FittingWorkflow):
    """
    Cross-validates a grid of hyperparameters, `trees`, `tau` and `rho` being
    lists of values.
    """
    configuration = [
        configurable.Config(param='trees', default=[1]),
        configurable.Config(param='tau', required=True),
        configurable.Config(param='rho', required=True),
        configurable.Config(param='folds', default=5),
        configurable.Config(
            param='report_dir',
            required=True,
            formatter=utils.path_formatter()
        ),
    ]

    def make_recourse_config(self):
        # Every setting of the grid is validated before any fit.
        configs = [
            engine.RecourseConfig(config=dict(
                tau=tau, rho=rho, trees=trees,
                cell_limit=self.cell_limit,
                seed=self.seed,
                max_features=self.max_features
            ))
            for trees in self.trees for tau in self.tau for rho in self.rho
        ]
        return configs[0]

    def run(self):
        schema = self.load_schema()
        model, kind = self.black_box_and_kind(
            direction=self.direction, split=self.target_split)
        labeled = self.load_labeled(schema, kind, model)
        config = self.recourse_config
        if kind.is_classifier:
            target, _ = self.resolve_target(kind, labeled)
            config = config.replace(target=target)
        with utils.Spinner(
                label=utils.stdout.info('Sweeping', display=False)):
            results = evaluation.sweep(
                labeled.data,
                evaluation_model(labeled, model),
                config,
                trees=self.trees,
                taus=self.tau,
                rhos=self.rho,
                folds=self.folds,
                seed=self.seed,
                workers=self.workers
            )
        evaluation.write_sweep(results, self.report_dir)
        utils.stdout.success(
            f"Swept {len(results)} setting(s), writing to "
            f"{str(self.report_dir)}.")
        return results
