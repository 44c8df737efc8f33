from tree_recourse.models import OutputTypes


class HelpText:
    DATA = (
        "The CSV file of input rows, with a header naming the features of the "
        "schema.  Columns the schema does not declare are ignored."
    )
    SCHEMA = (
        "The YAML feature schema declaring every feature as numerical or "
        "categorical, along with the categories of the categorical ones."
    )
    OUTPUT_COLUMN = (
        "A column of the data file holding precomputed model outputs.  Used "
        "instead of querying a black-box model."
    )
    BLACK_BOX = (
        "A JSON tree model, e.g. the `black_box.json` written by `synth`, "
        "that provides the model outputs."
    )
    MODEL_COMMAND = (
        "An external command providing the model outputs.  It reads one "
        "comma separated encoded row per line on its standard input and "
        "writes one output per line."
    )
    KIND = (
        "Whether the black box is a classifier or a regressor.  Inferred from "
        "the black box or the target flags when omitted."
    )
    TAU = "The accuracy threshold of every rule, in (0, 1]."
    RHO = (
        "The feasibility threshold of every rule, in (0, 1]: the fraction of "
        "the data every rule must contain."
    )
    TREES = (
        "The number of surrogate trees.  A single tree is grown on the full "
        "data, several on bootstrap resamples."
    )
    CELL_LIMIT = (
        "The maximum number of grid cells a fit may enumerate before it is "
        "aborted."
    )
    SEED = "The seed of every random draw."
    MAX_FEATURES = (
        "The number of dimensions every surrogate split considers, all of "
        "them if omitted."
    )
    TARGET_CLASS = (
        "A target label of a classifier.  Can be provided several times."
    )
    TARGET_UNTARGETED = (
        "Explain every input towards any label other than its own, fitting "
        "one model per label."
    )
    TARGET_HIGH = (
        "For a regressor, target outputs above the threshold (--target-high) "
        "or at most the threshold (--target-low)."
    )
    THRESHOLD = (
        "The threshold splitting regression outputs, the mean output when "
        "omitted."
    )
    TARGET_SPLIT = (
        "For a regressor, fit both halves of the output space and explain "
        "every input towards the other half."
    )
    MODEL_IN = "A model file written by `fit`."
    MODEL_OUT = "The file the fitted model is written to."
    FOLDS = "The number of cross-validation folds."
    TOLERATE_FAILURES = (
        "Record folds whose fit fails in the reports instead of aborting."
    )
    REPORT_DIR = "The directory report files are written to."
    SAMPLE = (
        "A CSV file of rows.  Parts of the tree none of the rows reach are "
        "left out, and the remaining leaves show their row counts."
    )
    SUMMARY = "Also print the rules along with the metarules they apply in."
    PLOT_RULE = (
        "The index of a rule whose scatter data is written to the report "
        "directory as CSV, over the sample rows."
    )
    OUTPUT_TYPE = (
        "The manner in which results are printed.  Valid values are "
        f"{OutputTypes.HUMANIZED}."
    )
    CONFIG = (
        "An INI file whose `options` section provides default values for "
        "any of the options."
    )


class SynthHelpText(HelpText):
    PROBLEM = (
        "Two Gaussian clusters or an L-shaped region, both labelled by a "
        "tree classifier, or a one dimensional signal labelled by a "
        "regression tree."
    )
    ROWS = "The number of rows generated."
    CATEGORICAL = "Add a categorical feature with four categories."
    REPORT_DIR = (
        "The directory `data.csv`, `schema.yaml` and `black_box.json` are "
        "written to."
    )


class SweepHelpText(HelpText):
    TREES = "Comma separated numbers of surrogate trees."
    TAU = "Comma separated accuracy thresholds."
    RHO = "Comma separated feasibility thresholds."
