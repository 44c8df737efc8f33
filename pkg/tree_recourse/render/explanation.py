import numpy as np

from tree_recourse import rules, utils
from tree_recourse.engine import Explanation

from .clauses import change_clause, keep_clause, features_of, parse_clause


__all__ = (
    'Explanation', 'explanation_clauses', 'render_explanation',
    'explanation_to_dict', 'parse_rule_text'
)


def explanation_clauses(explanation, schema):
    """
    Returns the change clauses and keep clauses of an explanation, one per
    feature in schema order.  A categorical feature is changed when any of its
    dimensions is.
    """
    changed = features_of(explanation.change_dims, schema)
    kept = [f for f in features_of(explanation.keep_dims, schema)
        if f not in changed]
    return (
        [change_clause(f, explanation.rule) for f in changed],
        [keep_clause(f, explanation.rule) for f in kept]
    )


def _format_instance(explanation, schema):
    decoded = schema.decode_row(explanation.instance)
    return ", ".join([
        f"{name}={_format_value(value)}" for name, value in decoded.items()])


def _format_value(value):
    if isinstance(value, str):
        return value
    return utils.format_number(value)


def render_explanation(explanation, schema):
    """
    Renders an explanation as text, one clause per line:

        Instance: age=35, status=single
        Target: {1}
        Rule R3 (metarule M1):
          change status to married
          while keeping age in (30, 51]
    """
    lines = [f"Instance: {_format_instance(explanation, schema)}"]
    if explanation.target is not None:
        lines.append(f"Target: {explanation.target.describe()}")
    if explanation.already_satisfied:
        lines.append("The instance already satisfies target "
            f"{explanation.target.describe()}.")
    lines.append(
        f"Rule {explanation.rule_id} (metarule {explanation.metarule_id}):")

    changes, keeps = explanation_clauses(explanation, schema)
    if not changes:
        lines.append("  already satisfies the rule, no change is needed")
    lines.extend([f"  {clause}" for clause in changes])
    lines.extend([f"  while {clause}" for clause in keeps])
    return "\n".join(lines)


def _json_value(value):
    if isinstance(value, str):
        return value
    return float(value)


def explanation_to_dict(explanation, schema):
    changes, keeps = explanation_clauses(explanation, schema)
    output = explanation.output
    if output is not None and not isinstance(output, str):
        output = output.item() if isinstance(output, np.generic) else output
    return {
        'instance': {
            name: _json_value(value)
            for name, value in schema.decode_row(explanation.instance).items()
        },
        'rule': explanation.rule_id,
        'metarule': explanation.metarule_id,
        'member': explanation.member,
        'target': explanation.target.describe()
        if explanation.target is not None else None,
        'output': output,
        'already_satisfied': bool(explanation.already_satisfied),
        'sparsity': explanation.sparsity,
        'changes': changes,
        'keeps': keeps,
        'bounds': explanation.rule.to_dict(),
    }


def parse_rule_text(text, schema):
    """
    Reads the bounds stated by the change and keep clauses of a rendered
    explanation back into a :obj:`Rule`.  Lines that are not clauses are
    ignored.
    """
    lower = np.full(schema.D, -np.inf)
    upper = np.full(schema.D, np.inf)
    for line in text.splitlines():
        line = line.strip()
        if line.startswith(("change ", "keeping ", "while keeping ")):
            parse_clause(line, schema, lower, upper)
    return rules.Rule(lower, upper)
