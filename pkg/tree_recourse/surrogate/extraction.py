from tree_recourse import rules


__all__ = ('node_rules', 'leaf_rules', 'extract_rules')


def node_rules(tree, D):
    """
    Yields `(node, rule)` for every node of the tree in depth first preorder,
    where the rule is the hyperrectangle of inputs routed to the node: going
    left tightens the upper bound of the split dimension and going right
    tightens its lower bound.
    """
    stack = [(tree, rules.Rule.universal(D))]
    while stack:
        node, rule = stack.pop()
        yield node, rule
        if not node.is_leaf:
            stack.append((node.right, rule.tighten(
                node.split_dim, lower=node.threshold)))
            stack.append((node.left, rule.tighten(
                node.split_dim, upper=node.threshold)))


def leaf_rules(tree, D):
    return [(node, rule) for node, rule in node_rules(tree, D)
        if node.is_leaf]


def extract_rules(surrogate, schema):
    """
    Returns one candidate rule per node of every tree of the surrogate,
    ordered by tree and then by preorder node index.  Every rule is
    simplified over the categorical groups of the schema.  Equal rules are
    not deduplicated.
    """
    candidates = []
    for tree in surrogate.trees:
        for _, rule in node_rules(tree, schema.D):
            candidates.append(rules.simplify(rule, schema))
    return candidates
