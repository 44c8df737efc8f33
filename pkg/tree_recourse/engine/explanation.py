import numpy as np


__all__ = ('Explanation', )


class Explanation:
    """
    The counterfactual rule returned for one input along with the metarule
    it was found in.

    The change dimensions are the dimensions of the rule the input violates,
    the keep dimensions are the remaining dimensions the rule bounds.  An
    input whose output already belongs to the target is flagged
    `already_satisfied`.
    """
    def __init__(self, instance, rule, rule_index, metarule, metarule_index,
            change_dims, keep_dims, target=None, output=None,
            already_satisfied=False, member=None):
        self._instance = np.asarray(instance, dtype=float)
        self._rule = rule
        self._rule_index = int(rule_index)
        self._metarule = metarule
        self._metarule_index = int(metarule_index)
        self._change_dims = tuple(change_dims)
        self._keep_dims = tuple(keep_dims)
        self._target = target
        self._output = output
        self._already_satisfied = already_satisfied
        self._member = member

    def __repr__(self):
        return (
            f"<Explanation {self.rule_id} in {self.metarule_id} "
            f"changes={list(self._change_dims)}>"
        )

    @property
    def instance(self):
        return self._instance

    @property
    def rule(self):
        return self._rule

    @property
    def rule_index(self):
        return self._rule_index

    @property
    def rule_id(self):
        prefix = f"{self._member}/" if self._member is not None else ""
        return f"{prefix}R{self._rule_index}"

    @property
    def metarule(self):
        return self._metarule

    @property
    def metarule_index(self):
        return self._metarule_index

    @property
    def metarule_id(self):
        prefix = f"{self._member}/" if self._member is not None else ""
        return f"{prefix}M{self._metarule_index}"

    @property
    def change_dims(self):
        return self._change_dims

    @property
    def keep_dims(self):
        return self._keep_dims

    @property
    def sparsity(self):
        return len(self._change_dims)

    @property
    def target(self):
        return self._target

    @property
    def output(self):
        return self._output

    @property
    def already_satisfied(self):
        return self._already_satisfied

    @property
    def member(self):
        """
        The member of a model set that answered, None for a single model.
        """
        return self._member
