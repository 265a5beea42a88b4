class PdtoolError(Exception):
    """Base class for every error raised by pdtool."""


class InvalidInput(PdtoolError, ValueError):
    """A precondition on the arguments was violated."""


class BudgetExceeded(PdtoolError):
    """A computation would exceed a configured size budget.

    ``required`` and ``allowed`` carry the offending quantity and the cap.
    """

    def __init__(self, what, required, allowed):
        self.what = what
        self.required = required
        self.allowed = allowed
        super().__init__(f"{what}: required {required}, allowed {allowed}")


class HypothesisViolated(InvalidInput):
    """A bound formula was evaluated outside the hypotheses under which it holds."""


class InconsistentCriteria(PdtoolError):
    """Two decision routes that must agree returned different answers (a defect)."""
