"""Error taxonomy shared by all modules.

Every exception carries a stable machine-readable ``code`` so that the CLI
can emit structured error JSON and scripts can dispatch on it.
"""


class IntprobError(Exception):
    code = "internal-invariant"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class ValidationError(IntprobError):
    """Bad input: violated precondition, unusable parameter combination."""

    code = "validation"


class NonConvergenceError(IntprobError):
    """A quadrature/iteration failed to reach its tolerance."""

    code = "numeric-nonconvergence"


class BudgetError(IntprobError):
    """An enumeration or exact computation exceeded its configured cap."""

    code = "budget-exceeded"


class InvariantError(IntprobError):
    """An internal invariant (interlacing, mass balance, ...) was violated."""

    code = "internal-invariant"


EXIT_CODES = {
    "validation": 1,
    "numeric-nonconvergence": 2,
    "budget-exceeded": 3,
    "internal-invariant": 4,
}
