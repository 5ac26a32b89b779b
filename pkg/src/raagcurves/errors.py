"""Exception hierarchy.  Every error carries a short machine-readable ``code``."""


class RaagError(Exception):
    code = "error"


class InputError(RaagError, ValueError):
    code = "input"


class GraphFileError(InputError):
    code = "graph-file"


class DataError(RaagError):
    """Bundled or user data fails its validation suite."""

    code = "data"


class ValidationError(RaagError):
    """A structure violates its invariants; ``failures`` lists every violation."""

    code = "validation"

    def __init__(self, message: str, failures=()):
        self.failures = list(failures)
        if self.failures:
            message = message + ": " + "; ".join(self.failures)
        super().__init__(message)


class PreconditionError(RaagError):
    """A constructor precondition failed; ``witness`` is the counterexample."""

    code = "precondition"

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class NotFullError(PreconditionError):
    code = "not-full"


class ConditionStarError(PreconditionError):
    code = "condition-star"


class NotSurjectiveError(PreconditionError, InputError):
    code = "not-surjective"


class FiberNotCliqueError(PreconditionError):
    code = "fiber-not-clique"


class ObstructionError(RaagError):
    code = "obstruction"


class NoEmbeddingError(RaagError):
    code = "no-induced-embedding"


class OracleInconclusive(RaagError):
    code = "oracle-inconclusive"


class ConsistencyError(RaagError):
    """Internal certification failed; indicates contradictory input or a bug."""

    code = "consistency"
