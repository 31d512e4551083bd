"""
Exception hierarchy for RMT-Lab

Each family maps to one CLI exit code: parameter problems exit with 2,
exhausted enumeration budgets with 3.
"""


class RMTLabError(Exception):
    """Base class for all library errors"""

    exit_code = 1


class ParameterError(RMTLabError, ValueError):
    """Invalid argument, dimension or configuration value"""

    exit_code = 2


class DomainError(ParameterError):
    """Argument outside the mathematical domain (e.g. Im z <= 0)"""


class ContractViolationError(ParameterError):
    """Input violates a structural contract (e.g. non-Hermitian matrix)"""


class InputError(ParameterError):
    """Malformed combinatorial input (cyclic graph, bad tableau, ...)"""


class BudgetExceededError(RMTLabError, RuntimeError):
    """An exhaustive enumeration would exceed its configured budget"""

    exit_code = 3


class ConvergenceError(RMTLabError, RuntimeError):
    """Iterative solver failed to converge"""

    def __init__(self, message: str, diagnostics: dict = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
