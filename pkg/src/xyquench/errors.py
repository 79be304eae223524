"""Exception types shared across the package.

The CLI maps each class onto a process exit code.
"""


class ConfigurationError(ValueError):
    """Invalid physical parameters or grid specification."""


class NumericalConsistencyError(ArithmeticError):
    """A quantity violated a physical identity beyond its roundoff budget."""


class ResourceError(RuntimeError):
    """The requested computation exceeds the supported size."""
