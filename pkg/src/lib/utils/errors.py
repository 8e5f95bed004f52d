"""
Exception types shared by every surplus-lab package.

The CLI maps these onto its exit-code contract:
    2 - GraphFormatError, GeneratorError, ParameterError, ConfigError, OracleSizeError
    3 - InapplicableAlgorithmError
    4 - InvariantViolation
"""


class SurplusLabError(Exception):
    """Base class for all library errors."""


class ConfigError(SurplusLabError, ValueError):
    """Invalid value in the environment / .env.local configuration."""


class GraphFormatError(SurplusLabError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GraphError(SurplusLabError, ValueError):
    """Invalid graph or invalid graph operation (self-loop, u == v, ...)."""


class WalkCountOverflow(SurplusLabError, ArithmeticError):
    """Walk count left the signed 64-bit range."""


class GeneratorError(SurplusLabError, ValueError):
    """Invalid generator family parameters."""


class OracleSizeError(SurplusLabError, ValueError):
    """Graph too large for the exact oracle."""


class ParameterError(SurplusLabError, ValueError):
    """A parameter inequality does not hold; the message names it."""


class VectorError(SurplusLabError, ValueError):
    """Malformed vector assignment (zero vector, non-finite entry, bad cosine)."""


class SpectralError(SurplusLabError, ArithmeticError):
    """Eigenvalue computation impossible or not converged."""


class InapplicableAlgorithmError(SurplusLabError):
    """Algorithm precondition not met by the input graph."""


class InvariantViolation(SurplusLabError, AssertionError):
    """A runtime-checked guarantee failed."""
