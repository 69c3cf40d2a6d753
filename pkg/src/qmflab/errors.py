"""Exception hierarchy shared across the package."""


class QmflabError(Exception):
    """Base class for all package-specific errors."""


class InvalidModelError(QmflabError, ValueError):
    """Model parameters violate a builder precondition (e.g. w >= s)."""


class DimensionMismatchError(QmflabError, ValueError):
    """Operators or states with incompatible dimensions were combined."""


class NumericalIntegrityError(QmflabError, ArithmeticError):
    """A quantity that must be real/hermitian/normalized drifted beyond tolerance."""


class IntegrationError(QmflabError, RuntimeError):
    """A trajectory violated a conservation tolerance; try a smaller time step."""


class TruncationError(QmflabError, RuntimeError):
    """Population reached the truncated edge of the basis; enlarge the basis."""


class SeparatrixError(QmflabError, ValueError):
    """Pendulum period requested at (or below) the separatrix energy."""


class DiagnosticsError(QmflabError, RuntimeError):
    """An internal consistency check failed (e.g. non-monotone bound-state count)."""


class ConfigError(QmflabError, ValueError):
    """A run configuration file is malformed; message names the offending field."""
