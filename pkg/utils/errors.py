"""
Exception hierarchy shared by services and the CLI
"""


class VoigtError(Exception):
    """Base error; exit_code is what the CLI returns for it"""

    exit_code = 1


class DomainError(VoigtError, ValueError):
    """Input outside the domain an operation is defined on"""

    exit_code = 3


class ConvergenceError(VoigtError, RuntimeError):
    """Quadrature or optimizer stopped before reaching its target"""

    exit_code = 5

    def __init__(self, message, best=None, achieved=None, x=None, y=None):
        super().__init__(message)
        self.best = best
        self.achieved = achieved
        self.x = x
        self.y = y

    def at(self, x, y):
        """Return a copy tagged with the grid coordinates that failed"""
        message = f"{self.args[0]} (at x={x!r}, y={y!r})"
        return ConvergenceError(message, best=self.best, achieved=self.achieved, x=x, y=y)
