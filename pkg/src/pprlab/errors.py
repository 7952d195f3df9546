"""Exception types raised across the package."""


class PprlabError(Exception):
    """Base class for all package-specific errors."""


class ZeroVolume(PprlabError):
    """Conductance requested for a set whose side has zero volume."""


class ZeroNorm(PprlabError):
    """Relative error requested against a zero-norm reference vector."""


class NotConverged(PprlabError):
    """Iterative solver failed to reach its tolerance within max_iter."""


class SizeGuard(PprlabError):
    """Input exceeds the size limit of a dense or iteration-bound routine."""


class DanglingSeed(PprlabError):
    """A restart seed has degree zero; push cannot spread its residual."""


class DanglingNode(PprlabError):
    """Operation requires every node to have degree >= 1."""


class DegenerateModel(PprlabError):
    """Mean-field model parameters give a zero expected degree."""


class SingularSystem(PprlabError):
    """The 3x3 mean-field linear system is numerically singular."""


class InvalidShape(PprlabError):
    """Model shape outside the valid domain (e.g. density ratio <= 1)."""


class OutOfRange(PprlabError):
    """Parameter outside its documented range."""


class EmptySupport(PprlabError):
    """Sweep requested over an all-zero score vector."""


class BudgetExceeded(PprlabError):
    """Push operation count exceeded the configured budget."""


class UnknownPreset(PprlabError):
    """Experiment preset name is not registered."""
