"""Exception types raised across the package."""


class SizeMismatchError(ValueError):
    """Two transformations live on chains of different sizes."""


class EmptyKernelError(ValueError):
    """Kernel requested for the empty transformation."""


class ResourceGuardError(RuntimeError):
    """A computation would exceed a configured size cap."""


class RelationFileError(ValueError):
    """A relation file could not be parsed."""
