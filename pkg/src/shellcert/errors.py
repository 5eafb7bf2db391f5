"""Exception hierarchy shared across the package."""


class ShellcertError(Exception):
    """Base class for all package-specific errors."""


class StructureError(ShellcertError):
    """A Drawing was assembled from inconsistent combinatorial data."""


class DocumentError(ShellcertError):
    """An interchange document is malformed or geometrically degenerate."""


class EmbeddingError(ShellcertError):
    """The rotation system does not describe a sphere embedding, or a
    side classification became inconsistent (corrupted input)."""


class CertificateMismatchError(ShellcertError):
    """A certificate references vertices or faces that do not exist in
    the drawing it is checked against."""


class GenerationError(ShellcertError):
    """A generator could not realize the requested drawing (bad scale,
    degenerate sampling, or a construction that failed its own checks)."""


class CapabilityError(ShellcertError):
    """The operation needs data the input does not carry, e.g. rendering
    or point location on a drawing without geometry."""
