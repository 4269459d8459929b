"""Exception hierarchy shared by the library and the CLI."""


class BicatError(Exception):
    """Base class for all library errors."""


class StructuralError(BicatError):
    """Malformed input tables: a referenced identifier is missing, a key is
    defined where it must not be, or a declaration is duplicated."""


class BoundaryError(BicatError):
    """Cells whose sources/targets do not line up."""


class LawError(BicatError):
    """A construction was asked to produce a value that violates its laws."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BoundExceeded(BicatError):
    """An enumeration would exceed the configured size bound."""


class NotEnumerable(BicatError):
    """A hom-set of a bicategory cannot be enumerated."""


class MissingWitness(BicatError):
    """A universal-property witness required by a construction was not found."""


class InputError(BicatError):
    """A workspace file could not be loaded; ``path`` locates the offending entry."""

    def __init__(self, message, path=None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path


class WorkspaceSyntaxError(InputError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


class UnresolvedName(InputError):
    def __init__(self, name, path=None, kind="name"):
        super().__init__(f"unresolved {kind} {name!r}", path)
        self.name = name


class StructuralViolation(InputError):
    """A declaration is duplicated or fails its structural validation."""
