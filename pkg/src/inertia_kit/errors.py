"""Exception hierarchy shared by the inertia_kit modules."""


class InertiaKitError(Exception):
    """Base class for all library errors."""


class NotRepresentable(InertiaKitError):
    """A point set cannot be written as a finite union of trapezoids."""


class EmptySet(InertiaKitError):
    """An operation that needs at least one point got an empty set."""


class InvalidSpec(InertiaKitError):
    """Family parameters violate the family's structural constraints."""


class TooSmall(InertiaKitError):
    """A vertex join operand has fewer than two vertices."""


class OutOfRange(InertiaKitError):
    """A vertex index is not a vertex of the graph."""


class Disconnected(InertiaKitError):
    """An operation that needs a connected graph got a disconnected one."""


class Unsupported(InertiaKitError):
    """No closed form is available for the requested family."""


class UnsupportedBlock(InertiaKitError):
    """The recursion engine met a block with no known base inertia."""

    def __init__(self, block_vertices, kind="Other"):
        self.block_vertices = tuple(block_vertices)
        self.kind = kind
        super().__init__(
            f"unsupported {kind} block on vertices {list(self.block_vertices)}"
        )


class NonSymmetric(InertiaKitError):
    """A realization matrix is not symmetric."""


class PatternViolation(InertiaKitError):
    """A realization's off-diagonal zero pattern does not match its graph."""


class TooLarge(InertiaKitError):
    """A graph is too large for brute-force realization enumeration."""


class ParseError(InertiaKitError):
    """Text input does not follow the expected grammar."""

    def __init__(self, message, line=1, col=1, expected=None):
        self.line = line
        self.col = col
        self.expected = expected
        where = f"line {line}, col {col}"
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(f"{where}: {message}")
