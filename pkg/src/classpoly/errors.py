"""Exception types shared across the package."""


class ClasspolyError(Exception):
    """Base class for engine errors."""


class InputError(ClasspolyError):
    """Invalid datum, element, class specification, or CLI input."""


class PreconditionError(InputError):
    """An operation was called outside its stated domain."""


class ResourceLimitError(ClasspolyError):
    """A configured enumeration or recursion limit was exceeded.

    Raised explicitly; results are never silently truncated.
    """


class IntegrityError(ClasspolyError):
    """Persistent cache content conflicts with a recomputed value."""
