"""Exception hierarchy shared by the parsers, checkers and translators."""

from __future__ import annotations


class PropkitError(Exception):
    """Base class for every error raised by propkit."""


class ParseError(PropkitError, ValueError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.reason = message
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at offset {position}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)


class ProofError(PropkitError):
    """A derivation failed to check.

    ``path`` lists premise indices from the root down to the offending node,
    so ``()`` is the root and ``(1, 0)`` is the first premise of the second
    premise.
    """

    def __init__(self, message: str, path: tuple[int, ...] = ()):
        self.path = tuple(path)
        self.message = message
        where = "root" if not path else "root." + ".".join(map(str, path))
        super().__init__(f"{where}: {message}")


class RuleMismatch(ProofError):
    pass


class BadArity(ProofError):
    pass


class BadIndex(ProofError):
    pass


class UnknownRule(ProofError):
    pass


class EmbeddingInvalid(PropkitError, ValueError):
    pass


class PreconditionViolated(PropkitError, ValueError):
    pass


class TooManyVariables(PropkitError, ValueError):
    pass


class SerializationError(PropkitError, ValueError):
    pass


class InternalSoundnessBreach(PropkitError, RuntimeError):
    """Raised when an invariant that the theory guarantees turns out false.

    Seeing this means there is a bug in propkit, not in the input.
    """
