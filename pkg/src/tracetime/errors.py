"""Exception types shared across the package."""


class TraceTimeError(Exception):
    """Base class for every error raised by this package."""


class DuplicateLetter(TraceTimeError):
    """A letter was declared more than once in an alphabet."""


class ReflexivePair(TraceTimeError):
    """An independence pair relates a letter to itself."""


class UnknownLetter(TraceTimeError):
    """A letter does not belong to the alphabet in use."""


class AlphabetMismatch(TraceTimeError):
    """Two traces built over different alphabets were combined."""


class UnknownState(TraceTimeError):
    """A state name is not declared by the system."""


class UnknownPlace(TraceTimeError):
    """A place name is not declared by the net."""


class UnknownTransition(TraceTimeError):
    """A transition name is not declared by the net."""


class NondeterministicTransition(TraceTimeError):
    """A (state, letter) pair has more than one target; stepping through it
    is refused rather than silently picking one."""


class MissingDuration(TraceTimeError):
    """The time function does not cover a letter it is asked about."""


class InvalidDuration(TraceTimeError):
    """A duration is not a positive integer (zero-tick instructions are
    rejected: they would erase the instruction's effect on the state)."""


class UndefinedCompletion(TraceTimeError):
    """A completed in-flight instruction cannot be absorbed by the base
    state; the timed state was built over an invalid system or corrupted."""


class StateBudgetExceeded(TraceTimeError):
    """An exploration hit its max-states bound before resolving."""


class TargetNotReached(TraceTimeError):
    """Schedule reconstruction was asked for a vertex the search never saw."""


class SystemFileError(TraceTimeError):
    """A system-definition document is malformed.  ``path`` points at the
    offending member, dotted from the document root."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
