"""Exception hierarchy.  Every error raised by the library derives from :class:`SchubQuivError`."""


class SchubQuivError(Exception):
    pass


class MalformedInput(SchubQuivError, ValueError):
    pass


class NotABijection(SchubQuivError, ValueError):
    pass


class IndexOutOfRange(SchubQuivError, ValueError):
    pass


class PatternTooLong(SchubQuivError, ValueError):
    pass


class WindowMismatch(SchubQuivError, ValueError):
    pass


class WindowTooSmall(SchubQuivError, ValueError):
    pass


class NTooSmall(SchubQuivError, ValueError):
    pass


class ShapeMismatch(SchubQuivError, ValueError):
    pass


class EntryExceedsAmbient(SchubQuivError, ValueError):
    pass


class LengthDecrease(SchubQuivError, ValueError):
    pass


class NotSmooth(SchubQuivError, ValueError):
    pass


class LetterOutOfRange(SchubQuivError, ValueError):
    pass


class NotCommuting(SchubQuivError, ValueError):
    pass


class NotABraid(SchubQuivError, ValueError):
    pass


class WordDoesNotEvaluateToW(SchubQuivError, ValueError):
    pass


class NotReduced(SchubQuivError, ValueError):
    pass


class NotCompatible(SchubQuivError, ValueError):
    pass


class NoSuchFreeVertex(SchubQuivError, RuntimeError):
    """Internal consistency failure of the vertex-assignment row rule."""


class BadSandwich(SchubQuivError, ValueError):
    pass


class BudgetExceeded(SchubQuivError, RuntimeError):
    pass
