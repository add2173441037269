"""Exception types shared across the package."""


class PtracError(Exception):
    """Base class for all validation errors raised by this package."""


class InventoryError(PtracError):
    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class TokenizeError(PtracError):
    def __init__(self, message, offset=None, fragment=None):
        super().__init__(message)
        self.offset = offset
        self.fragment = fragment


class LexiconError(PtracError):
    pass


class SyllabifyError(PtracError):
    """Raised for phoneme sequences that admit no legal syllabification.

    ``reason`` is one of: "initial-vowel", "onset-cluster", "vowel-hiatus",
    "coda-too-long", "no-nucleus".
    """

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason


class StudyError(PtracError):
    pass
