"""Exception types raised across the package."""


class FamilyError(ValueError):
    """Base class for invalid input to a family operation."""


class EmptySetPresent(FamilyError):
    pass


class UniverseMissing(FamilyError):
    pass


class MaskOutOfRange(FamilyError):
    pass


class UniverseTooLarge(FamilyError):
    pass


class UniverseTooSmall(FamilyError):
    pass


class NotUnionClosed(FamilyError):
    pass


class NotAMember(FamilyError):
    pass


class NotSubfamily(FamilyError):
    pass


class GeneratorNotMember(FamilyError):
    pass


class EmptyGeneratorList(FamilyError):
    pass


class NotOneDense(FamilyError):
    pass


class FamilyTooLarge(FamilyError):
    pass


class LevelOutOfRange(FamilyError):
    pass


class PreconditionViolated(FamilyError):
    pass


class NoFamilyWithDensity(FamilyError):
    pass


class ParseError(FamilyError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CriterionMismatch(RuntimeError):
    """Two independent routes to the same answer disagreed (a bug, not bad input)."""


class DisagreementFound(AssertionError):
    """A predicted closure membership did not match the computed one."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
