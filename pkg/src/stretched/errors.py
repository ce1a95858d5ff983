"""Exception hierarchy.

Input problems derive from ``ValueError`` so callers can treat them as bad
arguments; engine self-check failures derive from ``InternalInconsistency``.
"""


class StretchedError(Exception):
    pass


class InputError(StretchedError, ValueError):
    pass


class EmptyGenerators(InputError):
    pass


class NotCoprime(InputError):
    pass


class ExponentNotInSemigroup(InputError):
    pass


class ShiftNotInSemigroup(InputError):
    pass


class ParentMismatch(InputError):
    pass


class NotSubideal(InputError):
    pass


class UnitIdeal(InputError):
    pass


class ProfileMismatch(InputError):
    pass


class ConstraintViolation(InputError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InternalInconsistency(StretchedError):
    pass


class CapExceeded(InternalInconsistency):
    pass


class UnclassifiedCase(InternalInconsistency):
    pass
