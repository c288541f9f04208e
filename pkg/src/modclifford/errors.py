"""Exception hierarchy.

Every error raised by the package derives from :class:`ModCliffordError`.
Input problems derive from :class:`InputError` (CLI exit code 1); failed
verifications of a stated theorem derive from :class:`PaperCheckFailure`
(CLI exit code 2).
"""


class ModCliffordError(Exception):
    pass


class InputError(ModCliffordError):
    pass


# field
class NotPrime(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class NoConwayPolynomialStored(InputError):
    pass


class OrderDoesNotDivide(InputError):
    pass


class ZeroElement(InputError):
    pass


class IncompatibleFields(InputError):
    pass


class FieldTooLarge(InputError):
    pass


# linalg
class ContextMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


# group
class BoundExceeded(InputError):
    pass


class SingularGenerator(InputError):
    pass


class NotASubgroup(InputError):
    pass


class NotNormal(InputError):
    pass


# rep
class NotAHomomorphism(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class DoesNotNormalize(InputError):
    pass


class GroupMismatch(InputError):
    pass


class QuotientMismatch(InputError):
    pass


class KOutOfRange(InputError):
    pass


class ROutOfRange(InputError):
    pass


# structure
class InconclusiveAfterBudget(ModCliffordError):
    pass


class NotAbsolutelyIrreducible(InputError):
    pass


class SplittingFieldNotFoundInLadder(ModCliffordError):
    pass


class NotIrreducible(InputError):
    pass


# clifford / brauer
class HypothesisViolation(InputError):
    pass


class NotSemisimple(ModCliffordError):
    pass


class ClosureStalled(ModCliffordError):
    pass


class PaperCheckFailure(ModCliffordError):
    def __init__(self, clause, detail=""):
        self.clause = clause
        self.detail = detail
        super().__init__(f"{clause}: {detail}" if detail else clause)


class OrbitMismatch(PaperCheckFailure):
    pass


class TableMismatch(PaperCheckFailure):
    pass
