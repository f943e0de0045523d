"""
Exceptions raised by doodlinv.

ValidationError subclasses describe bad input and map to CLI exit code 1.
InternalInconsistency subclasses describe broken internal invariants and map to exit code 2.
"""


class DoodleError(Exception):
    exit_code = 1


class ValidationError(DoodleError):
    exit_code = 1


class InternalInconsistency(DoodleError):
    exit_code = 2


class UnrealizableCode(ValidationError):
    pass


class DuplicateVisit(ValidationError):
    pass


class MissingVisit(ValidationError):
    pass


class NonGeneric(ValidationError):
    pass


class UnknownCrossing(ValidationError):
    pass


class SiteVanished(ValidationError):
    pass


class BranchNotAdjacent(ValidationError):
    pass


class IllegalCollision(ValidationError):
    pass


class UnsupportedArity(ValidationError):
    pass


class AmbiguousSide(ValidationError):
    pass


class NotAComplex(InternalInconsistency):
    pass


class SymbolInconsistent(InternalInconsistency):
    pass


class WallSignMismatch(InternalInconsistency):
    pass
