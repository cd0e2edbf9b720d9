"""Exception hierarchy shared by all kcircular modules."""


class KCircularError(Exception):
    """Base class for every error raised by this package."""


class InputError(KCircularError, ValueError):
    """Malformed input: unknown identifiers, bad arguments, parse failures."""


class UnknownEdge(InputError):
    pass


class DuplicateId(InputError):
    pass


class DanglingEndpoint(InputError):
    pass


class IsolatedVertex(InputError):
    pass


class EdgeSetMismatch(InputError):
    pass


class GraphParseError(InputError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class PreconditionViolated(KCircularError):
    pass


class KernelUndefined(PreconditionViolated):
    pass


class CoreUndefined(PreconditionViolated):
    pass


class NotABicycle(PreconditionViolated):
    pass


class TrivialMatroid(PreconditionViolated):
    pass


class NotConnected(PreconditionViolated):
    pass


class NotABase(PreconditionViolated):
    pass


class EdgeInBase(PreconditionViolated):
    pass


class EdgeNotInBase(PreconditionViolated):
    pass


class KMustBeAtLeast2(PreconditionViolated):
    pass


class KOutOfRange(PreconditionViolated):
    pass


class NotSameComponent(PreconditionViolated):
    pass


class NotCacti(PreconditionViolated):
    pass


class NoExtensionExists(KCircularError):
    """No single ear turns the given circuit into a circuit one level up."""


class EnumerationLimitExceeded(KCircularError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"{size} edges exceeds the enumeration limit of {limit}")
        self.size = size
        self.limit = limit
