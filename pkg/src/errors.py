# Exceptions raised by the ImpLab modules


class ImpLabError(Exception):
    # Base class for every error this package raises on purpose
    pass


class GraphParseError(ImpLabError):
    # Malformed graph6 / adjacency-list / named-graph text

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class InvalidVertexError(ImpLabError, ValueError):
    pass


class NotChordalError(ImpLabError):
    # Carries a chordless cycle of length >= 4

    def __init__(self, cycle):
        super().__init__(f"graph is not chordal, chordless cycle {list(cycle)}")
        self.cycle = tuple(cycle)


class NotIntervalError(ImpLabError):
    # Carries the NonIntervalWitness produced by recognition

    def __init__(self, witness):
        super().__init__(f"graph is not an interval graph ({witness.kind}: {list(witness.vertices)})")
        self.witness = witness


class GuardExceededError(ImpLabError):

    def __init__(self, what: str, limit: int, value: int):
        super().__init__(f"{what}: {value} exceeds the size guard {limit} (use --guard-override)")
        self.limit = limit
        self.value = value


class PreconditionError(ImpLabError):
    pass


class SpecError(ImpLabError, ValueError):
    # Invalid BAL construction spec
    pass


class InvalidModelError(ImpLabError, ValueError):
    pass
