"""Exception hierarchy shared by every module."""


class PancyclicError(Exception):
    """Base class for all library errors."""


class ParseError(PancyclicError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GenerationFailure(PancyclicError):
    def __init__(self, message, trials, stats=None):
        self.trials = trials
        self.stats = dict(stats or {})
        super().__init__(f"{message} (after {trials} trials)")


class PreconditionError(PancyclicError):
    """A documented precondition does not hold; ``condition`` names it."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        msg = f"precondition violated: {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class FanDeficit(PancyclicError):
    def __init__(self, wanted, achieved):
        self.wanted = wanted
        self.achieved = achieved
        super().__init__(f"requested {wanted} disjoint paths, max-flow gives {achieved}")


class GrowthStuck(PancyclicError):
    def __init__(self, step, detail=""):
        self.step = step
        super().__init__(f"greedy growth stuck at step {step}" + (f": {detail}" if detail else ""))


class NoAugmentingEdge(PancyclicError):
    pass


class WindowEmpty(PancyclicError):
    def __init__(self, window, detail=""):
        self.window = tuple(window)
        super().__init__(f"no rewiring lands in window {self.window}" + (f": {detail}" if detail else ""))


class NoSpliceFound(PancyclicError):
    pass


class DisjointnessViolation(PancyclicError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"segments clash at vertex {vertex}")


class SizeCapError(PancyclicError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"n={n} exceeds the exhaustive-search cap {cap}")


class MatchingDeficit(PancyclicError):
    def __init__(self, vertex, size, needed):
        self.vertex = vertex
        super().__init__(f"N({vertex}) holds a matching of size {size} < {needed}")


class NotFound(PancyclicError):
    def __init__(self, message, exhaustive=False):
        self.exhaustive = exhaustive
        super().__init__(message)
