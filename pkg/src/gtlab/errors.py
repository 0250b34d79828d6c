"""Exception types raised across the package."""


class GTLabError(Exception):
    """Base class for every error raised by gtlab."""


class UnknownLabel(GTLabError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown point label {self.name!r}"


class DuplicateLabel(GTLabError, ValueError):
    def __init__(self, name):
        super().__init__(f"point label {name!r} given more than once")
        self.name = name


class MissingEmptySet(GTLabError, ValueError):
    def __init__(self):
        super().__init__("the empty set is not among the open sets")


class NotUnionClosed(GTLabError, ValueError):
    """Two open sets whose union is not open.

    ``pair`` holds the two masks; ``labels`` holds them as label lists when
    the raiser knew the ground set.
    """

    def __init__(self, pair, labels=None):
        self.pair = pair
        self.labels = labels
        shown = labels if labels is not None else pair
        super().__init__(f"union of {shown[0]} and {shown[1]} is not open")


class DuplicateSet(GTLabError, ValueError):
    pass


class SpaceSyntaxError(GTLabError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class DefinitionMismatch(GTLabError):
    """Two readings of one definition disagree on a concrete subset."""


class NotOpen(GTLabError, ValueError):
    pass


class InvariantViolation(GTLabError):
    def __init__(self, implication, subset):
        super().__init__(f"implication {implication} fails on subset {subset}")
        self.implication = implication
        self.subset = subset


class RouteMismatch(GTLabError):
    def __init__(self, axiom, routes):
        shown = ", ".join(f"{k}={v}" for k, v in routes)
        super().__init__(f"routes for {axiom} disagree: {shown}")
        self.axiom = axiom
        self.routes = routes


class ImplicationViolation(GTLabError):
    def __init__(self, theorem, witness):
        super().__init__(f"{theorem} violated: {witness}")
        self.theorem = theorem
        self.witness = witness


class GroundSetMismatch(GTLabError, ValueError):
    pass


class NotBijective(GTLabError, ValueError):
    pass


class GroundSetTooLarge(GTLabError, ValueError):
    pass


class TooLarge(GTLabError, ValueError):
    pass


class UnknownPredicate(GTLabError, KeyError):
    def __str__(self):
        return f"unknown predicate {self.args[0]!r}"
