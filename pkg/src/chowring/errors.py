"""Exception hierarchy shared by the engine and the CLI."""


class ChowError(Exception):
    """Base class for all engine errors."""


class InvalidInputError(ChowError, ValueError):
    pass


class UnsupportedRankError(ChowError, ValueError):
    pass


class AsymmetryError(ChowError, ValueError):
    pass


class SpaceMismatchError(ChowError, ValueError):
    pass


class DegreeError(ChowError, ValueError):
    """A class of the wrong codimension was passed where a specific one is needed."""


class RankError(ChowError, ValueError):
    pass


class IntegralityError(ChowError, ArithmeticError):
    """An exact solve that must be integral produced a fraction.

    This always means a bug or a convention error, never bad user input.
    """


class InvalidIncidenceError(InvalidInputError):
    pass


class InvalidWeightError(InvalidInputError):
    pass


class DivisibilityError(ChowError, ArithmeticError):
    pass
