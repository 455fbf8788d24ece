"""Exception types raised across milnorkit."""


class MilnorKitError(Exception):
    """Base class for every error raised deliberately by this package."""


class ParseError(MilnorKitError, ValueError):
    pass


class InvalidDiagram(MilnorKitError, ValueError):
    pass


class DegreeOverflow(MilnorKitError, ValueError):
    pass


class LengthOverflow(MilnorKitError, ValueError):
    pass


class NotAUnit(MilnorKitError, ArithmeticError):
    pass


class NonConvergence(MilnorKitError, RuntimeError):
    """Longitude reduction failed to stabilise; indicates a bug, not bad input."""


class ComponentMismatch(MilnorKitError, ValueError):
    pass


class HypothesisUnmet(MilnorKitError, ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotSurjective(MilnorKitError, ValueError):
    pass


class NotInKernel(MilnorKitError, ValueError):
    def __init__(self, message, image=None):
        super().__init__(message)
        self.image = image
