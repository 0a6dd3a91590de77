"""Exception hierarchy for kite central configuration computations."""


class KiteError(ValueError):
    """Base class for domain errors (bad masses, shapes outside a region, ...)."""


class InvalidMasses(KiteError):
    pass


class NonPositiveGeometry(KiteError):
    pass


class DegenerateDistances(KiteError):
    pass


class UndefinedAtGon(KiteError):
    """Mass map evaluated at the 1+3-gon, where it has the form 0/0."""


class NonPositiveMass(KiteError):
    def __init__(self, component, value):
        self.component = component
        self.value = value
        super().__init__(f"mass {component} = {value!r} is not positive")


class InvalidSlope(KiteError):
    pass


class Collision(KiteError):
    pass


class ConvergenceFailure(KiteError):
    pass


class DegenerateBasis(KiteError):
    pass


class NotCentral(KiteError):
    pass


class EigenFailure(KiteError):
    pass


# eigensolver kernels raise this name; it is the same condition
NoConvergence = EigenFailure


class NoBracket(KiteError):
    pass


class BracketFailure(KiteError):
    pass


class SeedFailure(KiteError):
    pass
