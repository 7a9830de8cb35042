"""Exception types shared across the package."""


class LoopfrontError(Exception):
    """Base class for all errors raised by loopfront."""


class NotInSu2(LoopfrontError, ValueError):
    pass


class NotUnitary(LoopfrontError, ValueError):
    pass


class SingularLoop(LoopfrontError, ArithmeticError):
    pass


class OutsideBigCell(LoopfrontError, ArithmeticError):
    """The block-Toeplitz Birkhoff system is singular at this loop."""


class DegenerateData(LoopfrontError, ValueError):
    pass


class ZeroTransverseDerivative(DegenerateData):
    pass


class SingularPoint(LoopfrontError, ValueError):
    pass


class FocalDistance(LoopfrontError, ValueError):
    pass


class Overflow(LoopfrontError, ArithmeticError):
    pass


class OrderTooLow(LoopfrontError, ValueError):
    pass


class NotOnCurve(LoopfrontError, ValueError):
    pass


class NotSingular(LoopfrontError, ValueError):
    pass


class WrongStratum(LoopfrontError, ValueError):
    pass
