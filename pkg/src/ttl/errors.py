"""Exception types shared by every module.

Each class carries the process exit code the CLI maps it to:
2 for usage and parse problems, 3 for guards and size bounds,
4 for certification failures.
"""


class TTLError(Exception):
    exit_code = 2


# usage / inconsistent parameters (exit 2)
class ZeroPolynomial(TTLError):
    pass


class NotSquarefree(TTLError):
    pass


class NonMonic(TTLError):
    pass


class NonIntegerCoefficients(TTLError):
    pass


class CompositeModulus(TTLError):
    pass


class LeadingCoefficientVanishesModP(TTLError):
    pass


class ModuliNotCoprime(TTLError):
    pass


class BadModulus(TTLError):
    pass


class NotClosed(TTLError):
    pass


class BadParameter(TTLError):
    pass


class EqualEigenvalues(BadParameter):
    pass


class EmptySignature(TTLError):
    pass


class BadDimension(TTLError):
    pass


class InconsistentSignature(TTLError):
    pass


class WrongPointCount(TTLError):
    pass


class NotTransitive(TTLError):
    pass


class RankOutOfRange(TTLError):
    pass


class BadRank(TTLError):
    pass


class ParseError(TTLError):
    def __init__(self, position, expectation, text=""):
        self.position = position
        self.expectation = expectation
        self.text = text
        msg = f"at position {position}: expected {expectation}"
        if text:
            msg += f"\n  {text}\n  {' ' * position}^"
        super().__init__(msg)


# guards and bounds (exit 3)
class DegreeBoundExceeded(TTLError):
    exit_code = 3


class OrderBoundExceeded(TTLError):
    exit_code = 3


class PowerGuard(TTLError):
    exit_code = 3


# certification failures (exit 4)
class CollisionDetected(TTLError):
    exit_code = 4


class DegenerateTransform(TTLError):
    exit_code = 4


class ResolventCollisionUnresolved(TTLError):
    exit_code = 4


class ReduciblePolynomial(TTLError):
    exit_code = 4

    def __init__(self, message, factors=()):
        super().__init__(message)
        self.factors = list(factors)


class SynthesisExhausted(TTLError):
    exit_code = 4


class VerificationFailed(TTLError):
    exit_code = 4
