"""Error types raised by the engine.

Every failure mode a caller can provoke has its own class so the CLI can map
errors to exit codes and tests can assert on the exact condition.
"""


class EngineError(ArithmeticError):
    """Base class for all domain errors raised by this package."""


class NotANumber(EngineError):
    """A game form has a left option >= some right option."""


class NonPositive(EngineError):
    """An operation defined for positive arguments received x <= 0."""


class ZeroInput(EngineError):
    """An operation undefined at zero received zero."""


class NotMainOrdinal(EngineError):
    """A field parameter zeta must have the form w^(w^mu)."""


class PreconditionViolated(EngineError):
    """Arguments fail an ordering precondition such as 0 < x < y."""


class IrrationalLeadingRoot(EngineError):
    """The leading coefficient has no rational n-th root."""


class EvenDegree(EngineError):
    """Odd-degree root finding received an even-degree polynomial."""


class ZeroLeadingCoefficient(EngineError):
    """A polynomial's leading coefficient is zero."""


class NotInfinitesimal(EngineError):
    """A series argument must be infinitesimal (or zero)."""


class UnsupportedFinitePart(EngineError):
    """The finite part of an exponent must be an integer."""


class OutsideDomain(EngineError):
    """The argument lies outside the positivity classes X-, X0, X+."""


class InexactRealLog(EngineError):
    """The leading coefficient is not an exact integer power of the base."""


class UnsupportedAngle(EngineError):
    """The angle's finite part is not an exact fraction of a turn."""


class DivisionByZero(EngineError):
    """Complex division by zero."""


class RootOnCircleSuspected(EngineError):
    """Winding estimate unstable: a root may lie on the sample circle."""


class IndexOutOfRange(EngineError):
    """A sequence index is outside 0 < alpha < zeta (or not evaluable)."""


class UndecidableKind(EngineError):
    """The sequence falls outside the decidable symbolic fragment."""


class NoLowerBound(EngineError):
    """Quotient combination needs a verified positive lower bound."""


class NotCauchy(EngineError):
    """Section extraction requires a Cauchy (or monotone Omega-mode) input."""


class UnsupportedExpression(EngineError):
    """The continuity checker cannot evaluate this expression kind."""


class ParseError(ValueError):
    """Input text rejected by the grammar.

    Carries the character position and a short note of what was expected.
    """

    def __init__(self, pos, message):
        super().__init__(f"at column {pos + 1}: {message}")
        self.pos = pos
        self.message = message


class EvalError(EngineError):
    """An expression is well-formed but cannot be evaluated as typed."""
