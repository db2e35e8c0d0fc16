"""Exception types shared across the package."""


class QAffineError(Exception):
    """Base class for all package errors."""


class DivisionByZero(QAffineError):
    """Division by the zero scalar."""


class DegenerateParameters(QAffineError):
    """A (u, v)-quantum number was requested with u == v."""


class IndexOutOfRange(QAffineError):
    """Binomial or sequence index outside its admissible range."""


class PoleAtPoint(QAffineError):
    """Numeric evaluation hit a zero denominator."""


class UnsupportedType(QAffineError):
    """Lie type or rank outside the supported tables."""


class TruncationOverflow(QAffineError):
    """A state left the configured Fock window."""


class ConfigError(QAffineError):
    """Invalid suite or CLI configuration."""


class ParseError(QAffineError):
    """Malformed scalar or expression text."""
