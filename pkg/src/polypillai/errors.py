"""Exception types carrying machine-readable codes for the CLI."""


class PillaiError(ValueError):
    """Base error; ``code`` is the stable identifier emitted in JSON."""

    code = "error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DomainError(PillaiError):
    """Input lies outside the domain where the finiteness theorem applies."""

    code = "domain_error"


class DegenerateDegree(DomainError):
    code = "degenerate_degree"

    def __init__(self, which: str, t):
        super().__init__(f"{which} has degree < 1 at t = {t}")
        self.which = which
        self.t = t


ZERO_F_MESSAGE = (
    "f = 0 is excluded: there are infinitely many exponent/degree vectors, "
    "e.g. (n, m, p, q) = (3k, k, g, g^3) for every k >= 2 and non-constant g"
)
CONSTANT_F_MESSAGE = (
    "f is a nonzero constant: no solutions with non-constant p, q exist "
    "(solved by Kreso and Tichy); the degree bound needs deg f >= 1"
)


def check_nonconstant(f) -> None:
    """Reject ``f = 0`` and constant ``f`` with distinct error codes."""
    if f.is_zero():
        raise DomainError(ZERO_F_MESSAGE, "zero_f_remark1")
    if f.degree < 1:
        raise DomainError(CONSTANT_F_MESSAGE, "constant_f_remark1")
