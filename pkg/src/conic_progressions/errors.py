"""Exception hierarchy shared by the library and the CLI.

Every error carries a stable ``code`` (used in the CLI's JSON error object)
and the process ``exit_status`` the CLI should use when it surfaces it.
"""

from __future__ import annotations


class ConicAPError(ValueError):
    """Base class for every failure the package reports on purpose."""

    code = "error"
    exit_status = 1

    def to_payload(self) -> dict[str, str]:
        return {"code": self.code, "message": str(self)}


class InvalidInputError(ConicAPError):
    code = "invalid-input"
    exit_status = 2


class RadicandMismatchError(ConicAPError):
    code = "radicand-mismatch"


class FieldDivisionError(ConicAPError, ZeroDivisionError):
    code = "division-by-zero"


class NotOnCurveError(ConicAPError):
    code = "not-on-curve"


class SingularCurveError(ConicAPError):
    code = "singular-curve"


class NotOrderFourError(ConicAPError):
    code = "not-order-four"


class DegenerateConicError(ConicAPError):
    code = "degenerate-conic"


class DegenerateFiberError(ConicAPError):
    code = "degenerate-fiber"


class ImaginaryPointError(ConicAPError):
    code = "imaginary-point"


class IndeterminateError(ConicAPError):
    code = "indeterminate"


class ExcludedLocusError(ConicAPError):
    """A birational map was evaluated where its denominator vanishes."""

    code = "excluded-locus"


class ZeroDiscriminantError(ConicAPError):
    code = "disc-zero"


class FlatDiscriminantError(ConicAPError):
    code = "disc-derivative-zero"


class NonSquareDiscriminantError(ConicAPError):
    code = "disc-not-square"


class DegenerateModulusError(ConicAPError):
    code = "k-zero"


class TrivialProgressionError(ConicAPError):
    code = "trivial-progression"


class PoleError(ConicAPError):
    code = "pole"


class PointNotFoundError(ConicAPError):
    code = "point-not-found"


class SeriesPrecisionError(ConicAPError):
    code = "series-precision"
