"""Exception taxonomy.

The CLI maps these onto its exit codes: schema/IO problems (exit 2) are kept
distinct from data/statistical failures (exit 1) and numerical failures
(exit 3).
"""


class DemoshockError(Exception):
    """Base class for all package errors."""


class SchemaError(DemoshockError):
    """Unreadable input or input violating a file schema (exit 2)."""


class DomainError(DemoshockError):
    """Precondition violation on otherwise well-formed data (exit 1)."""


class EmptyPanelError(DomainError):
    """A constructed panel came out empty (exit 1)."""


class DegenerateDemandError(DomainError):
    """Zero base-period implied demand for a county and housing type."""

    def __init__(self, county: str, housing_type: int):
        self.county = county
        self.housing_type = housing_type
        super().__init__(
            f"degenerate demand: county {county!r} has zero base-period implied "
            f"demand for housing type {housing_type}"
        )


class CollinearityError(DemoshockError):
    """Rank-deficient regressor matrix (exit 3)."""

    def __init__(self, columns: tuple[int, ...], names: tuple[str, ...] = ()):
        self.columns = columns
        self.names = names
        what = ", ".join(names) if names else ", ".join(str(c) for c in columns)
        super().__init__(f"rank-deficient design; offending column(s): {what}")


class ConvergenceError(DemoshockError):
    """Fixed-effect absorption failed to converge (exit 3)."""


class GuardError(DemoshockError):
    """An oracle was asked to handle an instance beyond its size guard."""
