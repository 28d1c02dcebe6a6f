"""Domain types, identifiers, and validation for demographic and housing data.

All containers are immutable after construction (arrays are marked
read-only), so they are safe for unrestricted concurrent reads.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, SchemaError

N_AGE_GROUPS = 14
N_HOUSING_TYPES = 5
HOUSING_TYPES = (1, 2, 3, 4, 5)  # 5 encodes the open-ended "5+" bucket

SHARE_SUM_TOL = 1e-9


def age_group_label(index: int) -> str:
    """Label for a 5-year census age bin: 1 -> '20-24', ..., 14 -> '85+'."""
    AgeGroup(index)
    if index == N_AGE_GROUPS:
        return "85+"
    lo = 15 + 5 * index
    return f"{lo}-{lo + 4}"


def housing_type_label(bedrooms: int) -> str:
    """Label for a bedroom-count bucket: 1..4 -> '1BR'..'4BR', 5 -> '5+BR'."""
    HousingType(bedrooms)
    return "5+BR" if bedrooms == 5 else f"{bedrooms}BR"


@dataclass(frozen=True)
class AgeGroup:
    """One of the 14 5-year census age bins, 20-24 through 85+."""

    index: int

    def __post_init__(self):
        if not 1 <= self.index <= N_AGE_GROUPS:
            raise DomainError(f"age group index must be in 1..{N_AGE_GROUPS}, got {self.index}")


@dataclass(frozen=True)
class HousingType:
    """Bedroom-count bucket; 5 is the single open-ended 5+ category."""

    bedrooms: int

    def __post_init__(self):
        if self.bedrooms not in HOUSING_TYPES:
            raise DomainError(f"housing type must be one of {HOUSING_TYPES}, got {self.bedrooms}")


class GeoId(NamedTuple):
    """Nested geography: a zip belongs to one county, a county to one state."""

    zip: str
    county: str
    state: str


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PreferenceMatrix:
    """Base-year shares of each age group choosing each housing type.

    ``shares`` has shape (14, 5): row a is age group a+1, column b is housing
    type b+1. Rows are distributions over owner-occupied housing types. Shape
    is enforced here; validity of the entries is reported by
    :func:`validate_inputs`.
    """

    shares: np.ndarray

    def __post_init__(self):
        shares = _freeze(self.shares)
        if shares.shape != (N_AGE_GROUPS, N_HOUSING_TYPES):
            raise SchemaError(
                f"preference matrix must be {N_AGE_GROUPS}x{N_HOUSING_TYPES}, "
                f"got {shares.shape}"
            )
        object.__setattr__(self, "shares", shares)


@dataclass(frozen=True)
class PopulationPanel:
    """Per-county, per-period counts for the 14 age groups.

    ``counts`` has shape (n_counties, n_periods, 14). Counts are reals to
    accommodate survey weighting. A missing (county, period) observation is a
    row of NaNs; partially missing age groups are rejected at load time.
    """

    counties: tuple[str, ...]
    states: tuple[str, ...]
    periods: tuple[int, ...]
    counts: np.ndarray

    def __post_init__(self):
        counts = _freeze(self.counts)
        expected = (len(self.counties), len(self.periods), N_AGE_GROUPS)
        if counts.shape != expected:
            raise SchemaError(f"population counts must have shape {expected}, got {counts.shape}")
        if len(self.states) != len(self.counties):
            raise SchemaError("one state per county required")
        if len(set(self.counties)) != len(self.counties):
            raise SchemaError("duplicate county ids")
        if list(self.periods) != sorted(set(self.periods)):
            raise SchemaError("periods must be strictly increasing")
        object.__setattr__(self, "counts", counts)

    def period_index(self, period: int) -> int:
        try:
            return self.periods.index(period)
        except ValueError:
            raise DomainError(f"period {period} not in population panel") from None

    def county_index(self, county: str) -> int:
        try:
            return self.counties.index(county)
        except ValueError:
            raise DomainError(f"county {county!r} not in population panel") from None


@dataclass(frozen=True)
class StockShares:
    """Per-zip distribution of the housing stock over bedroom types.

    ``shares`` has shape (n_zips, 5); ``counties[i]`` is the county of
    ``zips[i]``.
    """

    zips: tuple[str, ...]
    counties: tuple[str, ...]
    shares: np.ndarray

    def __post_init__(self):
        shares = _freeze(self.shares)
        if shares.shape != (len(self.zips), N_HOUSING_TYPES):
            raise SchemaError(
                f"stock shares must have shape ({len(self.zips)}, {N_HOUSING_TYPES}), "
                f"got {shares.shape}"
            )
        if len(self.counties) != len(self.zips):
            raise SchemaError("one county per zip required")
        if len(set(self.zips)) != len(self.zips):
            raise SchemaError("duplicate zip ids")
        object.__setattr__(self, "shares", shares)


@dataclass(frozen=True)
class OutcomePanel:
    """Per-zip, per-period outcome index levels plus optional control columns.

    Each variable maps to an (n_zips, n_periods) array with NaN for missing
    values. Index levels feed geometric growth rates; control columns are
    arbitrary numeric series differenced over the regression interval.
    """

    zips: tuple[str, ...]
    counties: tuple[str, ...]
    states: tuple[str, ...]
    periods: tuple[int, ...]
    variables: dict[str, np.ndarray]

    def __post_init__(self):
        if not (len(self.counties) == len(self.states) == len(self.zips)):
            raise SchemaError("one county and state per zip required")
        if len(set(self.zips)) != len(self.zips):
            raise SchemaError("duplicate zip ids")
        if list(self.periods) != sorted(set(self.periods)):
            raise SchemaError("periods must be strictly increasing")
        frozen = {}
        for name, arr in self.variables.items():
            arr = _freeze(arr)
            if arr.shape != (len(self.zips), len(self.periods)):
                raise SchemaError(
                    f"variable {name!r} must have shape ({len(self.zips)}, "
                    f"{len(self.periods)}), got {arr.shape}"
                )
            frozen[name] = arr
        object.__setattr__(self, "variables", frozen)

    def period_index(self, period: int) -> int:
        try:
            return self.periods.index(period)
        except ValueError:
            raise DomainError(f"period {period} not in outcome panel") from None


def annualized_growth(start_level: float, end_level: float, years: float) -> float:
    """Geometric per-year growth in percent implied by two index levels.

    Returns ``100 * ((end/start)**(1/years) - 1)``. Annualization is
    compound, which is exact for index data over multi-year intervals.
    """
    if not (start_level > 0 and end_level > 0):
        raise DomainError(
            f"index levels must be positive, got start={start_level}, end={end_level}"
        )
    if not years > 0:
        raise DomainError(f"years must be positive, got {years}")
    return 100.0 * ((end_level / start_level) ** (1.0 / years) - 1.0)


class Violation(NamedTuple):
    """A single invariant violation (or warning) with its data location."""

    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_inputs`; inputs pass iff no violations."""

    violations: tuple[Violation, ...] = ()
    warnings: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"location": v.location, "message": v.message} for v in self.violations],
            "warnings": [{"location": v.location, "message": v.message} for v in self.warnings],
        }


def validate_inputs(
    pref: PreferenceMatrix,
    pop: PopulationPanel,
    stock: StockShares,
    outcomes: OutcomePanel,
    outcome_vars: tuple[str, ...] = (),
) -> ValidationReport:
    """Check every domain invariant and cross-reference the inputs.

    Violations break the invariants above; coverage mismatches (zips in stock
    but not in outcomes and vice versa, counties without population data) are
    warnings. ``outcome_vars`` names the columns that will be used as index
    levels; nonpositive values there are violations. Validation is pure and
    idempotent.
    """
    violations: list[Violation] = []
    warnings: list[Violation] = []

    for a in range(N_AGE_GROUPS):
        row = pref.shares[a]
        for b in range(N_HOUSING_TYPES):
            if row[b] < 0:
                violations.append(
                    Violation(f"preferences[age={a + 1}][type={b + 1}]", f"share {row[b]} < 0")
                )
        total = float(row.sum())
        if abs(total - 1.0) > SHARE_SUM_TOL:
            violations.append(Violation(f"preferences[age={a + 1}]", f"row sum {total:g} ≠ 1"))

    for ci, county in enumerate(pop.counties):
        for ti, period in enumerate(pop.periods):
            row = pop.counts[ci, ti]
            if np.isnan(row).all():
                continue  # missing observation, handled as coverage at build time
            for a in range(N_AGE_GROUPS):
                if row[a] < 0:
                    violations.append(
                        Violation(
                            f"population[county={county}][period={period}][age={a + 1}]",
                            f"count {row[a]:g} < 0",
                        )
                    )
            if not (row > 0).any():
                violations.append(
                    Violation(
                        f"population[county={county}][period={period}]",
                        "all age-group counts are zero",
                    )
                )

    for zi, zip_id in enumerate(stock.zips):
        row = stock.shares[zi]
        for b in range(N_HOUSING_TYPES):
            if row[b] < 0:
                violations.append(
                    Violation(f"stock[zip={zip_id}][type={b + 1}]", f"share {row[b]} < 0")
                )
        total = float(row.sum())
        if abs(total - 1.0) > SHARE_SUM_TOL:
            violations.append(Violation(f"stock[zip={zip_id}]", f"row sum {total:g} ≠ 1"))

    for name in outcome_vars:
        if name not in outcomes.variables:
            violations.append(Violation(f"outcomes[{name}]", "outcome variable not present"))
            continue
        values = outcomes.variables[name]
        bad = np.argwhere(~np.isnan(values) & (values <= 0))
        for zi, ti in bad:
            violations.append(
                Violation(
                    f"outcomes[{name}][zip={outcomes.zips[zi]}][period={outcomes.periods[ti]}]",
                    f"index level {values[zi, ti]:g} not strictly positive",
                )
            )

    # Geography: each zip must map to one county, each county to one state.
    county_of = dict(zip(stock.zips, stock.counties))
    for zi, zip_id in enumerate(outcomes.zips):
        known = county_of.get(zip_id)
        if known is not None and known != outcomes.counties[zi]:
            violations.append(
                Violation(
                    f"geography[zip={zip_id}]",
                    f"county {outcomes.counties[zi]!r} in outcomes but {known!r} in stock",
                )
            )
    state_of = dict(zip(pop.counties, pop.states))
    for zi, county in enumerate(outcomes.counties):
        known = state_of.get(county)
        if known is not None and known != outcomes.states[zi]:
            violations.append(
                Violation(
                    f"geography[county={county}]",
                    f"state {outcomes.states[zi]!r} in outcomes but {known!r} in population",
                )
            )

    stock_zips = set(stock.zips)
    outcome_zips = set(outcomes.zips)
    for zip_id in sorted(stock_zips - outcome_zips):
        warnings.append(Violation(f"coverage[zip={zip_id}]", "in stock but absent from outcomes"))
    for zip_id in sorted(outcome_zips - stock_zips):
        warnings.append(Violation(f"coverage[zip={zip_id}]", "in outcomes but absent from stock"))
    pop_counties = set(pop.counties)
    for county in sorted(set(stock.counties) - pop_counties):
        warnings.append(
            Violation(f"coverage[county={county}]", "in stock but absent from population panel")
        )

    return ValidationReport(tuple(violations), tuple(warnings))
