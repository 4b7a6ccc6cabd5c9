"""Exception types shared across the package."""


class DroughtcapError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(DroughtcapError, ValueError):
    """Input outside the validity range of a correlation."""


class NoConvergence(DroughtcapError, ArithmeticError):
    """Iterative solve failed to converge within its iteration cap."""


class NegativeFlow(DroughtcapError, ValueError):
    """Streamflow must be non-negative."""


class NegativeIrradiance(DroughtcapError, ValueError):
    """Irradiance must be non-negative."""


class NonpositiveIrradiance(DroughtcapError, ValueError):
    """Relative efficiency is undefined at zero or negative irradiance."""


class UnknownCurve(DroughtcapError, KeyError):
    """Wind power curve id does not resolve."""


class MissingSeries(DroughtcapError, LookupError):
    """A generator needs an environmental channel its site does not provide."""

    def __init__(self, generator_id: str, site_id: str, channel: str):
        self.generator_id = generator_id
        self.site_id = site_id
        self.channel = channel
        super().__init__(
            f"generator {generator_id!r}: site {site_id!r} has no usable "
            f"{channel!r} series for the requested range"
        )


class DeratingError(DroughtcapError):
    """A kernel failed for one generator on one day (wraps the cause)."""

    def __init__(self, generator_id: str, day, cause: Exception):
        self.generator_id = generator_id
        self.day = day
        super().__init__(f"generator {generator_id!r} on {day}: {cause}")


class EmptyCategory(DroughtcapError, ValueError):
    """Capacity factor of an empty generator set is undefined."""


class DegenerateInput(DroughtcapError, ValueError):
    """Regression input has too few points or no variance."""


class FleetFormatError(DroughtcapError):
    """One problem found while reading or validating fleet input files.

    Instances are collected during loading rather than raised one at a
    time, so a single pass reports every offending row.
    """

    def __init__(self, message: str, row: int | None = None, field: str | None = None):
        self.row = row
        self.field = field
        super().__init__(message)

    def __str__(self) -> str:
        where = f"row {self.row}" if self.row is not None else "file"
        what = f", field {self.field!r}" if self.field else ""
        return f"[{where}{what}] {self.args[0]}"


class MissingColumn(FleetFormatError):
    """Input file header does not match the expected schema."""


class BadEnum(FleetFormatError):
    """Cell value is not a recognized enum member."""


class InvariantViolation(FleetFormatError):
    """A declared invariant does not hold for a parsed value."""


class UnresolvedSite(FleetFormatError):
    """Generator references a site_id with no hydrology or weather data."""


class FleetValidationError(DroughtcapError):
    """Aggregate of all problems found while loading fleet inputs."""

    def __init__(self, problems: list[FleetFormatError]):
        self.problems = list(problems)
        lines = "\n".join(f"  - {p}" for p in self.problems)
        super().__init__(f"{len(self.problems)} fleet validation problem(s):\n{lines}")
