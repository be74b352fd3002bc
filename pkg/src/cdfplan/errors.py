"""Exception hierarchy shared across the library and the CLI.

The CLI maps these onto exit codes: ConfigError (and subclasses) exit 1,
PlanningFailure exits 2, AuditViolation exits 3.
"""


class CdfPlanError(Exception):
    """Base class for all library errors."""


class ConfigError(CdfPlanError):
    """Invalid configuration, file schema, or CLI usage."""

    @classmethod
    def from_problems(cls, problems):
        """Aggregate several validation problems into one error."""
        msg = "invalid configuration:\n" + "\n".join(f"  - {p}" for p in problems)
        err = cls(msg)
        err.problems = list(problems)
        return err


class SceneFormatError(ConfigError):
    """Scene JSON document does not match the expected schema."""


class FieldFormatError(ConfigError):
    """Distance-field file is malformed, truncated, or the wrong version."""


class DimensionMismatchError(ConfigError):
    """Configuration dimension differs between two inputs."""


class TrajectoryFormatError(ConfigError):
    """Trajectory CSV does not match the expected schema."""


class DegenerateInputError(CdfPlanError):
    """A zero-length motion or goal vector makes an angle undefined."""


class InContactError(CdfPlanError):
    """Distance-field gradient queried at (or within tolerance of) a contact."""


class PlanningFailure(CdfPlanError):
    """A planning run could not produce a usable result (CLI exit 2)."""


class AuditViolation(CdfPlanError):
    """A field audit check failed (CLI exit 3)."""


class TrialGenerationError(CdfPlanError):
    """Rejection sampling exhausted its budget without satisfying the filter."""
