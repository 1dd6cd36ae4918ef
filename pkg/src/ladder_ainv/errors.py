"""Exception hierarchy shared by all modules."""


class LadderError(Exception):
    """Base class for all errors raised by this package."""


class RegionError(LadderError):
    """A region description violates the staircase-interval invariants."""


class MinorError(LadderError):
    """A cogenerating bivector is malformed (not strictly increasing, etc.)."""


class AssumptionViolated(LadderError):
    """A hypothesis required by the chosen method does not hold.

    Carries the name of the failed hypothesis in args[0].
    """


class Infeasible(LadderError):
    """No lattice path satisfies the given gate constraints."""


class InstanceTooLarge(LadderError):
    """The instance exceeds the configured brute-force budget."""


class ProblemFormatError(LadderError):
    """A problem file failed to parse or validate."""


class WitnessError(LadderError):
    """Internal witness construction failed verification (should not happen
    on instances that satisfy the documented hypotheses)."""
