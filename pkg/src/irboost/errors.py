"""Exception hierarchy for irboost.

Every "this quantity does not exist here" condition gets its own class so
callers can distinguish a singular parameter point from a genuine bug.
"""


class IrboostError(Exception):
    """Base class for all irboost-specific errors."""


class UndefinedQuantity(IrboostError, ValueError):
    """A derived quantity is mathematically undefined at this point."""


class AccardiUndefined(UndefinedQuantity):
    """The Accardi invariant denominator P(X|R) - P(X|~R) vanishes.

    The term does not discriminate relevance, so the invariant carries no
    information at this point.
    """


class BoostUndefined(UndefinedQuantity):
    """Relative precision boost is undefined (baseline P(R) ~ 0, or the
    conditioning event never occurs)."""


class EmptyArm(IrboostError, ValueError):
    """A rate estimate was requested from an arm with zero observations."""


class ArmStarvation(IrboostError, RuntimeError):
    """A simulated measurement arm failed to accept enough documents
    within its raw-draw budget (acceptance probability effectively zero)."""

    def __init__(self, arm: str, accepted: int, target: int, draws: int):
        self.arm = arm
        self.accepted = accepted
        self.target = target
        self.draws = draws
        super().__init__(
            f"arm {arm!r} accepted {accepted}/{target} documents "
            f"after {draws} raw draws"
        )


class MalformedInput(IrboostError, ValueError):
    """External count data failed to parse or is internally inconsistent."""
