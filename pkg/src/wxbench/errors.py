"""Exception types raised by wxbench operations."""


class WxbenchError(Exception):
    """Base class for all wxbench errors."""


class DegenerateGrid(WxbenchError):
    """Grid has no latitude row with a positive cosine weight."""


class OutOfDomain(WxbenchError):
    """Query point lies outside the grid bounding box."""


class MissingStep(WxbenchError):
    """A lead-time run has a gap where a contiguous hourly run is required."""


class SpecMismatch(WxbenchError):
    """Fields that must share grid/variable/time metadata do not."""


class InvalidData(WxbenchError):
    """Non-finite values encountered where finite data is required."""


class EmptyInput(WxbenchError):
    """An operation that needs at least one sample received none."""


class EmptyEnsemble(WxbenchError):
    """An ensemble operation received zero members."""


class FormatError(WxbenchError):
    """A file does not conform to its declared on-disk schema."""


class UnsupportedVariable(WxbenchError):
    """The model has no parameters for a requested variable."""


class InsufficientHistory(WxbenchError):
    """The forecast request carries fewer past states than the model needs."""


class InvalidStep(WxbenchError):
    """Rollout step does not divide the target lead time."""


class TrainingDiverged(WxbenchError):
    """No loss-decreasing step found after exhausting step halvings."""


class NonSmoothPoint(WxbenchError):
    """Gradient check hit an exact zero residual (kink of the L1 loss)."""


class LeadGridMismatch(WxbenchError):
    """Score series being compared do not share the same lead-time grid."""


class CliError(WxbenchError):
    """Fatal command-line error; message is the user-facing diagnostic."""
