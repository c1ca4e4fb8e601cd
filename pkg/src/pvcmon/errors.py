"""Shared exception types."""


class GraphFormatError(ValueError):
    """An edge-list document violates the input format."""


class InfeasibleTargetError(ValueError):
    """The requested coverage or threshold target cannot be met by any subset."""


class GadgetConstructionError(RuntimeError):
    """Gadget parameters produced an invalid construction (e.g. path length < 1)."""
