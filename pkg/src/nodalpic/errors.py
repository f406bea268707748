"""Shared exception types."""


class CapExceeded(RuntimeError):
    """An enumeration guard tripped; raise the relevant cap to proceed."""


class TotalDegreeError(ValueError):
    """A multidegree has the wrong total degree for the requested operation."""
