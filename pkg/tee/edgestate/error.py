# Copyright 2026, Edge State Entanglement Project
"""
Exception facilities.
"""


class EdgeStateError(Exception):
    """Base class of all errors raised by :py:mod:`tee.edgestate`."""


class DomainError(EdgeStateError, ValueError):
    """Invalid input value, layout or region predicate."""


class ConfigError(DomainError):
    """Experiment configuration not matching the schema."""


class GeometryError(DomainError):
    """Lattice region or partition not fitting the geometry."""


class SupportError(DomainError):
    """
    Support of :math:`\\rho` not contained in the support of :math:`\\sigma`.

    :param float min_eigenvalue: Smallest eigenvalue of :math:`\\sigma`
        restricted to the support of :math:`\\rho`
    """

    def __init__(self, msg, min_eigenvalue):
        super().__init__(msg)
        self.min_eigenvalue = min_eigenvalue


class ResourceError(EdgeStateError):
    """Dense representation exceeding the supported size."""


class FitError(EdgeStateError):
    """Degenerate least-squares problem."""


class AnalysisError(EdgeStateError):
    """
    Numerical analysis precondition violated (e.g. a degenerate leading
    eigenvalue or an identity which does not hold).

    :param value: Measured quantity (gap, discrepancy) triggering the error
    """

    def __init__(self, msg, value=None):
        super().__init__(msg)
        self.value = value
