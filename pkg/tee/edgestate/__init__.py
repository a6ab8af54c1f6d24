# Copyright 2026, Edge State Entanglement Project
"""
TEE Edge State Toolkit

Package computing topological entanglement entropy as the relative entropy
distance between an annular edge state and the Gibbs states of local 1D
Hamiltonians. Dense quantum states are handled by means of `NumPy
<https://numpy.org/>`_ and `SciPy <https://scipy.org/>`_, experiment runs are
book-kept with `SQLAlchemy <https://www.sqlalchemy.org/>`_ ORM facilities.
"""

__version__ = '0.1.0'
