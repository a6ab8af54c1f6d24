# Copyright 2026, Edge State Entanglement Project
"""
Settings access and storage

Solver settings are kept as a nested dict persisted as a JSON string, so
that settings may be added or removed without schema changes.
"""

import abc
import collections
import datetime
import json
import logging

import numpy as np
from sqlalchemy import Column, DateTime, ForeignKey, Integer, Text
from sqlalchemy.orm import DeclarativeMeta, reconstructor, relationship

from tee.edgestate.base import ORMBase, NameMixin
from tee.edgestate.error import ConfigError


logger = logging.getLogger(__name__)


class SettingsMeta(DeclarativeMeta, abc.ABCMeta):
    pass


class Settings(collections.UserDict, NameMixin, ORMBase,
               metaclass=SettingsMeta):
    """
    Collection of settings with default values.

    .. note::

        Settings make use of SQLAlchemy's `Single Table Inheritance
        <https://docs.sqlalchemy.org/en/latest/orm/inheritance.html#single-table-inheritance>`_.

    """
    datetime = Column(DateTime, default=datetime.datetime.utcnow,
                      onupdate=datetime.datetime.utcnow)
    config = Column(Text)
    _type = Column(Text, nullable=False)

    __mapper_args__ = {
        'polymorphic_on': _type,
        'polymorphic_identity': 'settings'
    }

    DEFAULTS = {}

    def __init__(self, data=None, **kwargs):
        super().__init__()
        ORMBase.__init__(self, **kwargs)
        for key, default_value in self.DEFAULTS.items():
            self.setdefault(key, default_value)
        if data:
            self.update(data)
        self.commit()

    @reconstructor
    def init_on_load(self):
        self.data = json.loads(self.config) if self.config else {}

    def update(self, other=(), **kwargs):
        other = dict(other, **kwargs)
        unknown = set(other) - set(self.DEFAULTS)
        if self.DEFAULTS and unknown:
            raise ConfigError('Invalid settings: {!r}.'.format(
                sorted(unknown)))
        super().update(other)

    def commit(self):
        """
        Update the internal JSON string. The object still needs to be
        committed to the database afterwards.
        """
        self.config = json.dumps(self.data, indent=4, sort_keys=True)


class SolverSettings(Settings):
    __tablename__ = 'settings'

    # relation: ExperimentRun
    run_id = Column(Integer, ForeignKey('experimentrun.id'))
    run = relationship('ExperimentRun', back_populates='settings')

    __mapper_args__ = {'polymorphic_identity': 'solver'}
    __table_args__ = {'extend_existing': True}

    DEFAULTS = {
        'gtol': 1e-7,
        'maxiter': 5000,
        'kappa': 10.,
        'restart_zero': True,
        'log_floor': 1e-12,
        'support_tolerance': 1e-10,
        't_grid': [-5., 5., 0.25],  # start, stop (inclusive), step
        'cutoff': 50.,
        'degeneracy_threshold': 1e-8,
    }

    def t_grid(self):
        start, stop, step = self['t_grid']
        if step <= 0 or stop < start:
            raise ConfigError('Invalid t_grid: {!r}.'.format(self['t_grid']))
        return np.arange(start, stop + step / 2, step)

    def optimizer_options(self):
        return {k: self[k] for k in ('gtol', 'maxiter', 'kappa',
                                     'restart_zero')}
