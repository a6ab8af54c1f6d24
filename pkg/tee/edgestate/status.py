# Copyright 2026, Edge State Entanglement Project
"""
Run status related ORM facilities.
"""

import datetime
import enum
import uuid as _uuid

from sqlalchemy import Column, Integer, Enum, ForeignKey
from sqlalchemy.ext.hybrid import hybrid_property
from sqlalchemy.ext.mutable import MutableDict
from sqlalchemy.orm import relationship

from tee.edgestate.base import ORMBase, UniqueOpenEpochMixin
from tee.edgestate.type import GUID, JSONEncodedDict


class EStatus(enum.Enum):
    PENDING = 0
    RUNNING = 1
    ERROR = 2
    COMPLETE = 3


class Status(UniqueOpenEpochMixin, ORMBase):
    """
    Experiment run status for bookkeeping purposes.

    The info `dict` contains zero or more of the following fields by
    convention:

    info = {
        'error': Message of the exception terminating the run,
        'exit_code': Exit code reported by the command line interface
    }
    """
    uuid = Column(GUID, unique=True, index=True, nullable=False)
    state = Column(Enum(EStatus), default=EStatus.PENDING)
    info = Column(MutableDict.as_mutable(JSONEncodedDict))

    # relation: ExperimentRun
    run_id = Column(Integer, ForeignKey('experimentrun.id'))
    run = relationship('ExperimentRun', back_populates='status')

    def __init__(self, uuid=None, state=EStatus.PENDING, info=None):
        self.uuid = uuid or _uuid.uuid4()
        self.state = state
        self.info = info or {}
        self.starttime = datetime.datetime.utcnow()

    @hybrid_property
    def finished(self):
        return self.state in (EStatus.ERROR, EStatus.COMPLETE)

    @finished.expression
    def finished(cls):
        return cls.state.in_((EStatus.ERROR, EStatus.COMPLETE))

    def transition(self, state, **info):
        """
        Move to *state*; finished states set the end time.
        """
        if self.finished:
            raise ValueError('Invalid transition: {!r} -> {!r}.'.format(
                self.state, state))
        self.state = state
        self.info.update(info)
        if self.finished:
            self.endtime = datetime.datetime.utcnow()

    def __repr__(self):
        return '<Status(uuid={}, state={})>'.format(self.uuid, self.state)
