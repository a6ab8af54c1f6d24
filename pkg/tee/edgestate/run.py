# Copyright 2026, Edge State Entanglement Project
"""
Experiment run registry ORM facilities.

Every run of the command line interface may be recorded as an
:py:class:`ExperimentRun` together with its :py:class:`Status`.
"""

import contextlib
import enum
import logging

from sqlalchemy import Column, Enum, Integer, String, create_engine
from sqlalchemy.ext.mutable import MutableDict
from sqlalchemy.orm import relationship, sessionmaker

from tee.edgestate import __version__
from tee.edgestate.base import ORMBase, NameMixin, CreationTimeMixin
from tee.edgestate.settings import SolverSettings
from tee.edgestate.status import EStatus, Status
from tee.edgestate.type import JSONEncodedDict


logger = logging.getLogger(__name__)


class EExperiment(enum.Enum):
    TEE = 'tee'
    EDGE_HAMILTONIAN = 'edge-hamiltonian'
    GIBBS_FIT = 'gibbs-fit'
    SPECTRUM_MATCH = 'spectrum-match'
    RECOVERY_CHECK = 'recovery-check'
    MPS_CONVERGE = 'mps-converge'
    RENYI_FIT = 'renyi-fit'


class ExperimentRun(CreationTimeMixin, NameMixin, ORMBase):
    """
    Base class for experiment runs.

    .. note::

        Inheritance is implemented following the `SQLAlchemy Single Table
        Inheritance
        <https://docs.sqlalchemy.org/en/latest/orm/inheritance.html#single-table-inheritance>`_
        paradigm.
    """
    __tablename__ = 'experimentrun'

    config = Column(MutableDict.as_mutable(JSONEncodedDict))
    results = Column(MutableDict.as_mutable(JSONEncodedDict))
    confighash = Column(String(64), index=True)
    version = Column(String, default=__version__)
    seed = Column(Integer)
    _type = Column(Enum(EExperiment), nullable=False)

    status = relationship('Status',
                          back_populates='run',
                          uselist=False,
                          cascade='all, delete-orphan')
    settings = relationship(SolverSettings,
                            back_populates='run',
                            uselist=False,
                            cascade='all, delete-orphan')

    __mapper_args__ = {
        'polymorphic_on': _type,
    }

    def __repr__(self):
        return '<{}(confighash={!r}, status={!r})>'.format(
            type(self).__name__, self.confighash, self.status)


class TEERun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.TEE}


class EdgeHamiltonianRun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.EDGE_HAMILTONIAN}


class GibbsFitRun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.GIBBS_FIT}


class SpectrumMatchRun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.SPECTRUM_MATCH}


class RecoveryCheckRun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.RECOVERY_CHECK}


class MPSConvergeRun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.MPS_CONVERGE}


class RenyiFitRun(ExperimentRun):
    __mapper_args__ = {'polymorphic_identity': EExperiment.RENYI_FIT}


def run_class(experiment):
    """
    :param experiment: Experiment or its command name
    :rtype: subclass of :py:class:`ExperimentRun`
    """
    experiment = EExperiment(experiment)
    for cls in ExperimentRun.__subclasses__():
        if cls.__mapper_args__['polymorphic_identity'] is experiment:
            return cls
    raise ValueError('Invalid experiment: {!r}.'.format(experiment))


class RunRegistry(object):
    """
    Session factory over a database holding experiment runs.

    :param str url: SQLAlchemy database URL, e.g. :code:`sqlite:///runs.db`
    """

    def __init__(self, url, **kwargs):
        self.engine = create_engine(url, **kwargs)
        ORMBase.metadata.create_all(self.engine)
        self.Session = sessionmaker(bind=self.engine, expire_on_commit=False)

    @contextlib.contextmanager
    def record(self, experiment, config, confighash, seed=None,
               settings=None):
        """
        Context manager yielding a running :py:class:`ExperimentRun`. The
        status is set to :code:`COMPLETE` on exit or to :code:`ERROR` if an
        exception escapes; the exception is re-raised.

        :param settings: Solver settings stored with the run
        :type settings: :py:class:`tee.edgestate.settings.SolverSettings`
        """
        session = self.Session()
        run = run_class(experiment)(
            name=EExperiment(experiment).value, config=config,
            confighash=confighash, seed=seed, settings=settings,
            status=Status(state=EStatus.RUNNING))
        session.add(run)
        session.commit()
        try:
            yield run
        except Exception as err:
            run.status.transition(EStatus.ERROR, error=str(err))
            raise
        else:
            run.status.transition(EStatus.COMPLETE)
        finally:
            if run.settings is not None:
                run.settings.commit()
            session.commit()
            logger.debug('Recorded {!r}.'.format(run))
            session.close()

    def runs(self, confighash=None):
        with contextlib.closing(self.Session()) as session:
            query = session.query(ExperimentRun).order_by(ExperimentRun.id)
            if confighash is not None:
                query = query.filter_by(confighash=confighash)
            runs = query.all()
            for r in runs:
                # load before the session closes
                r.status, r.settings
            session.expunge_all()
            return runs
