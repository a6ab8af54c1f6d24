# Copyright 2026, Edge State Entanglement Project
"""
General purpose run registry ORM facilities.
"""
import datetime
import enum

from sqlalchemy import Column, Integer, String, DateTime
from sqlalchemy.orm import declarative_base, declared_attr


class Base(object):

    @declared_attr
    def __tablename__(cls):
        return cls.__name__.lower()

    id = Column(Integer, primary_key=True)


ORMBase = declarative_base(cls=Base)


class NameMixin(object):
    """
    `SQLAlchemy <https://www.sqlalchemy.org/>`_ mixin providing a general
    purpose :code:`name` attribute.
    """
    name = Column(String)


class CreationTimeMixin(object):
    creationtime = Column(DateTime, default=datetime.datetime.utcnow)


def EpochMixin(name, epoch_type=None, column_prefix=None):
    """
    Mixin factory for epochs providing the fields :code:`starttime` and
    :code:`endtime`, optionally prefixed.

    :param str name: Name of the class returned
    :param epoch_type: :code:`None` or :code:`default` (mandatory start),
        :code:`open` or :code:`finite` (both mandatory)
    :type epoch_type: str or None
    :param column_prefix: Prefix used for DB columns. If :code:`None`, then
        :code:`name` with an appended underscore :code:`_` is used.
    :type column_prefix: str or None
    """
    if column_prefix is None:
        column_prefix = '%s_' % name

    column_prefix = column_prefix.lower()

    class Boundary(enum.Enum):
        LEFT = 'starttime'
        RIGHT = 'endtime'

    def create_datetime(boundary, **kwargs):

        @declared_attr
        def _datetime(cls):
            return Column('%s%s' % (column_prefix, boundary.value), DateTime,
                          **kwargs)

        return _datetime

    if epoch_type is None or epoch_type == 'default':
        nullable = (False, True)
    elif epoch_type == 'open':
        nullable = (True, True)
    elif epoch_type == 'finite':
        nullable = (False, False)
    else:
        raise ValueError('Invalid epoch_type: {!r}.'.format(epoch_type))

    return type(name, (object,), {
        '{}{}'.format(column_prefix, b.value): create_datetime(
            b, nullable=n) for b, n in zip(Boundary, nullable)})


UniqueOpenEpochMixin = EpochMixin('Epoch', epoch_type='open',
                                  column_prefix='')
