# Copyright 2026, Edge State Entanglement Project
"""
`SQLAlchemy <https://www.sqlalchemy.org/>`_ custom type facilities.
"""

import json
import uuid

import numpy as np
from sqlalchemy.dialects.postgresql import UUID
from sqlalchemy.types import TypeDecorator, CHAR, TEXT


def json_default(obj):
    """
    :code:`default` hook of :py:func:`json.dumps` for numpy scalars and
    arrays; complex values are stored as :code:`[re, im]`.
    """
    if isinstance(obj, (complex, np.complexfloating)):
        return [obj.real, obj.imag]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return np.stack([obj.real, obj.imag], axis=-1).tolist()
        return obj.tolist()
    raise TypeError('Not JSON serializable: {!r}.'.format(obj))


class JSONEncodedDict(TypeDecorator):
    """
    Representation of a :code:`dict` as a JSON encoded string. Keys are
    sorted so that equal documents are stored identically; numpy values
    are converted by :py:func:`json_default`.
    """

    impl = TEXT
    cache_ok = True

    def process_bind_param(self, value, dialect):
        if value is not None:
            value = json.dumps(value, sort_keys=True, default=json_default)
        return value

    def process_result_value(self, value, dialect):
        if value is not None:
            value = json.loads(value)
        return value


class GUID(TypeDecorator):
    """
    Platform-independent GUID type.

    Uses PostgreSQL's UUID type, otherwise uses
    CHAR(32), storing as stringified hex values.
    """
    impl = CHAR
    cache_ok = True

    def load_dialect_impl(self, dialect):
        if dialect.name == 'postgresql':
            return dialect.type_descriptor(UUID())
        return dialect.type_descriptor(CHAR(32))

    def process_bind_param(self, value, dialect):
        if value is None:
            return value
        elif dialect.name == 'postgresql':
            return str(value)
        if not isinstance(value, uuid.UUID):
            value = uuid.UUID(value)
        # hexstring
        return '%.32x' % value.int

    def process_result_value(self, value, dialect):
        if value is None or isinstance(value, uuid.UUID):
            return value
        return uuid.UUID(value)
