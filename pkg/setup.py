# Copyright (C) 2026, Edge State Entanglement Project
"""
setup.py for tee.edgestate

.. note:

    Packaging is performed by means of `Python namespace packages
    <https://packaging.python.org/guides/packaging-namespace-packages/>`_
"""

import sys
from setuptools import setup, find_packages


if sys.version_info[:2] < (3, 8):
    raise RuntimeError("Python version >= 3.8 required.")

_authors = [
    'Edge State Entanglement Project contributors', ]
_authors_email = []

_install_requires = [
    "numpy>=1.20",
    "scipy>=1.7",
    "sqlalchemy>=1.4", ]

_extras_require = {'doc': [
    "sphinx>=4.0",
    "sphinx-rtd-theme>=1.0", ]}

_tests_require = [
    'pytest>=6.0', ]


setup(
    name='tee.edgestate',
    version='0.1.0',
    author=', '.join(_authors),
    author_email=', '.join(_authors_email),
    description=('Topological entanglement entropy from edge states: '
                 'edge Hamiltonians, Gibbs fits, recovery maps and '
                 'transfer operators.'),
    license='AGPL',
    keywords=[
        'topological entanglement entropy',
        'entanglement Hamiltonian',
        'edge states',
        'quantum Markov chains',
        'matrix product states'],
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        ('License :: OSI Approved :: GNU Affero '
            'General Public License v3 or later (AGPLv3+)'),
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Physics', ],
    platforms=['Linux', ],
    packages=['tee.' + pkg for pkg in find_packages(where='tee')],
    install_requires=_install_requires,
    extras_require=_extras_require,
    setup_requires=['pytest-runner', ],
    tests_require=_tests_require,
    entry_points={
        'console_scripts': [
            'tee-edgestate = tee.edgestate.cli:main', ]},
    include_package_data=True,
    zip_safe=False,
)

# ----- END OF setup.py -----
