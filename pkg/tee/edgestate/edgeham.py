# Copyright 2026, Edge State Entanglement Project
"""
Edge entanglement Hamiltonian built from the marginals of a boundary state,
and the relative entropy identities it satisfies.

All functions of this module act on the reduced state :math:`\\rho_X` whose
sites are numbered by their position in :math:`X`; use
:py:func:`edge_state` to obtain both the state and the matching localized
chain from a global state.
"""

import logging

import numpy as np

from tee.edgestate.entropy import (EntropyCache,
                                   conditional_mutual_information)
from tee.edgestate.error import AnalysisError, DomainError
from tee.edgestate.lattice import ChainPartition
from tee.edgestate.qla import (ZERO_EIGENVALUE_FLOOR, HermitianOperator,
                               SubsystemLayout,
                               as_density, embed, gibbs_relative_entropy,
                               matrix_exp, matrix_log, partial_trace)


logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-8


class HamiltonianTerm(object):
    """
    Operator acting on the joint space of a set of chain blocks.

    :param support: Block indices
    :param sites: Sorted sites (of :math:`X`) of the blocks in *support*
    :param operator: Operator on *sites*
    :type operator: :py:class:`tee.edgestate.qla.HermitianOperator`
    """

    def __init__(self, support, sites, operator):
        self.support = tuple(int(i) for i in support)
        self.sites = tuple(int(s) for s in sites)
        if operator.layout.num_sites != len(self.sites):
            raise DomainError(
                'Invalid term: operator on {} sites for support {!r}.'.format(
                    operator.layout.num_sites, self.sites))
        self.operator = operator

    @property
    def norm(self):
        w = self.operator.eigenvalues
        return float(max(abs(w[0]), abs(w[-1])))

    def to_dict(self):
        m = self.operator.matrix
        return {'support': list(self.support), 'sites': list(self.sites),
                'site_dims': list(self.operator.layout.site_dims),
                'real': m.real.tolist(), 'imag': m.imag.tolist()}

    @classmethod
    def from_dict(cls, d):
        try:
            matrix = np.array(d['real']) + 1j * np.array(d['imag'])
            layout = SubsystemLayout(d['site_dims'])
            return cls(d['support'], d['sites'],
                       HermitianOperator(matrix, layout))
        except (KeyError, TypeError) as err:
            raise DomainError('Invalid term spec: {}.'.format(err))


class LocalHamiltonian(object):
    """
    :math:`H = \\sum_i h_i + c`, a sum of terms supported on chain blocks
    plus a constant.

    :param terms: Terms
    :type terms: list of :py:class:`HamiltonianTerm`
    :param chain: Localized chain the supports refer to
    :type chain: :py:class:`tee.edgestate.lattice.ChainPartition`
    :param layout: Layout of :math:`X`
    :param float constant: Multiple of the identity (e.g. :math:`\\ln Z`)
    :param bool normalization_included: :math:`e^{-H}` has unit trace
    :param float floor: Zero eigenvalue floor used for matrix logarithms
    """

    def __init__(self, terms, chain, layout, constant=0.,
                 normalization_included=False, floor=ZERO_EIGENVALUE_FLOOR):
        self.terms = list(terms)
        self.chain = chain
        self.layout = layout
        self.constant = float(constant)
        self.normalization_included = bool(normalization_included)
        self.floor = floor

    @property
    def family(self):
        pairs = {frozenset(p) for p in self.chain.pairs()}
        if all(frozenset(t.support) in pairs and len(t.support) == 2
               for t in self.terms):
            return 'nearest_neighbor'
        return 'generic'

    def term_norms(self):
        return [t.norm for t in self.terms]

    def matrix(self):
        dim = self.layout.total_dim
        h = self.constant * np.eye(dim, dtype=complex)
        for t in self.terms:
            h += embed(t.operator, t.sites, self.layout)
        return h

    def operator(self):
        return HermitianOperator(self.matrix(), self.layout, check=False)

    def gibbs_operator(self):
        """
        :math:`e^{-H}` (unnormalized unless the normalization is
        included).
        """
        return matrix_exp(HermitianOperator(-self.matrix(), self.layout,
                                            check=False))

    def to_dict(self):
        return {'chain': self.chain.to_dict(),
                'site_dims': list(self.layout.site_dims),
                'constant': self.constant,
                'normalization_included': self.normalization_included,
                'floor': self.floor,
                'terms': [t.to_dict() for t in self.terms]}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls([HamiltonianTerm.from_dict(t) for t in d['terms']],
                       ChainPartition.from_dict(d['chain']),
                       SubsystemLayout(d['site_dims']),
                       constant=d.get('constant', 0.),
                       normalization_included=d.get(
                           'normalization_included', False),
                       floor=d.get('floor', ZERO_EIGENVALUE_FLOOR))
        except (KeyError, TypeError) as err:
            raise DomainError('Invalid Hamiltonian spec: {}.'.format(err))

    def __repr__(self):
        return '<LocalHamiltonian(terms={}, family={!r})>'.format(
            len(self.terms), self.family)


# ----------------------------------------------------------------------------
def edge_state(state, chain):
    """
    Reduce a global state to the sites of *chain*.

    :returns: Tuple :code:`(rho_X, local_chain)`
    """
    rho = partial_trace(state, chain.sites)
    return rho, chain.localized()


def _check_local(rho, chain):
    if chain.sites != tuple(range(rho.layout.num_sites)):
        raise DomainError(
            'Invalid chain: does not cover the layout of rho_X '
            '(use edge_state to localize).')


def _positions(sites, within):
    position = {s: i for i, s in enumerate(within)}
    return [position[s] for s in sites]


def build_edge_hamiltonian(rho_X, chain, floor=ZERO_EIGENVALUE_FLOOR):
    """
    Edge Hamiltonian :math:`H_X = -\\sum_i (\\ln \\rho_{X_i X_{i+1}} -
    \\ln \\rho_{X_i} \\otimes I)`.

    For open chains the first term is :math:`-\\ln \\rho_{X_1 X_2}` and no
    wrap term is present, so that :math:`e^{-H_X}` reproduces a Markov
    chain exactly.

    :param rho_X: Boundary state
    :param chain: Localized chain covering :math:`X`
    :param float floor: Zero eigenvalue floor of the matrix logarithms
    :rtype: :py:class:`LocalHamiltonian`
    """
    rho_X = as_density(rho_X)
    _check_local(rho_X, chain)

    terms = []
    for k, (i, j) in enumerate(chain.pairs()):
        sites = chain.sites_of((i, j))
        rho_pair = partial_trace(rho_X, sites)
        h = -matrix_log(rho_pair, floor=floor).matrix
        if chain.periodic or k > 0:
            block = chain.block(i).sorted()
            log_block = matrix_log(partial_trace(rho_X, block), floor=floor)
            h += embed(log_block, _positions(block, sites), rho_pair.layout)
        terms.append(HamiltonianTerm(
            (i, j), sites, HermitianOperator(h, rho_pair.layout,
                                             check=False)))

    hamiltonian = LocalHamiltonian(terms, chain, rho_X.layout, floor=floor)
    logger.debug('Edge Hamiltonian: m={}, term norms {}.'.format(
        chain.m, ['{:.3g}'.format(n) for n in hamiltonian.term_norms()]))
    return hamiltonian


class EdgeGibbsDistance(object):
    """
    :math:`S(\\rho_X \\| e^{-H_X})` evaluated directly and as a sum of
    conditional entropies.
    """

    def __init__(self, direct, conditional_sum, floor):
        self.direct = float(direct)
        self.conditional_sum = float(conditional_sum)
        self.floor = floor

    @property
    def value(self):
        return self.direct

    @property
    def discrepancy(self):
        return abs(self.direct - self.conditional_sum)

    def to_dict(self):
        return {'direct': self.direct,
                'conditional_sum': self.conditional_sum,
                'discrepancy': self.discrepancy, 'floor': self.floor}


def conditional_entropy_sum(rho_X, chain, entropy=None):
    """
    :math:`\\sum_i S(X_{i+1}|X_i) - S(X_1 \\dots X_m)`; for open chains
    the sum starts with :math:`S(X_1 X_2)`.
    """
    S = entropy or EntropyCache(rho_X)
    total = -S(chain.sites)
    for k, (i, j) in enumerate(chain.pairs()):
        total += S(chain.sites_of((i, j)))
        if chain.periodic or k > 0:
            total -= S(chain.block(i))
    return total


def edge_gibbs_distance(rho_X, chain, floor=ZERO_EIGENVALUE_FLOOR,
                        tolerance=IDENTITY_TOLERANCE):
    """
    :math:`S(\\rho_X \\| e^{-H_X})` by two independent evaluation paths.

    :rtype: :py:class:`EdgeGibbsDistance`
    :raises AnalysisError: if the two values differ by more than
        *tolerance*
    """
    rho_X = as_density(rho_X)
    hamiltonian = build_edge_hamiltonian(rho_X, chain, floor=floor)
    direct = gibbs_relative_entropy(rho_X, hamiltonian.matrix())
    result = EdgeGibbsDistance(direct, conditional_entropy_sum(rho_X, chain),
                               floor)
    if result.discrepancy > tolerance:
        raise AnalysisError(
            'Gibbs distance identity violated (discrepancy {:.3e}).'.format(
                result.discrepancy), value=result.discrepancy)
    return result


class TelescopedDecomposition(object):
    """
    Decomposition of :math:`S(\\rho_X \\| e^{-H_X})` into conditional
    mutual informations.

    For periodic chains
    :math:`\\sum_{k=1}^{m-2} I(X_1 \\dots X_{k-1} : X_{k+1} | X_k)
    + I(X_{m-1} : X_1 | X_m) - I(X_{m-1} : X_1)
    + I(X_2 \\dots X_{m-2} : X_m | X_1 X_{m-1})`; for open chains the sum
    of the chain terms up to :math:`k = m-1`.
    """

    def __init__(self, chain_cmis, wrap_cmi=None, far_mi=None,
                 final_cmi=None):
        self.chain_cmis = [float(c) for c in chain_cmis]
        self.wrap_cmi = wrap_cmi
        self.far_mi = far_mi
        self.final_cmi = final_cmi

    @property
    def total(self):
        total = sum(self.chain_cmis)
        if self.final_cmi is not None:
            total += self.wrap_cmi - self.far_mi + self.final_cmi
        return total

    def to_dict(self):
        return {'chain_cmis': self.chain_cmis, 'wrap_cmi': self.wrap_cmi,
                'far_mi': self.far_mi, 'final_cmi': self.final_cmi,
                'total': self.total}


def telescoped_cmi_decomposition(rho_X, chain):
    """
    :rtype: :py:class:`TelescopedDecomposition`
    :raises DomainError: if the chain has less than four blocks
    """
    rho_X = as_density(rho_X)
    _check_local(rho_X, chain)
    m = chain.m
    if m < 4:
        raise DomainError('Invalid chain: m={} (at least 4).'.format(m))
    S = EntropyCache(rho_X)

    def cmi(a, b, c):
        return conditional_mutual_information(
            rho_X, chain.sites_of(a), chain.sites_of(b), chain.sites_of(c),
            entropy=S)

    last = m - 2 if chain.periodic else m - 1
    chain_cmis = [0.]
    for k in range(1, last):
        chain_cmis.append(cmi(range(k), (k,), (k + 1,)))
    if not chain.periodic:
        return TelescopedDecomposition(chain_cmis)

    a, b = chain.sites_of((m - 2,)), chain.sites_of((0,))
    far = S(a) + S(b) - S(a, b)
    return TelescopedDecomposition(
        chain_cmis,
        wrap_cmi=cmi((m - 2,), (m - 1,), (0,)),
        far_mi=far,
        final_cmi=cmi(range(1, m - 2), (0, m - 2), (m - 1,)))
