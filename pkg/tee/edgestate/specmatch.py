# Copyright 2026, Edge State Entanglement Project
"""
Entanglement spectrum comparison on a mirror symmetric cylinder
:math:`Y | X | Y'`.
"""

import concurrent.futures
import logging
import math

import numpy as np

from tee.edgestate import edgeham
from tee.edgestate.entropy import mutual_information
from tee.edgestate.error import AnalysisError, DomainError
from tee.edgestate.qla import (ZERO_EIGENVALUE_FLOOR, HermitianOperator,
                               PureStateVector, Spectrum, as_matrix,
                               matrix_log, partial_trace, permute_sites,
                               trace_norm)


logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-8
BOUND_SLACK = 1e-10
# larger cutoffs would keep the floored logarithms of zero eigenvalues
MAX_CUTOFF = 1e11


class CutoffSpec(object):
    """
    Spectral cutoff :math:`\\Lambda`.

    :param float cutoff: :math:`\\Lambda > 1`
    :param str side: :code:`density` keeps :math:`\\lambda \\geq
        1/\\Lambda`, :code:`hamiltonian` keeps :math:`\\lambda \\leq
        \\ln \\Lambda`
    """
    SIDES = ('density', 'hamiltonian')

    def __init__(self, cutoff, side='hamiltonian'):
        cutoff = float(cutoff)
        if not 1. < cutoff <= MAX_CUTOFF:
            raise DomainError('Invalid cutoff: {!r}.'.format(cutoff))
        if side not in self.SIDES:
            raise DomainError('Invalid side: {!r}.'.format(side))
        self.cutoff = cutoff
        self.side = side

    @property
    def padding(self):
        """
        Value appended to the shorter of two cut spectra.
        """
        return 0. if self.side == 'density' else math.log(self.cutoff)

    def keep(self, values):
        values = np.asarray(values, dtype=float)
        if self.side == 'density':
            return values[values >= 1. / self.cutoff]
        return values[values <= math.log(self.cutoff)]

    def __repr__(self):
        return '<CutoffSpec({:g}, {!r})>'.format(self.cutoff, self.side)


def _values(obj):
    if isinstance(obj, Spectrum):
        return obj.values
    if isinstance(obj, HermitianOperator):
        return obj.eigenvalues
    if np.ndim(obj) == 1:
        return np.asarray(obj, dtype=float)
    return np.linalg.eigvalsh(as_matrix(obj))


def cutoff_spectrum(op, spec):
    """
    :param op: Hermitian operator or spectrum
    :type spec: :py:class:`CutoffSpec`
    :rtype: :py:class:`tee.edgestate.qla.Spectrum`
    """
    return Spectrum(spec.keep(_values(op)))


def double_spectrum(op):
    """
    Spectrum of :math:`H \\otimes I + I \\otimes H`: all pairwise sums.
    """
    w = _values(op)
    return Spectrum(np.add.outer(w, w).ravel())


def spectrum_l1_distance(s1, s2, padding=None):
    """
    :math:`\\sum_i |s_{1,i} - s_{2,i}|` of the sorted spectra; the shorter
    spectrum is padded with *padding* first.

    :raises DomainError: if the lengths differ and no padding is given
    """
    a, b = np.asarray(_values(s1)), np.asarray(_values(s2))
    if a.size != b.size:
        if padding is None:
            raise DomainError(
                'Invalid spectra: lengths {} and {} without padding.'.format(
                    a.size, b.size))
        n = max(a.size, b.size)
        a = np.concatenate([a, np.full(n - a.size, padding)])
        b = np.concatenate([b, np.full(n - b.size, padding)])
    return float(np.sum(np.abs(np.sort(a) - np.sort(b))))


# ----------------------------------------------------------------------------
class BoundChain(object):
    """
    Links of the estimate
    :math:`\\|\\lambda^\\Lambda(-\\ln \\rho_{YY'}) -
    \\lambda^\\Lambda(-\\ln \\rho_Y \\otimes \\rho_{Y'})\\|_1 \\leq
    \\Lambda (\\|\\rho_{YY'} - \\rho_Y \\otimes \\rho_{Y'}\\|_1 + n/\\Lambda)`
    with :math:`\\|\\rho_{YY'} - \\rho_Y \\otimes \\rho_{Y'}\\|_1 \\leq
    \\sqrt{2 I(Y:Y')}`.
    """

    def __init__(self, i_yy, trace_distance, spectrum_distance,
                 truncated_distance, n_cut, hamiltonian_distance, cutoff):
        self.i_yy = float(i_yy)
        self.trace_distance = float(trace_distance)
        self.spectrum_distance = float(spectrum_distance)
        self.truncated_distance = float(truncated_distance)
        self.n_cut = int(n_cut)
        self.hamiltonian_distance = float(hamiltonian_distance)
        self.cutoff = float(cutoff)

    def links(self):
        """
        :returns: List of :code:`(name, lhs, rhs)` with :code:`lhs <= rhs`
            expected
        """
        return [
            ('pinsker', 0.5 * self.trace_distance ** 2, self.i_yy),
            ('mirsky', self.spectrum_distance, self.trace_distance),
            ('truncation', self.truncated_distance,
             self.spectrum_distance + self.n_cut / self.cutoff),
            ('log_lipschitz', self.hamiltonian_distance,
             self.cutoff * self.truncated_distance),
        ]

    def check(self, slack=BOUND_SLACK):
        """
        :raises AnalysisError: naming the first violated link
        """
        for name, lhs, rhs in self.links():
            if lhs > rhs + slack * max(1., abs(rhs)):
                raise AnalysisError(
                    'Bound {!r} violated: {:.6g} > {:.6g}.'.format(
                        name, lhs, rhs), value=lhs - rhs)

    def to_dict(self):
        return {name: {'lhs': lhs, 'rhs': rhs}
                for name, lhs, rhs in self.links()}


def spectrum_bound_chain(rho_YYp, rho_Y, rho_Yp, cutoff, i_yy=None):
    """
    Evaluate (without checking) the bound chain relating the spectra of
    :math:`\\rho_{YY'}` and :math:`\\rho_Y \\otimes \\rho_{Y'}`.

    :param rho_YYp: Joint state with the :math:`Y` factors first
    :param float cutoff: :math:`\\Lambda`
    :rtype: :py:class:`BoundChain`
    """
    joint = as_matrix(rho_YYp)
    product = np.kron(as_matrix(rho_Y), as_matrix(rho_Yp))
    if joint.shape != product.shape:
        raise DomainError('Invalid marginals: dimension mismatch.')
    if i_yy is None:
        ny = rho_Y.layout.num_sites
        n = rho_YYp.layout.num_sites
        i_yy = mutual_information(rho_YYp, range(ny), range(ny, n))

    density = CutoffSpec(cutoff, 'density')
    hamiltonian = CutoffSpec(cutoff, 'hamiltonian')
    lam_joint = np.sort(np.linalg.eigvalsh(joint))
    lam_product = np.sort(np.linalg.eigvalsh(product))
    kept_joint = lam_joint >= 1. / cutoff
    kept_product = lam_product >= 1. / cutoff

    truncated = spectrum_l1_distance(density.keep(lam_joint),
                                     density.keep(lam_product),
                                     padding=density.padding)
    h_joint = -np.log(np.clip(lam_joint[kept_joint], ZERO_EIGENVALUE_FLOOR,
                              None))
    h_product = -np.log(np.clip(lam_product[kept_product],
                                ZERO_EIGENVALUE_FLOOR, None))
    hamiltonian_distance = spectrum_l1_distance(
        hamiltonian.keep(h_joint), hamiltonian.keep(h_product),
        padding=hamiltonian.padding)

    return BoundChain(i_yy, trace_norm(joint - product),
                      float(np.sum(np.abs(lam_joint - lam_product))),
                      truncated, int(np.sum(kept_joint != kept_product)),
                      hamiltonian_distance, cutoff)


# ----------------------------------------------------------------------------
class SpectrumMatch(object):
    """
    Outcome of :py:func:`cylinder_spectrum_match`.
    """

    def __init__(self, lhs_spectrum, rhs_spectrum, l1_distance, i_yy,
                 asymmetry, cutoff, comparator, bound_chain):
        self.lhs_spectrum = lhs_spectrum
        self.rhs_spectrum = rhs_spectrum
        self.l1_distance = float(l1_distance)
        self.i_yy = float(i_yy)
        self.asymmetry = float(asymmetry)
        self.cutoff = float(cutoff)
        self.comparator = comparator
        self.bound_chain = bound_chain

    @property
    def vacuous(self):
        """
        Both cut spectra are empty.
        """
        return not len(self.lhs_spectrum) and not len(self.rhs_spectrum)

    def to_dict(self):
        return {'cutoff': self.cutoff, 'comparator': self.comparator,
                'lhs_spectrum': list(self.lhs_spectrum),
                'rhs_spectrum': list(self.rhs_spectrum),
                'l1_distance': self.l1_distance, 'i_yy': self.i_yy,
                'asymmetry': self.asymmetry, 'vacuous': self.vacuous,
                'bound_chain': self.bound_chain.to_dict()}

    def row(self):
        return (self.cutoff, self.l1_distance, self.i_yy)


def _mirror_marginal(state, sites):
    """
    Reduced state on *sites* with factors in the given order.
    """
    rho = partial_trace(state, sites)
    ordered = sorted(sites)
    return permute_sites(rho, [ordered.index(s) for s in sites])


def cylinder_spectrum_match(state, Y, X, Yp, cutoff, chain=None,
                            symmetry_tolerance=SYMMETRY_TOLERANCE):
    """
    Compare the cut doubled entanglement spectrum of :math:`Y` with the cut
    spectrum of a Hamiltonian on :math:`X`.

    The comparator is the edge Hamiltonian of *chain* if given and the
    exact :math:`-\\ln \\rho_X` otherwise.

    :param state: Pure state on :math:`Y X Y'`
    :param Y: Sites of :math:`Y`, in mirror order
    :param X: Sites of :math:`X`
    :param Yp: Sites of :math:`Y'`, in the order mirroring *Y*
    :param float cutoff: :math:`\\Lambda`
    :param chain: Chain covering :math:`X` (global sites)
    :rtype: :py:class:`SpectrumMatch`
    :raises DomainError: if :math:`Y, X, Y'` do not partition the sites of
        *state* or :math:`\\rho_Y` and :math:`\\rho_{Y'}` differ
    :raises AnalysisError: if a link of the bound chain fails
    """
    if not isinstance(state, PureStateVector):
        raise DomainError('Invalid state: pure state required.')
    Y, X, Yp = (tuple(int(s) for s in r) for r in (Y, X, Yp))
    if sorted(Y + X + Yp) != list(range(state.layout.num_sites)):
        raise DomainError(
            'Invalid regions: Y, X and Y\' do not partition the '
            '{} sites.'.format(state.layout.num_sites))
    spec = CutoffSpec(cutoff, 'hamiltonian')

    rho_Y = _mirror_marginal(state, Y)
    rho_Yp = _mirror_marginal(state, Yp)
    asymmetry = trace_norm(rho_Y.matrix - rho_Yp.matrix)
    if asymmetry > symmetry_tolerance:
        raise DomainError(
            'Invalid geometry: rho_Y and rho_Y\' differ by {:.3e}.'.format(
                asymmetry))

    h_Y = Spectrum(-matrix_log(rho_Y).eigenvalues)
    lhs = cutoff_spectrum(double_spectrum(h_Y), spec)

    if chain is not None:
        if set(chain.sites) != set(X):
            raise DomainError('Invalid chain: does not cover X.')
        rho_X, local = edgeham.edge_state(state, chain)
        h_X = edgeham.build_edge_hamiltonian(rho_X, local).operator()
        comparator = 'edge_hamiltonian'
    else:
        h_X = HermitianOperator(-matrix_log(partial_trace(state, X)).matrix,
                                check=False)
        comparator = 'exact'
    rhs = cutoff_spectrum(h_X, spec)
    distance = spectrum_l1_distance(lhs, rhs, padding=spec.padding)

    rho_YYp = _mirror_marginal(state, Y + Yp)
    i_yy = mutual_information(state, Y, Yp)
    bound_chain = spectrum_bound_chain(rho_YYp, rho_Y, rho_Yp, cutoff,
                                       i_yy=i_yy)
    bound_chain.check()

    if not len(lhs) and not len(rhs):
        logger.warning('Vacuous cutoff: Lambda={:g} removes both '
                       'spectra.'.format(cutoff))
    logger.debug('Spectrum match ({}): {} vs {} levels, distance '
                 '{:.3e}.'.format(comparator, len(lhs), len(rhs), distance))
    return SpectrumMatch(lhs, rhs, distance, i_yy, asymmetry, cutoff,
                         comparator, bound_chain)


def spectrum_match_curve(state, Y, X, Yp, cutoffs, chain=None,
                         max_workers=None):
    """
    :py:func:`cylinder_spectrum_match` over a sweep of cutoffs.

    :returns: List of :py:class:`SpectrumMatch` in the order of *cutoffs*
    """
    with concurrent.futures.ThreadPoolExecutor(
            max_workers=max_workers) as executor:
        return list(executor.map(
            lambda c: cylinder_spectrum_match(state, Y, X, Yp, c,
                                              chain=chain),
            cutoffs))
