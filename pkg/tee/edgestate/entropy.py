# Copyright 2026, Edge State Entanglement Project
"""
Entropic functionals on states and regions.
"""

import concurrent.futures
import logging

import numpy as np
import scipy.linalg

from tee.edgestate import lattice
from tee.edgestate.error import DomainError, FitError
from tee.edgestate.qla import (ZERO_EIGENVALUE_FLOOR, PureStateVector,
                               partial_trace, renyi_entropy,
                               schmidt_spectrum, von_neumann_entropy)


logger = logging.getLogger(__name__)


def _sites(region):
    return frozenset(int(s) for s in region)


def _check_disjoint(*regions):
    seen = set()
    for r in regions:
        r = _sites(r)
        if not r:
            raise DomainError('Invalid region: empty.')
        if seen & r:
            raise DomainError('Invalid regions: overlapping supports.')
        seen |= r


def region_entropy(state, region):
    """
    Von Neumann entropy :math:`S(R)` (nats) of the reduction of *state* to
    *region*. Pure states are reduced through their Schmidt spectrum.
    """
    sites = _sites(region)
    if not sites:
        return 0.
    if isinstance(state, PureStateVector):
        if len(sites) == state.layout.num_sites:
            return 0.
        p = schmidt_spectrum(state, sites).values
        p = p[p > ZERO_EIGENVALUE_FLOOR]
        return float(max(-np.sum(p * np.log(p)), 0.))
    if len(sites) == state.layout.num_sites:
        return von_neumann_entropy(state)
    return von_neumann_entropy(partial_trace(state, sites))


def region_renyi_entropy(state, region, alpha):
    sites = _sites(region)
    if not sites:
        return 0.
    if len(sites) == state.layout.num_sites:
        return renyi_entropy(state, alpha)
    return renyi_entropy(partial_trace(state, sites), alpha)


class EntropyCache(object):
    """
    Memoized region entropies of a single state.

    :param state: State
    """

    def __init__(self, state):
        self.state = state
        self._cache = {}

    def __call__(self, *regions):
        sites = frozenset().union(*(_sites(r) for r in regions))
        try:
            return self._cache[sites]
        except KeyError:
            value = region_entropy(self.state, sites)
            self._cache[sites] = value
            return value

    def __len__(self):
        return len(self._cache)


def region_entropies(state, regions, max_workers=None):
    """
    Entropies of a batch of regions, evaluated by a thread pool.

    :returns: List of entropies in the order of *regions*
    """
    with concurrent.futures.ThreadPoolExecutor(
            max_workers=max_workers) as executor:
        return list(executor.map(lambda r: region_entropy(state, r),
                                 regions))


# ----------------------------------------------------------------------------
def mutual_information(state, A, B):
    """
    :math:`I(A:B) = S(A) + S(B) - S(AB)`.
    """
    _check_disjoint(A, B)
    S = EntropyCache(state)
    return S(A) + S(B) - S(A, B)


def conditional_entropy(state, A, B):
    """
    :math:`S(A|B) = S(AB) - S(B)`.
    """
    _check_disjoint(A, B)
    S = EntropyCache(state)
    return S(A, B) - S(B)


def conditional_mutual_information(state, A, B, C, entropy=None):
    """
    :math:`I(A:C|B) = S(AB) + S(BC) - S(ABC) - S(B)`.

    :param entropy: Entropy cache to share between calls
    :type entropy: :py:class:`EntropyCache` or None
    """
    _check_disjoint(A, B, C)
    S = entropy or EntropyCache(state)
    return S(A, B) + S(B, C) - S(A, B, C) - S(B)


def tee_levin_wen(state, tripartition, geometry=None):
    """
    Topological entanglement entropy :math:`\\gamma = I(A:C|B)/2` of an
    annular tripartition.

    :param tripartition: Regions :math:`A, B, C`
    :type tripartition: :py:class:`tee.edgestate.lattice.Tripartition`
    :param geometry: Geometry checking the annulus predicate; defaults to
        the geometry of *tripartition*
    :raises DomainError: if the predicate fails
    """
    geometry = geometry or getattr(tripartition, 'geometry', None)
    if geometry is not None:
        lattice.check_levin_wen(geometry, tripartition)
    A, B, C = tripartition
    return 0.5 * conditional_mutual_information(state, A, B, C)


def kitaev_preskill_combination(state, A, B, C):
    """
    :math:`S_A + S_B + S_C - S_{AB} - S_{BC} - S_{AC} + S_{ABC}`, i.e.
    :math:`-\\gamma`.
    """
    _check_disjoint(A, B, C)
    S = EntropyCache(state)
    return (S(A) + S(B) + S(C) - S(A, B) - S(B, C) - S(A, C) +
            S(A, B, C))


def tee_kitaev_preskill(state, A, B, C, geometry=None):
    """
    Topological entanglement entropy :math:`\\gamma`, i.e. the negated
    :py:func:`kitaev_preskill_combination`, for three mutually adjacent
    regions with simply connected union.

    :raises DomainError: if the predicate fails
    """
    if geometry is not None:
        lattice.check_kitaev_preskill(geometry, A, B, C)
    return -kitaev_preskill_combination(state, A, B, C)


# ----------------------------------------------------------------------------
class AreaLawSample(object):
    """
    Region entropy together with its geometric covariates.
    """

    def __init__(self, entropy, perimeter, n_boundaries=1, corners=0,
                 region=None):
        if perimeter < 0 or n_boundaries < 0 or corners < 0:
            raise DomainError('Invalid sample covariates.')
        self.entropy = float(entropy)
        self.perimeter = int(perimeter)
        self.n_boundaries = int(n_boundaries)
        self.corners = int(corners)
        self.region = region

    @classmethod
    def from_region(cls, state, geom, region, n_boundaries=1, corners=0):
        return cls(region_entropy(state, region),
                   lattice.perimeter(geom, region),
                   n_boundaries=n_boundaries, corners=corners,
                   region=region)

    def to_dict(self):
        d = {'entropy': self.entropy, 'perimeter': self.perimeter,
             'n_boundaries': self.n_boundaries, 'corners': self.corners}
        if self.region is not None:
            d['region'] = sorted(int(s) for s in self.region)
        return d


class AreaLawFit(object):
    """
    Fit of :math:`S(R) = \\alpha |\\partial R| - n_R \\gamma + c\\,
    n_{corner}(R)` with per sample residuals.
    """

    def __init__(self, alpha, gamma, corner_const, residuals, samples):
        self.alpha = float(alpha)
        self.gamma = float(gamma)
        self.corner_const = float(corner_const)
        self.residuals = [float(r) for r in residuals]
        self.samples = list(samples)

    def predict(self, perimeter, n_boundaries=1, corners=0):
        return (self.alpha * perimeter - n_boundaries * self.gamma +
                self.corner_const * corners)

    def to_dict(self):
        return {'alpha': self.alpha, 'gamma': self.gamma,
                'corner_const': self.corner_const,
                'residuals': self.residuals,
                'samples': [s.to_dict() for s in self.samples]}

    def __repr__(self):
        return '<AreaLawFit(alpha={:.6g}, gamma={:.6g}, c={:.6g})>'.format(
            self.alpha, self.gamma, self.corner_const)


def area_law_fit(samples):
    """
    Least squares fit of the area law with boundary count and corner count
    covariates. The corner term is only fitted if some sample has corners.

    :param samples: At least three samples with at least two distinct
        perimeters
    :type samples: list of :py:class:`AreaLawSample`
    :rtype: :py:class:`AreaLawFit`
    :raises FitError: if the design matrix is rank deficient
    """
    samples = list(samples)
    if len(samples) < 3:
        raise FitError('Invalid sample count: {}.'.format(len(samples)))
    if len({s.perimeter for s in samples}) < 2:
        raise FitError('Invalid samples: perimeters not distinct.')

    with_corners = any(s.corners for s in samples)
    columns = [[s.perimeter for s in samples],
               [-s.n_boundaries for s in samples]]
    if with_corners:
        columns.append([s.corners for s in samples])
    design = np.array(columns, dtype=float).T
    if np.linalg.matrix_rank(design) < design.shape[1]:
        raise FitError('Degenerate design matrix.')

    y = np.array([s.entropy for s in samples])
    coef, _, _, _ = scipy.linalg.lstsq(design, y)
    residuals = y - design @ coef
    corner_const = coef[2] if with_corners else 0.
    fit = AreaLawFit(coef[0], coef[1], corner_const, residuals, samples)
    logger.debug('Area law fit: {!r}, max residual {:.3e}.'.format(
        fit, float(np.max(np.abs(residuals)))))
    return fit


def area_law_offset(state, geom, region, alpha):
    """
    :math:`S(R) - \\alpha |\\partial R|`, the constant of the modified area
    law (:math:`-n_R \\gamma + \\ln d_a` for a band threaded by flux
    :math:`a`).
    """
    return region_entropy(state, region) - alpha * lattice.perimeter(geom,
                                                                     region)
