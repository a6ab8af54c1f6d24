# Copyright 2026, Edge State Entanglement Project
"""
Relative entropy minimization :math:`\\min_\\theta S(\\rho_X \\|
e^{-H(\\theta)}/Z(\\theta))` over local Gibbs families.

Every term of a family is expanded in an orthonormal (trace inner product)
basis of traceless Hermitian matrices. The identity component is excluded
everywhere; the normalization :math:`\\ln Z` is added analytically, which
keeps the problem unconstrained and convex.
"""

import concurrent.futures
import logging
import math

import numpy as np
import scipy.linalg
import scipy.optimize
import scipy.special

from tee.edgestate import edgeham
from tee.edgestate.entropy import (EntropyCache,
                                   conditional_mutual_information)
from tee.edgestate.error import DomainError, FitError
from tee.edgestate.lattice import Region, Tripartition
from tee.edgestate.qla import (HermitianOperator, as_density, embed,
                               partial_trace, von_neumann_entropy)


logger = logging.getLogger(__name__)

DEFAULT_OPTIONS = {
    'gtol': 1e-7,
    'maxiter': 5000,
    'kappa': 10.,
    'restart_zero': True,
    'max_workers': None,
}


class TermBasis(object):
    """
    Orthonormal basis of the traceless Hermitian :math:`d \\times d`
    matrices. Coefficients are ordered as: Helmert combinations of the
    diagonal, :math:`\\sqrt{2}\\, \\mathrm{Re}` of the upper triangle,
    :math:`\\sqrt{2}\\, \\mathrm{Im}` of the upper triangle.

    :param int d: Matrix dimension
    """

    def __init__(self, d):
        d = int(d)
        if d < 2:
            raise DomainError('Invalid term dimension: {!r}.'.format(d))
        self.d = d
        self._helmert = scipy.linalg.helmert(d)
        self._upper = np.triu_indices(d, 1)

    @property
    def size(self):
        return self.d * self.d - 1

    def unpack(self, theta):
        theta = np.asarray(theta, dtype=float)
        d, n_off = self.d, len(self._upper[0])
        g = np.zeros((d, d), dtype=complex)
        g[np.diag_indices(d)] = self._helmert.T @ theta[:d - 1]
        off = (theta[d - 1:d - 1 + n_off] +
               1j * theta[d - 1 + n_off:]) / math.sqrt(2.)
        g[self._upper] = off
        g[self._upper[::-1]] = off.conj()
        return g

    def pack(self, matrix):
        """
        Coefficients :math:`\\mathrm{tr}(G b_k)` of a Hermitian matrix; the
        identity component is dropped.
        """
        g = np.asarray(matrix)
        upper = g[self._upper]
        return np.concatenate([self._helmert @ np.real(np.diag(g)),
                               math.sqrt(2.) * upper.real,
                               math.sqrt(2.) * upper.imag])

    def matrices(self):
        """
        Explicit basis matrices.
        """
        return [self.unpack(e) for e in np.eye(self.size)]


class GibbsFamily(object):
    """
    Gibbs states of Hamiltonians with a fixed support pattern.

    :param chain: Localized chain covering :math:`X`
    :type chain: :py:class:`tee.edgestate.lattice.ChainPartition`
    :param layout: Layout of :math:`X`
    :param str pattern: :code:`nearest_neighbor` (terms on adjacent block
        pairs) or :code:`two_block` (:math:`H_{AB} + H_{BC}`)
    :param tripartition: Required by the :code:`two_block` pattern
    :param float kappa: Term norm bound :math:`K = \\kappa N`
    """
    PATTERNS = ('nearest_neighbor', 'two_block')

    def __init__(self, chain, layout, pattern='nearest_neighbor',
                 tripartition=None, kappa=DEFAULT_OPTIONS['kappa']):
        if pattern not in self.PATTERNS:
            raise DomainError('Invalid pattern: {!r}.'.format(pattern))
        if pattern == 'nearest_neighbor':
            supports = [chain.sites_of(p) for p in chain.pairs()]
        else:
            if tripartition is None:
                raise DomainError('Invalid family: tripartition required.')
            A, B, C = tripartition
            supports = [tuple(sorted(A.sites | B.sites)),
                        tuple(sorted(B.sites | C.sites))]

        self.chain = chain
        self.layout = layout
        self.pattern = pattern
        self.tripartition = tripartition
        self.supports = supports
        self.bases = [TermBasis(layout.dim_of(s)) for s in supports]
        self.K = float(kappa) * layout.num_sites
        offsets = np.cumsum([0] + [b.size for b in self.bases])
        self._slices = [slice(a, b) for a, b in zip(offsets, offsets[1:])]

    @property
    def num_params(self):
        return self._slices[-1].stop

    def term_matrices(self, theta):
        return [b.unpack(theta[s]) for b, s in zip(self.bases, self._slices)]

    def hamiltonian(self, theta):
        """
        Dense :math:`H(\\theta)` on :math:`X`.
        """
        h = np.zeros((self.layout.total_dim,) * 2, dtype=complex)
        for sites, g in zip(self.supports, self.term_matrices(theta)):
            h += embed(g, sites, self.layout)
        return h

    def marginal_coefficients(self, state):
        """
        :math:`\\mathrm{tr}(\\rho\\, b_k)` for all basis elements.
        """
        return np.concatenate([
            b.pack(partial_trace(state, sites).matrix)
            for b, sites in zip(self.bases, self.supports)])

    def project(self, hamiltonian):
        """
        Coefficients of a :py:class:`tee.edgestate.edgeham.LocalHamiltonian`
        whose terms are each contained in some support of the family; other
        terms are skipped.
        """
        theta = np.zeros(self.num_params)
        for term in hamiltonian.terms:
            for k, sites in enumerate(self.supports):
                if set(term.sites) <= set(sites):
                    positions = [sites.index(s) for s in term.sites]
                    sub = self.layout.restrict(sites)
                    g = embed(term.operator, positions, sub)
                    theta[self._slices[k]] += self.bases[k].pack(g)
                    break
            else:
                logger.debug('Term on {!r} outside the family.'.format(
                    term.sites))
        return theta

    def clip(self, theta):
        """
        Scale every term down to operator norm :math:`K`.

        :returns: Tuple :code:`(theta, active)`
        """
        theta = np.array(theta, dtype=float)
        active = False
        for g, s in zip(self.term_matrices(theta), self._slices):
            norm = float(np.max(np.abs(scipy.linalg.eigvalsh(g))))
            if norm > self.K:
                theta[s] *= self.K / norm
                active = True
        return theta, active

    def __repr__(self):
        return '<GibbsFamily(pattern={!r}, terms={}, params={})>'.format(
            self.pattern, len(self.supports), self.num_params)


class _Problem(object):
    """
    Cached data of :math:`\\theta \\mapsto S(\\rho \\| \\sigma(\\theta))`.
    """

    def __init__(self, rho, family):
        self.rho = as_density(rho)
        if self.rho.layout != family.layout:
            raise DomainError('Invalid family: layout mismatch.')
        self.family = family
        self.entropy = von_neumann_entropy(self.rho)
        self.r = family.marginal_coefficients(self.rho)

    def evaluate(self, theta, with_gradient=True):
        theta = np.asarray(theta, dtype=float)
        if not np.all(np.isfinite(theta)):
            raise DomainError('Invalid theta: non-finite entries.')
        w, v = scipy.linalg.eigh(self.family.hamiltonian(theta))
        log_z = float(scipy.special.logsumexp(-w))
        value = -self.entropy + float(theta @ self.r) + log_z
        if not with_gradient:
            return value, None, log_z
        # shifted by the minimal energy, so that exp never overflows
        p = np.exp(-(w - w[0]))
        p /= p.sum()
        sigma = HermitianOperator((v * p) @ v.conj().T, self.family.layout,
                                  check=False)
        return value, self.r - self.family.marginal_coefficients(sigma), log_z

    def __call__(self, theta):
        value, grad, _ = self.evaluate(theta)
        return value, grad


def objective(rho_X, family, theta):
    """
    :math:`-S(\\rho_X) + \\mathrm{tr}\\, \\rho_X H(\\theta) +
    \\ln \\mathrm{tr}\\, e^{-H(\\theta)}`.
    """
    return _Problem(rho_X, family).evaluate(theta, with_gradient=False)[0]


def gradient(rho_X, family, theta):
    """
    :math:`\\partial_k = \\mathrm{tr}(\\rho_X b_k) - \\mathrm{tr}(\\sigma
    b_k)`, with :math:`\\sigma` the normalized Gibbs state.
    """
    return _Problem(rho_X, family).evaluate(theta)[1]


# ----------------------------------------------------------------------------
class MarkovCertificate(object):
    """
    Conditional mutual informations
    :math:`I(X_{i+1} : X_{i+3} \\dots X_{i-1} | X_{i+2})` for every
    :math:`i`.
    """

    def __init__(self, values):
        self.values = [float(v) for v in values]

    @property
    def epsilon(self):
        return max(self.values)

    def flagged(self, threshold=1e-8):
        return [i for i, v in enumerate(self.values) if v > threshold]

    def to_dict(self):
        return {'values': self.values, 'epsilon': self.epsilon}


def markov_certificate(rho_X, chain):
    rho_X = as_density(rho_X)
    m = chain.m
    if m < 4:
        raise DomainError('Invalid chain: m={} (at least 4).'.format(m))
    S = EntropyCache(rho_X)
    values = []
    for i in range(m):
        rest = [(i + k) % m for k in range(3, m)]
        values.append(conditional_mutual_information(
            rho_X, chain.sites_of((i + 1,)), chain.sites_of((i + 2,)),
            chain.sites_of(rest), entropy=S))
    return MarkovCertificate(values)


def _tripartition(chain, a, b):
    c = [i for i in range(chain.m) if i not in set(a) | set(b)]
    return Tripartition(Region(chain.sites_of(a), 'A'),
                        Region(chain.sites_of(b), 'B'),
                        Region(chain.sites_of(c), 'C'), source=chain)


def neighbor_tripartitions(chain):
    """
    :math:`A = X_i`, :math:`B = X_{i-1} X_{i+1}` and :math:`C` the rest,
    for every block :math:`i`.
    """
    m = chain.m
    if m < 4:
        raise DomainError('Invalid chain: m={} (at least 4).'.format(m))
    return [_tripartition(chain, (i,), ((i - 1) % m, (i + 1) % m))
            for i in range(m)]


def two_block_tripartition(chain):
    """
    :math:`A = X_1`, :math:`B = X_2 X_m` (and :math:`X_3 X_{m-1}` for
    :math:`m \\geq 6`), :math:`C` the rest.
    """
    m = chain.m
    if m < 4:
        raise DomainError('Invalid chain: m={} (at least 4).'.format(m))
    b = [1, m - 1] + ([2, m - 2] if m >= 6 else [])
    return _tripartition(chain, (0,), b)


# ----------------------------------------------------------------------------
class FitResult(object):
    """
    Outcome of :py:func:`minimize`.
    """

    def __init__(self, theta, hamiltonian, value, grad_norm, iterations,
                 converged, K_active, start, history, certificate=None):
        self.theta = theta
        self.hamiltonian = hamiltonian
        self.value = float(value)
        self.grad_norm = float(grad_norm)
        self.iterations = int(iterations)
        self.converged = bool(converged)
        self.K_active = bool(K_active)
        self.start = start
        self.history = list(history)
        self.certificate = certificate

    @property
    def tee_estimate(self):
        return 0.5 * self.value

    def to_dict(self):
        return {'value': self.value, 'tee_estimate': self.tee_estimate,
                'grad_norm': self.grad_norm, 'iterations': self.iterations,
                'converged': self.converged, 'K_active': self.K_active,
                'start': self.start,
                'certificate': (self.certificate.values
                                if self.certificate else [])}

    def __repr__(self):
        return '<FitResult(value={:.6g}, converged={})>'.format(
            self.value, self.converged)


def _options(options):
    opts = dict(DEFAULT_OPTIONS)
    opts.update(options or {})
    return opts


def warm_start_from_state(state, family):
    """
    Coefficients of the edge Hamiltonian of *state*, projected onto the
    family.
    """
    return family.project(edgeham.build_edge_hamiltonian(state,
                                                         family.chain))


def _run(problem, name, theta0, opts):
    history = []

    def callback(xk):
        history.append(problem.evaluate(xk, with_gradient=False)[0])

    res = scipy.optimize.minimize(
        problem, theta0, jac=True, method='L-BFGS-B', callback=callback,
        options={'gtol': opts['gtol'], 'ftol': 1e-15,
                 'maxiter': opts['maxiter'], 'maxcor': 20})
    grad_norm = float(np.max(np.abs(res.jac), initial=0.))
    logger.debug('Start {!r}: value={:.8g}, |grad|={:.3e}, nit={}.'.format(
        name, res.fun, grad_norm, res.nit))
    return {'name': name, 'theta': res.x, 'value': float(res.fun),
            'grad_norm': grad_norm, 'iterations': res.nit,
            'history': history}


def minimize(rho_X, family, options=None, warm_starts=None):
    """
    Minimize the relative entropy over *family* with L-BFGS-B.

    Starts are the projected edge Hamiltonian, :math:`\\theta = 0` (unless
    disabled) and the caller's *warm_starts*; the best run is reported.

    :param options: Overrides of :py:data:`DEFAULT_OPTIONS`
    :param warm_starts: Additional starting points
    :type warm_starts: dict mapping names to coefficient vectors
    :rtype: :py:class:`FitResult`
    """
    opts = _options(options)
    problem = _Problem(rho_X, family)

    starts = {'edge_hamiltonian': warm_start_from_state(problem.rho,
                                                         family)}
    if opts['restart_zero']:
        starts['zero'] = np.zeros(family.num_params)
    for name, theta in (warm_starts or {}).items():
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (family.num_params,):
            raise DomainError('Invalid warm start {!r}.'.format(name))
        starts[name] = theta

    with concurrent.futures.ThreadPoolExecutor(
            max_workers=opts['max_workers']) as executor:
        runs = list(executor.map(
            lambda item: _run(problem, item[0], item[1], opts),
            starts.items()))
    if not runs:
        raise FitError('No starting point.')
    best = min(runs, key=lambda r: r['value'])

    theta, K_active = family.clip(best['theta'])
    if K_active:
        logger.info('Term norm bound K={:.3g} active.'.format(family.K))
    value, grad, log_z = problem.evaluate(theta)
    grad_norm = float(np.max(np.abs(grad), initial=0.))
    converged = grad_norm <= opts['gtol'] and not K_active
    if converged:
        logger.info('Gibbs fit converged: value={:.8g} ({!r} start).'.format(
            value, best['name']))
    else:
        logger.warning(
            'Gibbs fit not converged: value={:.8g}, |grad|={:.3e}.'.format(
                value, grad_norm))

    terms = [edgeham.HamiltonianTerm(
        support, sites,
        HermitianOperator(g, family.layout.restrict(sites), check=False))
        for support, sites, g in zip(_term_supports(family),
                                     family.supports,
                                     family.term_matrices(theta))]
    hamiltonian = edgeham.LocalHamiltonian(
        terms, family.chain, family.layout, constant=log_z,
        normalization_included=True)

    certificate = None
    if family.chain.m >= 4:
        certificate = markov_certificate(problem.rho, family.chain)
    return FitResult(theta, hamiltonian, value, grad_norm,
                     best['iterations'], converged, K_active, best['name'],
                     best['history'], certificate=certificate)


def _term_supports(family):
    if family.pattern == 'nearest_neighbor':
        return family.chain.pairs()
    owners = []
    for sites in family.supports:
        owners.append(tuple(i for i in range(family.chain.m)
                            if family.chain.block(i).sites <= set(sites)))
    return owners


def mbody_family_compare(rho_X, chain, tripartition=None, options=None):
    """
    Minima over the nearest neighbor family and over the two block family
    :math:`H_{AB} + H_{BC}`.

    :returns: Tuple of :py:class:`FitResult` objects
    """
    rho_X = as_density(rho_X)
    if tripartition is None:
        tripartition = two_block_tripartition(chain)
    opts = _options(options)
    nn = GibbsFamily(chain, rho_X.layout, kappa=opts['kappa'])
    tb = GibbsFamily(chain, rho_X.layout, pattern='two_block',
                     tripartition=tripartition, kappa=opts['kappa'])
    return minimize(rho_X, nn, opts), minimize(rho_X, tb, opts)
