# Copyright 2026, Edge State Entanglement Project
"""
Matrix product states on a chain, transfer operators, convergence of
reduced states with the chain length and replica transfer operators for
Renyi entropies of boundary rings.

Tensors of a chain are stored with shape :code:`(d, D, D)`; amplitudes
are :math:`L^T A^{i_1} \\cdots A^{i_N} R`. Tensors of a boundary ring carry
an inner and an outer physical leg, shape :code:`(d_in, d_out, D, D)`.
Transfer operators act on :math:`\\mathbb{C}^D \\otimes \\mathbb{C}^D` with
the ket factor first.
"""

import functools
import itertools
import logging
import math

import numpy as np
import scipy.linalg

from tee.edgestate.error import AnalysisError, DomainError, ResourceError
from tee.edgestate.qla import (MAX_OPERATOR_DIM, MAX_VECTOR_DIM,
                               DensityOperator, PureStateVector,
                               SubsystemLayout, trace_norm)


logger = logging.getLogger(__name__)

DEGENERACY_THRESHOLD = 1e-8
MAX_REPLICA_DIM = 2 ** 12


def _unit(v, name):
    v = np.asarray(v, dtype=complex).reshape(-1)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DomainError('Invalid {}: zero vector.'.format(name))
    return v / norm


class MatrixProductState(object):
    """
    Matrix product state with open boundary vectors.

    :param tensors: Array of shape :code:`(d, D, D)`
    :param L: Left boundary vector (normalized on construction)
    :param R: Right boundary vector (normalized on construction)
    :param corner: Optional corner tensor of the same shape
    """

    def __init__(self, tensors, L, R, corner=None):
        tensors = np.asarray(tensors, dtype=complex)
        if tensors.ndim != 3 or tensors.shape[1] != tensors.shape[2]:
            raise DomainError(
                'Invalid tensor shape: {!r}.'.format(tensors.shape))
        D = tensors.shape[1]
        L, R = _unit(L, 'L'), _unit(R, 'R')
        if L.size != D or R.size != D:
            raise DomainError('Invalid boundary vector dimensions.')
        if corner is not None:
            corner = np.asarray(corner, dtype=complex)
            if corner.shape != tensors.shape:
                raise DomainError(
                    'Invalid corner shape: {!r}.'.format(corner.shape))
        self.tensors = tensors
        self.L = L
        self.R = R
        self.corner = corner

    @property
    def d(self):
        return self.tensors.shape[0]

    @property
    def D(self):
        return self.tensors.shape[1]

    @functools.cached_property
    def transfer(self):
        return TransferOperator.from_tensors(self.tensors)

    def normalized(self):
        """
        Copy with tensors rescaled so that :math:`\\lambda_{max}(T) = 1`.
        """
        scale = math.sqrt(self.transfer.lambda_max)
        return MatrixProductState(self.tensors / scale, self.L, self.R,
                                  corner=self.corner)

    def to_dict(self):
        d = {'tensors': _encode(self.tensors), 'L': _encode(self.L),
             'R': _encode(self.R)}
        if self.corner is not None:
            d['corner'] = _encode(self.corner)
        return d

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(_decode(d['tensors']), _decode(d['L']),
                       _decode(d['R']),
                       corner=(_decode(d['corner']) if 'corner' in d
                               else None))
        except (KeyError, TypeError, IndexError) as err:
            raise DomainError('Invalid MPS spec: {}.'.format(err))

    def __repr__(self):
        return '<MatrixProductState(d={}, D={})>'.format(self.d, self.D)


def _encode(a):
    """
    Nested lists with trailing :code:`[re, im]` pairs.
    """
    a = np.asarray(a, dtype=complex)
    return np.stack([a.real, a.imag], axis=-1).tolist()


def _decode(lst):
    a = np.asarray(lst, dtype=float)
    if a.shape[-1] != 2:
        raise DomainError('Invalid complex array: no re/im pairs.')
    return a[..., 0] + 1j * a[..., 1]


class TransferOperator(object):
    """
    :math:`T = \\sum_i A^i \\otimes \\bar{A}^i` with its spectral data.

    :param matrix: Square matrix
    """

    def __init__(self, matrix):
        self.matrix = np.asarray(matrix, dtype=complex)
        w = scipy.linalg.eigvals(self.matrix)
        self.eigenvalues = w[np.argsort(-np.abs(w), kind='stable')]

    @classmethod
    def from_tensors(cls, tensors):
        return cls(np.einsum('iab,icd->acbd', tensors,
                             tensors.conj()).reshape(
            tensors.shape[1] ** 2, -1))

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def lambda_max(self):
        return float(abs(self.eigenvalues[0]))

    @property
    def lambda_2(self):
        if self.eigenvalues.size < 2:
            return None
        return float(abs(self.eigenvalues[1]))

    @property
    def gap(self):
        if self.lambda_2 is None:
            return None
        return self.lambda_max - self.lambda_2

    def check_unique(self, threshold=DEGENERACY_THRESHOLD):
        """
        :raises AnalysisError: if the maximal eigenvalue is degenerate in
            modulus
        """
        if self.gap is not None and self.gap < threshold:
            raise AnalysisError(
                'Degenerate maximal eigenvalue (gap {:.3e}).'.format(
                    self.gap), value=self.gap)

    def reshuffled(self):
        """
        Hermitian positive form :math:`\\sum_i |A^i)(A^i|` of the transfer
        operator.
        """
        D = int(round(math.sqrt(self.dim)))
        t = self.matrix.reshape(D, D, D, D)
        return np.transpose(t, (0, 2, 1, 3)).reshape(self.dim, self.dim)

    def __repr__(self):
        return '<TransferOperator(dim={}, lambda_max={:.6g})>'.format(
            self.dim, self.lambda_max)


# ----------------------------------------------------------------------------
def _check_dense(d, n):
    if d ** n > MAX_VECTOR_DIM:
        raise ResourceError(
            'State dimension {}^{} exceeds {}.'.format(d, n, MAX_VECTOR_DIM))


def mps_to_dense(mps, N):
    """
    Contract an MPS of length *N* into a normalized state vector.

    :raises ResourceError: if :math:`d^N` exceeds the dense limit
    """
    N = int(N)
    if N < 1:
        raise DomainError('Invalid length: {!r}.'.format(N))
    _check_dense(mps.d, N)
    v = mps.L[None, :]
    for _ in range(N):
        v = np.einsum('ka,iab->kib', v, mps.tensors).reshape(-1, mps.D)
    return PureStateVector(v @ mps.R, SubsystemLayout((mps.d,) * N),
                           normalize=True)


def mps_norm(mps, N):
    """
    :math:`\\langle \\psi_N | \\psi_N \\rangle = (L \\bar{L}| T^N
    |R \\bar{R})`.
    """
    v = np.kron(mps.R, mps.R.conj())
    for _ in range(int(N)):
        v = mps.transfer.matrix @ v
    return float(np.real(np.kron(mps.L, mps.L.conj()) @ v))


def _first_m_rows(mps, m):
    """
    Rows :math:`L^T A^{i_1} \\cdots A^{i_m}` for all :math:`i_1 \\dots
    i_m`.
    """
    k = mps.L[None, :]
    for _ in range(m):
        k = np.einsum('ka,iab->kib', k, mps.tensors).reshape(-1, mps.D)
    return k


def _channel(mps, x, steps):
    """
    :math:`X \\mapsto \\sum_i A^i X A^{i\\dagger}` applied *steps* times.
    """
    for _ in range(steps):
        x = np.einsum('iab,bc,idc->ad', mps.tensors, x, mps.tensors.conj())
    return x


def _reduced(k, mid):
    rho = k @ mid @ k.conj().T
    return rho / np.trace(rho).real


def reduced_first_m(mps, N, m):
    """
    Reduced state of the first *m* sites of the length-*N* chain, by
    transfer operator contraction.

    :rtype: :py:class:`tee.edgestate.qla.DensityOperator`
    """
    N, m = int(N), int(m)
    if not 1 <= m <= N:
        raise DomainError('Invalid m={!r} for N={!r}.'.format(m, N))
    if mps.d ** m > MAX_OPERATOR_DIM:
        raise ResourceError('Reduced dimension {}^{} exceeds {}.'.format(
            mps.d, m, MAX_OPERATOR_DIM))
    mid = _channel(mps, np.outer(mps.R, mps.R.conj()), N - m)
    return DensityOperator(_reduced(_first_m_rows(mps, m), mid),
                           SubsystemLayout((mps.d,) * m), check=False)


def limit_reduced_first_m(mps, m):
    """
    :math:`\\lim_{N \\to \\infty}` of :py:func:`reduced_first_m`, from the
    dominant eigenprojector of :math:`T`.

    :raises AnalysisError: if the maximal eigenvalue is degenerate or the
        right boundary has no weight on the dominant eigenvector
    """
    T = mps.transfer
    T.check_unique()
    w, vl, vr = scipy.linalg.eig(T.matrix, left=True, right=True)
    top = int(np.argmax(np.abs(w)))
    left, right = vl[:, top].conj(), vr[:, top]
    weight = (left @ np.kron(mps.R, mps.R.conj())) / (left @ right)
    if abs(weight) < DEGENERACY_THRESHOLD:
        raise AnalysisError('Boundary vector orthogonal to the dominant '
                            'eigenvector.', value=abs(weight))
    mid = (weight * right).reshape(mps.D, mps.D)
    return DensityOperator(_reduced(_first_m_rows(mps, m), mid),
                           SubsystemLayout((mps.d,) * m), check=False)


class ConvergenceCurve(object):
    """
    :math:`\\|\\rho^{(N)}_{1 \\dots m} - \\rho^{(\\infty)}_{1 \\dots m}\\|_1`
    over chain lengths together with the fitted exponential rate.
    """

    def __init__(self, m, lengths, distances, slope, predicted_slope):
        self.m = m
        self.lengths = list(lengths)
        self.distances = [float(x) for x in distances]
        self.slope = slope
        self.predicted_slope = predicted_slope

    @property
    def relative_deviation(self):
        if self.slope is None or not self.predicted_slope:
            return None
        return abs(self.slope - self.predicted_slope) / abs(
            self.predicted_slope)

    def to_dict(self):
        return {'m': self.m, 'lengths': self.lengths,
                'distances': self.distances, 'slope': self.slope,
                'predicted_slope': self.predicted_slope,
                'relative_deviation': self.relative_deviation}

    def rows(self):
        return list(zip(self.lengths, self.distances))


def convergence_curve(mps, m, lengths):
    """
    Distances of the first-*m* reduced states from their infinite chain
    limit; the least squares slope of :math:`\\ln` distance versus
    :math:`N` is compared with :math:`\\ln(\\lambda_2 / \\lambda_{max})`.

    The reference is the exact :math:`N \\to \\infty` limit of
    :py:func:`limit_reduced_first_m`, not the longest chain in *lengths*.

    :rtype: :py:class:`ConvergenceCurve`
    :raises AnalysisError: if the maximal eigenvalue is degenerate
    """
    reference = limit_reduced_first_m(mps, m)
    lengths = [int(n) for n in lengths]
    distances = [trace_norm(reduced_first_m(mps, n, m).matrix -
                            reference.matrix) for n in lengths]

    T = mps.transfer
    predicted = None
    if T.lambda_2:
        predicted = math.log(T.lambda_2 / T.lambda_max)
    points = [(n, math.log(x)) for n, x in zip(lengths, distances)
              if x > 1e-13]
    slope = None
    if len(points) >= 2:
        slope = float(np.polyfit(*zip(*points), deg=1)[0])
    logger.debug('Convergence slope {} (predicted {}).'.format(slope,
                                                              predicted))
    return ConvergenceCurve(m, lengths, distances, slope, predicted)


class EntrywiseBound(object):

    def __init__(self, differences, bounds):
        self.differences = np.asarray(differences)
        self.bounds = np.asarray(bounds)

    @property
    def holds(self):
        return bool(np.all(self.differences <= self.bounds + 1e-12))

    @property
    def max_ratio(self):
        mask = self.bounds > 0
        if not np.any(mask):
            return 0.
        return float(np.max(self.differences[mask] / self.bounds[mask]))


def entrywise_bound(mps, N, N_tilde, m):
    """
    Compare the unnormalized reduced state entries of two chain lengths
    with :math:`\\prod_k \\|A^{i_k} \\otimes \\bar{A}^{j_k}\\|
    \\|T^{N-m} - T^{\\tilde{N}-m}\\|` (operator norms, unit boundary
    vectors).

    :rtype: :py:class:`EntrywiseBound`
    """
    mps = mps.normalized()
    T = mps.transfer.matrix
    tail = np.linalg.matrix_power(T, N - m) - \
        np.linalg.matrix_power(T, N_tilde - m)
    tail_norm = np.linalg.norm(tail, 2)
    left = np.kron(mps.L, mps.L.conj())
    right = tail @ np.kron(mps.R, mps.R.conj())
    norms = [np.linalg.norm(a, 2) for a in mps.tensors]

    differences, bounds = [], []
    for i in itertools.product(range(mps.d), repeat=m):
        for j in itertools.product(range(mps.d), repeat=m):
            v = left
            bound = tail_norm
            for a, b in zip(i, j):
                v = v @ np.kron(mps.tensors[a], mps.tensors[b].conj())
                bound *= norms[a] * norms[b]
            differences.append(abs(v @ right))
            bounds.append(bound)
    return EntrywiseBound(differences, bounds)


def gauge_transform(mps, X):
    """
    :math:`A^i \\mapsto X A^i X^{-1}`, :math:`L \\mapsto X^{-T} L`,
    :math:`R \\mapsto X R`; the state is unchanged up to normalization.
    """
    X = np.asarray(X, dtype=complex)
    Xinv = np.linalg.inv(X)
    tensors = np.einsum('ab,ibc,cd->iad', X, mps.tensors, Xinv)
    corner = None
    if mps.corner is not None:
        corner = np.einsum('ab,ibc,cd->iad', X, mps.corner, Xinv)
    return MatrixProductState(tensors, Xinv.T @ mps.L, X @ mps.R,
                              corner=corner)


# ----------------------------------------------------------------------------
def _as_ring_tensor(tensors):
    tensors = np.asarray(tensors, dtype=complex)
    if tensors.ndim == 3:
        return tensors[:, None, :, :]
    if tensors.ndim != 4 or tensors.shape[2] != tensors.shape[3]:
        raise DomainError(
            'Invalid tensor shape: {!r}.'.format(tensors.shape))
    return tensors


def replica_transfer(tensors, alpha):
    """
    :math:`T_\\alpha = \\sum \\bigotimes_{k=1}^{\\alpha} (A^{i_k j_k}
    \\otimes \\bar{A}^{i_{k+1} j_k})` with :math:`i_{\\alpha+1} = i_1`,
    factors ordered ket 1, bra 1, ket 2, bra 2, ...

    :param tensors: Chain tensors :code:`(d, D, D)` (no outer leg) or ring
        tensors :code:`(d_in, d_out, D, D)`
    :param int alpha: Replica number; :code:`alpha=1` gives :math:`T`
    :rtype: :py:class:`TransferOperator`
    :raises ResourceError: if :math:`D^{2\\alpha}` exceeds the limit
    """
    alpha = int(alpha)
    if alpha < 1:
        raise DomainError('Invalid alpha: {!r}.'.format(alpha))
    a = _as_ring_tensor(tensors)
    d_in, d_out, D, _ = a.shape
    dim = D ** (2 * alpha)
    if dim > MAX_REPLICA_DIM:
        raise ResourceError('Replica dimension {} exceeds {}.'.format(
            dim, MAX_REPLICA_DIM))
    conj = a.conj()
    t = np.zeros((dim, dim), dtype=complex)
    for i in itertools.product(range(d_in), repeat=alpha):
        for j in itertools.product(range(d_out), repeat=alpha):
            factors = []
            for k in range(alpha):
                factors.append(a[i[k], j[k]])
                factors.append(conj[i[(k + 1) % alpha], j[k]])
            t += functools.reduce(np.kron, factors)
    return TransferOperator(t)


def _kron_power(v, alpha):
    return functools.reduce(np.kron, [v] * alpha)


def replica_trace(mps, N, l, alpha):
    """
    :math:`\\mathrm{tr}\\, \\rho_{1 \\dots l}^\\alpha` of the first *l* sites
    of the normalized length-*N* chain, from
    :math:`((L\\bar{L})^{\\otimes \\alpha}| T_\\alpha^l
    (T^{\\otimes\\alpha})^{N-l} |(R\\bar{R})^{\\otimes\\alpha})`.
    """
    N, l, alpha = int(N), int(l), int(alpha)
    if not 1 <= l <= N:
        raise DomainError('Invalid l={!r} for N={!r}.'.format(l, N))
    mps = mps.normalized()
    T = mps.transfer.matrix
    right = np.kron(mps.R, mps.R.conj())
    for _ in range(N - l):
        right = T @ right
    v = _kron_power(right, alpha)
    T_alpha = replica_transfer(mps.tensors, alpha).matrix
    for _ in range(l):
        v = T_alpha @ v
    value = _kron_power(np.kron(mps.L, mps.L.conj()), alpha) @ v
    return float(np.real(value)) / mps_norm(mps, N) ** alpha


def chain_renyi_entropy(mps, N, l, alpha):
    alpha = int(alpha)
    if alpha < 2:
        raise DomainError('Invalid alpha: {!r}.'.format(alpha))
    return math.log(replica_trace(mps, N, l, alpha)) / (1. - alpha)


# ----------------------------------------------------------------------------
class BoundaryRing(object):
    """
    Closed boundary: sides of edge tensors separated by corner tensors.
    The reduced state lives on the inner legs; outer legs are traced.

    :param edge: Edge tensor :code:`(d_in, d_out, D, D)`
    :param corner: Corner tensor of the same shape
    :param side_lengths: Number of edge tensors per side; one corner
        follows every side
    """

    def __init__(self, edge, corner, side_lengths):
        edge = _as_ring_tensor(edge)
        corner = _as_ring_tensor(corner)
        if edge.shape != corner.shape:
            raise DomainError('Invalid corner shape: {!r}.'.format(
                corner.shape))
        side_lengths = [int(n) for n in side_lengths]
        if not side_lengths or min(side_lengths) < 0:
            raise DomainError('Invalid side lengths: {!r}.'.format(
                side_lengths))
        self.edge = edge
        self.corner = corner
        self.side_lengths = side_lengths

    @property
    def n_corners(self):
        return len(self.side_lengths)

    @property
    def perimeter(self):
        return sum(self.side_lengths)

    @property
    def num_sites(self):
        return self.perimeter + self.n_corners

    def tensors_in_order(self):
        for n in self.side_lengths:
            for _ in range(n):
                yield self.edge
            yield self.corner

    def log_trace(self, alpha):
        """
        :math:`\\ln \\mathrm{tr} \\prod_s T_\\alpha^{l_s} T^C_\\alpha`,
        evaluated with the powers rescaled by :math:`\\lambda_{max}`.
        """
        edge_t = replica_transfer(self.edge, alpha)
        corner_t = replica_transfer(self.corner, alpha).matrix
        scale = edge_t.lambda_max
        unit = edge_t.matrix / scale
        product = np.eye(edge_t.dim, dtype=complex)
        for n in self.side_lengths:
            product = product @ np.linalg.matrix_power(unit, n) @ corner_t
        value = np.trace(product)
        if value.real <= 0 or abs(value.imag) > 1e-8 * abs(value):
            raise AnalysisError('Invalid replica trace: {!r}.'.format(value))
        return math.log(value.real) + self.perimeter * math.log(scale)

    def to_dense(self):
        """
        Ring state over :code:`(inner, outer)` leg pairs, site by site.
        """
        d_in, d_out, D, _ = self.edge.shape
        _check_dense(d_in * d_out, self.num_sites)
        tensors = [t.reshape(d_in * d_out, D, D)
                   for t in self.tensors_in_order()]
        v = np.eye(D, dtype=complex)[None, :, :]
        for t in tensors:
            v = np.einsum('kab,ibc->kiac', v, t).reshape(-1, D, D)
        amplitudes = np.trace(v, axis1=1, axis2=2)
        layout = SubsystemLayout((d_in, d_out) * self.num_sites)
        return PureStateVector(amplitudes, layout, normalize=True)


def ring_renyi_entropy(ring, alpha):
    """
    :math:`S_\\alpha = [\\ln \\mathrm{tr} \\prod (T_\\alpha^{l_s}
    T_\\alpha^C) - \\alpha \\ln \\mathrm{tr} \\prod (T^{l_s} T^C)] /
    (1 - \\alpha)` of the inner legs.
    """
    alpha = int(alpha)
    if alpha < 2:
        raise DomainError('Invalid alpha: {!r}.'.format(alpha))
    return (ring.log_trace(alpha) - alpha * ring.log_trace(1)) / (1. - alpha)


class RenyiAreaFit(object):
    """
    Least squares fit :math:`S_\\alpha(l) = s\\, l + C` with the
    transfer operator prediction :math:`s = |\\ln
    \\lambda_{max}(T_\\alpha)| / (\\alpha - 1)`.
    """

    def __init__(self, alpha, perimeters, entropies, slope, intercept,
                 predicted_slope, n_corners, decay_rate):
        self.alpha = alpha
        self.perimeters = list(perimeters)
        self.entropies = [float(s) for s in entropies]
        self.slope = float(slope)
        self.intercept = float(intercept)
        self.predicted_slope = float(predicted_slope)
        self.n_corners = n_corners
        self.decay_rate = decay_rate

    @property
    def residuals(self):
        return [s - (self.slope * l + self.intercept)
                for l, s in zip(self.perimeters, self.entropies)]

    @property
    def relative_deviation(self):
        if self.predicted_slope == 0:
            return abs(self.slope)
        return abs(self.slope - self.predicted_slope) / abs(
            self.predicted_slope)

    def to_dict(self):
        return {'alpha': self.alpha, 'perimeters': self.perimeters,
                'entropies': self.entropies, 'slope': self.slope,
                'intercept': self.intercept,
                'predicted_slope': self.predicted_slope,
                'relative_deviation': self.relative_deviation,
                'n_corners': self.n_corners,
                'residuals': self.residuals, 'decay_rate': self.decay_rate}

    def rows(self):
        return list(zip(self.perimeters, self.entropies, self.residuals))


def _sides(perimeter, n_corners):
    return [perimeter // n_corners + (1 if s < perimeter % n_corners else 0)
            for s in range(n_corners)]


def renyi_area_fit(edge, corner, n_corners, perimeters, alpha):
    """
    Renyi entropies of boundary rings with *n_corners* corners over total
    perimeters distributed evenly over the sides, fitted linearly.

    :rtype: :py:class:`RenyiAreaFit`
    :raises AnalysisError: if :math:`\\lambda_{max}(T_\\alpha)` is
        degenerate
    """
    alpha = int(alpha)
    edge = _as_ring_tensor(edge)
    scale = math.sqrt(replica_transfer(edge, 1).lambda_max)
    edge, corner = edge / scale, _as_ring_tensor(corner)
    T_alpha = replica_transfer(edge, alpha)
    T_alpha.check_unique()
    predicted = abs(math.log(T_alpha.lambda_max)) / (alpha - 1)

    perimeters = [int(l) for l in perimeters]
    if len(set(perimeters)) < 2:
        raise DomainError('Invalid perimeters: {!r}.'.format(perimeters))
    entropies = [ring_renyi_entropy(
        BoundaryRing(edge, corner, _sides(l, n_corners)), alpha)
        for l in perimeters]
    design = np.column_stack([perimeters, np.ones(len(perimeters))])
    (slope, intercept), _, _, _ = scipy.linalg.lstsq(design,
                                                     np.array(entropies))

    residuals = np.array(entropies) - design @ np.array([slope, intercept])
    points = [(l, math.log(abs(r))) for l, r in zip(perimeters, residuals)
              if abs(r) > 1e-13]
    decay_rate = None
    if len(points) >= 2:
        decay_rate = max(-float(np.polyfit(*zip(*points), deg=1)[0]), 0.)
    fit = RenyiAreaFit(alpha, perimeters, entropies, slope, intercept,
                       predicted, n_corners, decay_rate)
    logger.debug('Renyi area fit alpha={}: slope {:.6g} vs {:.6g}.'.format(
        alpha, fit.slope, predicted))
    return fit


# ----------------------------------------------------------------------------
def _complex_normal(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_mps(d, D, seed):
    """
    MPS with Gaussian random tensors and boundary vectors drawn from
    :code:`numpy.random.default_rng(seed)`; injective with probability one.
    """
    rng = np.random.default_rng(seed)
    return MatrixProductState(_complex_normal(rng, (d, D, D)),
                              _complex_normal(rng, D),
                              _complex_normal(rng, D))


def random_ring_tensors(d_in, d_out, D, seed):
    """
    :returns: Tuple :code:`(edge, corner)` of Gaussian random ring tensors
    """
    rng = np.random.default_rng(seed)
    shape = (d_in, d_out, D, D)
    return _complex_normal(rng, shape), _complex_normal(rng, shape)


def ring_tensors_to_dict(edge, corner):
    return {'edge': _encode(edge), 'corner': _encode(corner)}


def ring_tensors_from_dict(d):
    try:
        edge, corner = _decode(d['edge']), _decode(d['corner'])
    except (KeyError, TypeError, IndexError) as err:
        raise DomainError('Invalid ring spec: {}.'.format(err))
    if edge.ndim != 4 or edge.shape != corner.shape:
        raise DomainError('Invalid ring tensor shapes: {!r}, {!r}.'.format(
            edge.shape, corner.shape))
    return edge, corner
