# Copyright 2026, Edge State Entanglement Project
"""
Dense quantum linear algebra facilities.

States and operators carry an explicit :py:class:`SubsystemLayout`. Site 0 is
the most significant tensor factor, i.e. amplitudes are reshaped in C order
to :code:`layout.site_dims`. All logarithms are natural logarithms.
"""

import functools
import logging
import operator

import numpy as np
import scipy.linalg

from tee.edgestate.error import DomainError, ResourceError, SupportError


logger = logging.getLogger(__name__)

HERMITICITY_TOLERANCE = 1e-10
NORM_TOLERANCE = 1e-10
POSITIVITY_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-10
SUPPORT_TOLERANCE = 1e-10
# eigenvalues below the floor count as exact zeros
ZERO_EIGENVALUE_FLOOR = 1e-12

MAX_VECTOR_DIM = 2 ** 18
MAX_OPERATOR_DIM = 2 ** 12


def _product(values):
    return functools.reduce(operator.mul, values, 1)


class SubsystemLayout(object):
    """
    Ordered tensor product structure of a finite set of sites.

    :param site_dims: Local Hilbert space dimensions
    :type site_dims: iterable of int
    """

    def __init__(self, site_dims):
        site_dims = tuple(int(d) for d in site_dims)
        if not site_dims or min(site_dims) < 1:
            raise DomainError('Invalid site_dims: {!r}.'.format(site_dims))
        self._site_dims = site_dims

    @classmethod
    def qubits(cls, num_sites):
        return cls((2,) * int(num_sites))

    @property
    def site_dims(self):
        return self._site_dims

    @property
    def num_sites(self):
        return len(self._site_dims)

    @property
    def total_dim(self):
        return _product(self._site_dims)

    def validate_sites(self, sites):
        """
        Validate a collection of site indices.

        :returns: Sorted tuple of distinct site indices
        :rtype: tuple
        :raises DomainError: if the collection is empty or an index is out
            of range
        """
        try:
            sites = tuple(sorted(set(int(s) for s in sites)))
        except (TypeError, ValueError):
            raise DomainError('Invalid sites: {!r}.'.format(sites))
        if not sites:
            raise DomainError('Invalid sites: empty selection.')
        if sites[0] < 0 or sites[-1] >= self.num_sites:
            raise DomainError('Invalid sites: {!r}.'.format(sites))
        return sites

    def dim_of(self, sites):
        return _product(self._site_dims[s] for s in sites)

    def restrict(self, sites):
        return SubsystemLayout(
            self._site_dims[s] for s in self.validate_sites(sites))

    def __eq__(self, other):
        return (isinstance(other, SubsystemLayout) and
                self._site_dims == other._site_dims)

    def __hash__(self):
        return hash(self._site_dims)

    def __repr__(self):
        return '<SubsystemLayout(site_dims={})>'.format(self._site_dims)


def _default_layout(dim):
    dim = int(dim)
    if dim > 1 and dim & (dim - 1) == 0:
        return SubsystemLayout.qubits(dim.bit_length() - 1)
    return SubsystemLayout((dim,))


class PureStateVector(object):
    """
    Normalized state vector.

    :param amplitudes: Complex amplitudes in the computational basis
    :param layout: Tensor product structure. If :code:`None`, a qubit
        layout is inferred for power-of-two dimensions.
    :type layout: :py:class:`SubsystemLayout` or None
    :param bool normalize: Normalize instead of validating the norm
    """

    def __init__(self, amplitudes, layout=None, normalize=False):
        amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
        if layout is None:
            layout = _default_layout(amplitudes.size)
        if layout.total_dim != amplitudes.size:
            raise DomainError(
                'Invalid layout {!r} for {} amplitudes.'.format(
                    layout, amplitudes.size))
        if amplitudes.size > MAX_VECTOR_DIM:
            raise ResourceError(
                'State dimension {} exceeds {}.'.format(
                    amplitudes.size, MAX_VECTOR_DIM))

        norm = np.linalg.norm(amplitudes)
        if normalize:
            if norm == 0:
                raise DomainError('Invalid amplitudes: zero vector.')
            amplitudes /= norm
        elif abs(norm - 1.) > NORM_TOLERANCE:
            raise DomainError('Invalid norm: {!r}.'.format(norm))

        amplitudes.setflags(write=False)
        self._amplitudes = amplitudes
        self._layout = layout

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def layout(self):
        return self._layout

    def tensor(self):
        return self._amplitudes.reshape(self._layout.site_dims)

    def projector(self):
        return np.outer(self._amplitudes, self._amplitudes.conj())

    def to_density(self):
        return DensityOperator(self.projector(), self._layout, check=False)

    def overlap(self, other):
        return complex(np.vdot(self._amplitudes, other.amplitudes))

    def __repr__(self):
        return '<PureStateVector(layout={!r})>'.format(self._layout)


class HermitianOperator(object):
    """
    Dense Hermitian operator.

    The stored matrix is symmetrized and read-only. Eigendecompositions are
    computed lazily and cached.

    :param matrix: Square complex matrix
    :param layout: Tensor product structure
    :type layout: :py:class:`SubsystemLayout` or None
    :param bool check: Validate the invariants of the class
    """

    def __init__(self, matrix, layout=None, check=True):
        matrix = np.array(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DomainError(
                'Invalid matrix shape: {!r}.'.format(matrix.shape))
        if layout is None:
            layout = _default_layout(matrix.shape[0])
        if layout.total_dim != matrix.shape[0]:
            raise DomainError(
                'Invalid layout {!r} for dimension {}.'.format(
                    layout, matrix.shape[0]))
        if check:
            deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
            if deviation > HERMITICITY_TOLERANCE:
                raise DomainError(
                    'Invalid matrix: not Hermitian (deviation {:.3e}).'.format(
                        deviation))

        matrix = 0.5 * (matrix + matrix.conj().T)
        matrix.setflags(write=False)
        self._matrix = matrix
        self._layout = layout

        if check:
            self._check_invariants()

    def _check_invariants(self):
        pass

    @property
    def matrix(self):
        return self._matrix

    @property
    def layout(self):
        return self._layout

    @property
    def dim(self):
        return self._matrix.shape[0]

    @functools.cached_property
    def eigensystem(self):
        w, v = scipy.linalg.eigh(self._matrix)
        w.setflags(write=False)
        v.setflags(write=False)
        return w, v

    @property
    def eigenvalues(self):
        return self.eigensystem[0]

    def spectrum(self):
        return Spectrum(self.eigenvalues)

    def trace(self):
        return float(np.trace(self._matrix).real)

    def __repr__(self):
        return '<{}(layout={!r})>'.format(type(self).__name__, self._layout)


class UnnormalizedPositiveOperator(HermitianOperator):
    """
    Positive semidefinite operator without a trace condition (e.g.
    :math:`e^{-H}`).
    """

    def _check_invariants(self):
        super()._check_invariants()
        smallest = float(self.eigenvalues[0])
        if smallest < -POSITIVITY_TOLERANCE:
            raise DomainError(
                'Invalid operator: negative eigenvalue {:.3e}.'.format(
                    smallest))


class DensityOperator(UnnormalizedPositiveOperator):
    """
    Positive semidefinite operator with unit trace.
    """

    def _check_invariants(self):
        super()._check_invariants()
        trace = self.trace()
        if abs(trace - 1.) > TRACE_TOLERANCE:
            raise DomainError('Invalid trace: {!r}.'.format(trace))

    @classmethod
    def maximally_mixed(cls, layout):
        return cls(np.eye(layout.total_dim) / layout.total_dim, layout,
                   check=False)


class Spectrum(object):
    """
    Real spectrum, sorted ascending.

    :param values: Finite real values
    """

    def __init__(self, values):
        values = np.sort(np.asarray(values, dtype=float).reshape(-1))
        if not np.all(np.isfinite(values)):
            raise DomainError('Invalid spectrum: non-finite entries.')
        values.setflags(write=False)
        self._values = values

    @property
    def values(self):
        return self._values

    def __len__(self):
        return self._values.size

    def __iter__(self):
        return iter(self._values.tolist())

    def __array__(self, dtype=None, copy=None):
        return np.array(self._values, dtype=dtype)

    def __repr__(self):
        return '<Spectrum(size={})>'.format(len(self))


# ----------------------------------------------------------------------------
def as_matrix(obj):
    """
    Dense matrix view of a state or an operator.
    """
    if isinstance(obj, PureStateVector):
        return obj.projector()
    if isinstance(obj, HermitianOperator):
        return obj.matrix
    return np.asarray(obj, dtype=complex)


def as_density(obj):
    if isinstance(obj, DensityOperator):
        return obj
    if isinstance(obj, PureStateVector):
        return obj.to_density()
    if isinstance(obj, HermitianOperator):
        return DensityOperator(obj.matrix, obj.layout)
    return DensityOperator(obj)


def as_positive(obj):
    if isinstance(obj, UnnormalizedPositiveOperator):
        return obj
    if isinstance(obj, PureStateVector):
        return obj.to_density()
    if isinstance(obj, HermitianOperator):
        return UnnormalizedPositiveOperator(obj.matrix, obj.layout)
    return UnnormalizedPositiveOperator(obj)


def _complement(layout, sites):
    sites = set(sites)
    return tuple(s for s in range(layout.num_sites) if s not in sites)


def bipartite_matrix(psi, system):
    """
    Coefficient matrix of a pure state with respect to the bipartition
    *system* | rest.

    :returns: Matrix of shape :code:`(d_system, d_rest)`
    """
    system = psi.layout.validate_sites(system)
    rest = _complement(psi.layout, system)
    return np.transpose(psi.tensor(), system + rest).reshape(
        psi.layout.dim_of(system), -1)


def partial_trace(state, keep):
    """
    Reduce a state or an operator to the sites in *keep*.

    :param state: State or operator to be reduced
    :type state: :py:class:`PureStateVector` or :py:class:`HermitianOperator`
    :param keep: Sites kept; the original site order is preserved
    :returns: Reduced operator of the same kind (a
        :py:class:`DensityOperator` for pure states)
    """
    layout = state.layout
    keep = layout.validate_sites(keep)
    d_keep = layout.dim_of(keep)
    if d_keep > MAX_OPERATOR_DIM:
        raise ResourceError(
            'Reduced dimension {} exceeds {}.'.format(d_keep,
                                                     MAX_OPERATOR_DIM))

    if isinstance(state, PureStateVector):
        psi = bipartite_matrix(state, keep)
        return DensityOperator(psi @ psi.conj().T, layout.restrict(keep),
                               check=False)

    rest = _complement(layout, keep)
    n = layout.num_sites
    perm = keep + rest + tuple(n + s for s in keep + rest)
    t = np.transpose(state.matrix.reshape(layout.site_dims * 2), perm)
    d_rest = layout.total_dim // d_keep
    reduced = np.einsum('ajbj->ab', t.reshape(d_keep, d_rest, d_keep, d_rest))
    return type(state)(reduced, layout.restrict(keep), check=False)


def embed(op, sites, layout):
    """
    Embed an operator acting on *sites* into the full *layout* by tensoring
    with the identity.

    :param op: Operator on the (sorted) sites
    :param sites: Sites the operator acts on
    :param layout: Full layout
    :type layout: :py:class:`SubsystemLayout`
    :returns: Dense matrix on the full layout
    :rtype: :py:class:`numpy.ndarray`
    """
    sites = layout.validate_sites(sites)
    matrix = as_matrix(op)
    d_keep = layout.dim_of(sites)
    if matrix.shape != (d_keep, d_keep):
        raise DomainError(
            'Invalid operator shape {!r} for sites {!r}.'.format(
                matrix.shape, sites))
    if len(sites) == layout.num_sites:
        return np.array(matrix)

    order = sites + _complement(layout, sites)
    dims = tuple(layout.site_dims[s] for s in order)
    full = np.kron(matrix, np.eye(layout.total_dim // d_keep))
    inverse = tuple(int(i) for i in np.argsort(order))
    n = layout.num_sites
    t = np.transpose(full.reshape(dims * 2),
                     inverse + tuple(n + i for i in inverse))
    return t.reshape(layout.total_dim, layout.total_dim)


def permute_sites(state, order):
    """
    Reorder the sites of a state or an operator: new site :code:`i` is old
    site :code:`order[i]`.
    """
    layout = state.layout
    order = tuple(int(s) for s in order)
    if sorted(order) != list(range(layout.num_sites)):
        raise DomainError('Invalid site order: {!r}.'.format(order))
    new_layout = SubsystemLayout(layout.site_dims[s] for s in order)

    if isinstance(state, PureStateVector):
        return PureStateVector(
            np.transpose(state.tensor(), order).reshape(-1), new_layout)

    n = layout.num_sites
    t = np.transpose(state.matrix.reshape(layout.site_dims * 2),
                     order + tuple(n + s for s in order))
    return type(state)(t.reshape(layout.total_dim, layout.total_dim),
                       new_layout, check=False)


def schmidt_spectrum(psi, system):
    """
    Squared Schmidt coefficients of *psi* across *system* | rest.

    :rtype: :py:class:`Spectrum`
    """
    s = scipy.linalg.svdvals(bipartite_matrix(psi, system))
    return Spectrum(s ** 2)


# ----------------------------------------------------------------------------
def matrix_fn(op, f, floor=None):
    """
    Apply a scalar function in the eigenbasis of a Hermitian operator.

    :param op: Hermitian input
    :type op: :py:class:`HermitianOperator` or array-like
    :param f: Vectorized real function
    :param floor: Eigenvalues below *floor* are replaced by *floor* before
        *f* is applied. Mandatory whenever *f* is singular at zero (e.g.
        :py:func:`numpy.log`).
    :type floor: float or None
    :rtype: :py:class:`HermitianOperator`
    :raises DomainError: if *op* is not Hermitian or *f* returns
        non-finite or complex values
    """
    if not isinstance(op, HermitianOperator):
        op = HermitianOperator(op)
    w, v = op.eigensystem
    if floor is not None:
        w = np.where(w < floor, floor, w)
    with np.errstate(divide='ignore', invalid='ignore'):
        fw = np.asarray(f(w), dtype=complex)
    if not np.all(np.isfinite(fw)):
        raise DomainError(
            'Invalid function values: non-finite (supply a floor).')
    if np.max(np.abs(fw.imag), initial=0.) > HERMITICITY_TOLERANCE:
        raise DomainError('Invalid function values: not real.')
    return HermitianOperator((v * fw.real) @ v.conj().T, op.layout,
                             check=False)


def matrix_log(op, floor=ZERO_EIGENVALUE_FLOOR):
    return matrix_fn(op, np.log, floor=floor)


def matrix_exp(op):
    return matrix_fn(op, np.exp)


def support_power(op, exponent, threshold=ZERO_EIGENVALUE_FLOOR):
    """
    Complex power :math:`A^z` restricted to the support of a positive
    operator; the kernel is mapped to zero.

    :rtype: :py:class:`numpy.ndarray`
    """
    w, v = op.eigensystem
    mask = w > threshold
    powers = np.zeros(w.shape, dtype=complex)
    powers[mask] = np.exp(exponent * np.log(w[mask]))
    return (v * powers) @ v.conj().T


def support_projector(op, threshold=ZERO_EIGENVALUE_FLOOR):
    w, v = op.eigensystem
    vs = v[:, w > threshold]
    return vs @ vs.conj().T


def _psd_sqrt(matrix):
    w, v = scipy.linalg.eigh(matrix)
    return (v * np.sqrt(np.clip(w, 0., None))) @ v.conj().T


# ----------------------------------------------------------------------------
def _probabilities(state):
    if isinstance(state, PureStateVector):
        return np.ones(1)
    p = as_positive(state).eigenvalues
    if p[0] < -POSITIVITY_TOLERANCE:
        raise DomainError(
            'Invalid state: negative eigenvalue {:.3e}.'.format(p[0]))
    return p[p > ZERO_EIGENVALUE_FLOOR]


def von_neumann_entropy(rho):
    """
    :math:`S(\\rho) = -\\mathrm{tr}\\, \\rho \\ln \\rho` (nats).
    """
    p = _probabilities(rho)
    return float(max(-np.sum(p * np.log(p)), 0.))


def renyi_entropy(rho, alpha):
    """
    :math:`S_\\alpha(\\rho) = \\ln \\mathrm{tr}\\, \\rho^\\alpha /
    (1 - \\alpha)` (nats).

    :raises DomainError: if :code:`alpha <= 0` or :code:`alpha == 1`
    """
    alpha = float(alpha)
    if not alpha > 0 or alpha == 1.:
        raise DomainError('Invalid alpha: {!r}.'.format(alpha))
    p = _probabilities(rho)
    return float(max(np.log(np.sum(p ** alpha)) / (1. - alpha), 0.))


def relative_entropy(rho, sigma):
    """
    :math:`S(\\rho \\| \\sigma) = \\mathrm{tr}\\, \\rho \\ln \\rho -
    \\mathrm{tr}\\, \\rho \\ln \\sigma`.

    *sigma* need not be normalized; the value is then allowed to be
    negative.

    :raises SupportError: if the support of *rho* is not contained in the
        support of *sigma*
    """
    rho = as_density(rho)
    sigma = as_positive(sigma)
    if rho.dim != sigma.dim:
        raise DomainError(
            'Invalid dimensions: {} vs. {}.'.format(rho.dim, sigma.dim))

    s, v = sigma.eigensystem
    weights = np.real(np.einsum('ik,ij,jk->k', v.conj(), rho.matrix, v))
    kernel = s <= SUPPORT_TOLERANCE
    if np.any(kernel & (weights > SUPPORT_TOLERANCE)):
        min_eigenvalue = float(np.min(s[weights > SUPPORT_TOLERANCE]))
        raise SupportError(
            'Invalid sigma: support violation (smallest eigenvalue on '
            'support {:.3e}).'.format(min_eigenvalue), min_eigenvalue)

    cross = float(np.sum(weights[~kernel] * np.log(s[~kernel])))
    return -von_neumann_entropy(rho) - cross


def gibbs_relative_entropy(rho, hamiltonian):
    """
    :math:`S(\\rho \\| e^{-H}) = -S(\\rho) + \\mathrm{tr}\\, \\rho H`,
    evaluated without exponentiating *hamiltonian*.
    """
    rho = as_density(rho)
    h = as_matrix(hamiltonian)
    if h.shape != rho.matrix.shape:
        raise DomainError(
            'Invalid dimensions: {} vs. {}.'.format(rho.dim, h.shape[0]))
    return (-von_neumann_entropy(rho) +
            float(np.real(np.einsum('ij,ji->', rho.matrix, h))))


def trace_norm(matrix):
    """
    Un-halved trace norm :math:`\\|A\\|_1` of a Hermitian matrix.
    """
    return float(np.sum(np.abs(scipy.linalg.eigvalsh(as_matrix(matrix)))))


def trace_distance(rho, sigma):
    """
    :math:`\\frac{1}{2} \\|\\rho - \\sigma\\|_1`.
    """
    a, b = as_matrix(rho), as_matrix(sigma)
    if a.shape != b.shape:
        raise DomainError(
            'Invalid dimensions: {} vs. {}.'.format(a.shape, b.shape))
    return 0.5 * trace_norm(a - b)


def fidelity(rho, sigma):
    """
    Root fidelity :math:`F(\\rho, \\sigma) = \\|\\sqrt{\\rho}
    \\sqrt{\\sigma}\\|_1`.
    """
    a, b = as_matrix(rho), as_matrix(sigma)
    if a.shape != b.shape:
        raise DomainError(
            'Invalid dimensions: {} vs. {}.'.format(a.shape, b.shape))
    return float(np.sum(scipy.linalg.svdvals(_psd_sqrt(a) @ _psd_sqrt(b))))


def uhlmann_align(psi, phi, system):
    """
    Find the operator :math:`U: E' \\to E` maximizing
    :math:`|\\langle\\psi|(I \\otimes U)|\\phi\\rangle|` for two
    purifications sharing the subsystem *system*.

    :param psi: Purification on :math:`S \\otimes E`
    :type psi: :py:class:`PureStateVector`
    :param phi: Purification on :math:`S \\otimes E'`
    :type phi: :py:class:`PureStateVector`
    :param system: Sites of :math:`S`, valid for both states; the remaining
        sites form the purifying systems
    :returns: Tuple :code:`(unitary, overlap)`, where the overlap equals the
        fidelity of the reductions on :math:`S`. The operator is unitary if
        the purifying systems have equal dimension and an isometry
        otherwise.
    """
    a = bipartite_matrix(psi, system)
    b = bipartite_matrix(phi, system)
    if a.shape[0] != b.shape[0]:
        raise DomainError(
            'Invalid system dimensions: {} vs. {}.'.format(a.shape[0],
                                                         b.shape[0]))
    cross = b.T @ a.conj()
    w, s, vh = np.linalg.svd(cross, full_matrices=(a.shape == b.shape))
    k = min(w.shape[1], vh.shape[0])
    unitary = vh.conj().T[:, :k] @ w.conj().T[:k, :]
    return unitary, float(np.sum(s))
