# Copyright 2026, Edge State Entanglement Project
"""
Constructors for the reference states the experiments run on.

Computational basis indices follow the :py:mod:`tee.edgestate.qla` ordering:
site 0 is the most significant bit.
"""

import logging
import math

import numpy as np
import scipy.stats

from tee.edgestate.error import DomainError, GeometryError, ResourceError
from tee.edgestate.qla import (MAX_VECTOR_DIM, NORM_TOLERANCE,
                               PureStateVector, SubsystemLayout)


logger = logging.getLogger(__name__)

TORIC_CODE_FLUXES = ('1', 'e', 'm', 'em')

AMPLITUDE_FILE_HEADER = np.dtype([('dim', '<u8'), ('num_sites', '<u8')])


class AnyonFluxLabel(object):
    """
    Anyonic flux threading a non-contractible loop.

    :param str label: One of :code:`1, e, m, em`
    :param float quantum_dimension: Quantum dimension :math:`d_a`
    :param float weight: Probability :math:`p_a` in superpositions
    """

    def __init__(self, label, quantum_dimension=1., weight=1.):
        if label not in TORIC_CODE_FLUXES:
            raise DomainError('Invalid flux label: {!r}.'.format(label))
        if quantum_dimension != 1.:
            raise DomainError(
                'Invalid quantum dimension: {!r}.'.format(quantum_dimension))
        if not 0. <= weight <= 1.:
            raise DomainError('Invalid weight: {!r}.'.format(weight))
        self.label = label
        self.quantum_dimension = float(quantum_dimension)
        self.weight = float(weight)

    @property
    def electric(self):
        return 'e' in self.label

    @property
    def magnetic(self):
        return 'm' in self.label

    def __repr__(self):
        return '<AnyonFluxLabel({!r}, weight={})>'.format(self.label,
                                                         self.weight)


def flux_weights(flux):
    """
    Normalize a flux specification to a list of :py:class:`AnyonFluxLabel`
    objects with weights summing to one.

    :param flux: A label, an :py:class:`AnyonFluxLabel`, a list of labels
        (uniform weights) or a dict mapping labels to weights
    """
    if isinstance(flux, AnyonFluxLabel):
        return [AnyonFluxLabel(flux.label)]
    if isinstance(flux, str):
        return [AnyonFluxLabel(flux)]
    if isinstance(flux, dict):
        items = list(flux.items())
    else:
        flux = list(flux)
        items = [(f, 1. / len(flux)) for f in flux] if flux else []
    if not items:
        raise DomainError('Invalid flux: {!r}.'.format(flux))
    total = sum(w for _, w in items)
    if abs(total - 1.) > 1e-10:
        raise DomainError('Invalid flux weights: sum {!r}.'.format(total))
    labels = [f for f, _ in items]
    if len(set(labels)) != len(labels):
        raise DomainError('Invalid flux: duplicate labels.')
    return [AnyonFluxLabel(f, weight=w) for f, w in items]


class CircuitSpec(object):
    """
    Layered local circuit :math:`V_d \\cdots V_1`.

    :param int depth: Number of layers
    :param int radius: Maximal gate support diameter :math:`w`
    :param int seed: Seed of the Haar random gates
    :param layers: Gate supports per layer; a brickwork pattern is used if
        :code:`None`
    :type layers: list of list of tuple or None
    """

    def __init__(self, depth, radius, seed, layers=None):
        depth, radius = int(depth), int(radius)
        if depth < 0 or radius < 1:
            raise DomainError(
                'Invalid circuit: depth={!r}, radius={!r}.'.format(depth,
                                                                  radius))
        if layers is not None:
            layers = [[tuple(int(s) for s in g) for g in layer]
                      for layer in layers]
            if len(layers) != depth:
                raise DomainError(
                    'Invalid layers: {} given for depth {}.'.format(
                        len(layers), depth))
        self.depth = depth
        self.radius = radius
        self.seed = int(seed)
        self.layers = layers

    @property
    def light_cone(self):
        return self.depth * self.radius

    def resolve(self, num_sites, periodic=True):
        """
        Gate supports of every layer; validated.
        """
        layers = self.layers
        if layers is None:
            layers = brickwork_layers(num_sites, self.depth, self.radius,
                                      periodic=periodic)
        for k, layer in enumerate(layers):
            seen = set()
            for gate in layer:
                if not gate or min(gate) < 0 or max(gate) >= num_sites:
                    raise DomainError('Invalid gate: {!r}.'.format(gate))
                if seen & set(gate) or len(set(gate)) != len(gate):
                    raise DomainError(
                        'Invalid layer {}: overlapping supports.'.format(k))
                if _diameter(gate, num_sites, periodic) > self.radius:
                    raise DomainError(
                        'Invalid gate {!r}: diameter exceeds {}.'.format(
                            gate, self.radius))
                seen |= set(gate)
        return layers

    def to_dict(self):
        return {'depth': self.depth, 'radius': self.radius,
                'seed': self.seed, 'layers': self.layers}


def _diameter(gate, n, periodic):
    sites = sorted(gate)
    if not periodic or len(sites) == 1:
        return sites[-1] - sites[0] + 1
    gaps = [b - a for a, b in zip(sites, sites[1:])]
    gaps.append(sites[0] + n - sites[-1])
    return n - max(gaps) + 1


def brickwork_layers(num_sites, depth, radius, periodic=True):
    """
    Brickwork of width-*radius* gates; odd layers are shifted by half a
    gate.
    """
    layers = []
    for k in range(depth):
        offset = (k % 2) * (radius // 2)
        layer = []
        for j in range(num_sites // radius):
            gate = [offset + j * radius + t for t in range(radius)]
            if gate[-1] >= num_sites:
                if not periodic:
                    continue
                gate = [s % num_sites for s in gate]
            layer.append(tuple(gate))
        layers.append(layer)
    return layers


# ----------------------------------------------------------------------------
def _bits(num_sites):
    """
    Bit table of shape :code:`(2**num_sites, num_sites)`.
    """
    if 2 ** num_sites > MAX_VECTOR_DIM:
        raise ResourceError(
            'State dimension 2^{} exceeds {}.'.format(num_sites,
                                                     MAX_VECTOR_DIM))
    index = np.arange(2 ** num_sites)
    shifts = num_sites - 1 - np.arange(num_sites)
    return (index[:, None] >> shifts[None, :]) & 1


def _mask(sites, num_sites):
    return sum(1 << (num_sites - 1 - s) for s in sites)


def _parity(values):
    values = np.array(values, dtype=np.int64)
    parity = np.zeros(values.shape, dtype=np.int64)
    while np.any(values):
        parity ^= values & 1
        values >>= 1
    return parity


def apply_x_string(amplitudes, sites, num_sites):
    index = np.arange(amplitudes.size)
    return amplitudes[index ^ _mask(sites, num_sites)]


def apply_z_string(amplitudes, sites, num_sites):
    index = np.arange(amplitudes.size)
    signs = 1 - 2 * _parity(index & _mask(sites, num_sites))
    return amplitudes * signs


def product_state(local_vectors):
    """
    Tensor product of normalized local vectors.

    :param local_vectors: One vector per site
    :rtype: :py:class:`PureStateVector`
    """
    vectors = [np.asarray(v, dtype=complex).reshape(-1)
               for v in local_vectors]
    if not vectors:
        raise DomainError('Invalid product state: no sites.')
    for v in vectors:
        if abs(np.linalg.norm(v) - 1.) > NORM_TOLERANCE:
            raise DomainError('Invalid local vector: {!r}.'.format(v))
    layout = SubsystemLayout(v.size for v in vectors)
    if layout.total_dim > MAX_VECTOR_DIM:
        raise ResourceError(
            'State dimension {} exceeds {}.'.format(layout.total_dim,
                                                   MAX_VECTOR_DIM))
    amplitudes = vectors[0]
    for v in vectors[1:]:
        amplitudes = np.kron(amplitudes, v)
    return PureStateVector(amplitudes, layout, normalize=True)


def ghz_state(n):
    n = int(n)
    if n < 2:
        raise DomainError('Invalid GHZ size: {!r}.'.format(n))
    if 2 ** n > MAX_VECTOR_DIM:
        raise ResourceError('State dimension 2^{} exceeds {}.'.format(
            n, MAX_VECTOR_DIM))
    amplitudes = np.zeros(2 ** n, dtype=complex)
    amplitudes[0] = amplitudes[-1] = 1. / math.sqrt(2.)
    return PureStateVector(amplitudes, SubsystemLayout.qubits(n))


def cz_layers(geom):
    """
    Greedy coloring of the lattice edges into layers of commuting CZ gates
    with disjoint supports.

    :returns: List of lists of site pairs
    """
    layers = []
    for edge in geom.edges():
        for layer in layers:
            if all(set(edge).isdisjoint(other) for other in layer):
                layer.append(edge)
                break
        else:
            layers.append([edge])
    return layers


def cluster_state(geom):
    """
    Graph state :math:`\\prod_{(ij)} CZ_{ij} |+\\rangle^{\\otimes N}` on the
    nearest neighbor graph of *geom*.
    """
    if geom.is_edge_lattice:
        raise GeometryError('Cluster states require one site per cell.')
    n = geom.num_sites
    bits = _bits(n)
    phase = np.zeros(bits.shape[0], dtype=np.int64)
    for layer in cz_layers(geom):
        for i, j in layer:
            phase += bits[:, i] * bits[:, j]
    amplitudes = (1 - 2 * (phase % 2)) / math.sqrt(2 ** n)
    return PureStateVector(amplitudes, SubsystemLayout.qubits(n))


# ----------------------------------------------------------------------------
def _check_toric(geom):
    if not geom.is_edge_lattice:
        raise GeometryError(
            'Toric code requires the edge placement, got {!r}.'.format(geom))
    if 2 ** geom.num_sites > MAX_VECTOR_DIM:
        raise ResourceError('State dimension 2^{} exceeds {}.'.format(
            geom.num_sites, MAX_VECTOR_DIM))


def toric_code_stabilizers(geom):
    """
    Star (X type) and plaquette (Z type) generators.

    :returns: Dict with keys :code:`stars` and :code:`plaquettes`, each a
        list of site tuples
    """
    if not geom.is_edge_lattice:
        raise GeometryError('Toric code requires the edge placement.')
    return {'stars': [tuple(sorted(geom.star(*v))) for v in geom.vertices()],
            'plaquettes': [tuple(sorted(geom.plaquette(*f)))
                           for f in geom.faces()]}


def logical_operators(geom):
    """
    Wilson loops (Z strings along lattice cycles) and 't Hooft loops (X
    strings along dual cycles).

    :code:`Zx` and :code:`Xx` wind along x and commute, as do :code:`Zy`
    and :code:`Xy`; :code:`Zx` anticommutes with :code:`Xy` and :code:`Zy`
    with :code:`Xx`. On a cylinder there is no :code:`Zx`, :code:`Xx` runs
    from one boundary to the other and :code:`Xy` is the product of the
    stars of the first column.

    :returns: Dict mapping :code:`Zx, Zy, Xx, Xy` to site tuples
    """
    if not geom.is_edge_lattice:
        raise GeometryError('Toric code requires the edge placement.')
    loops = {'Zy': tuple(geom.v(0, y) for y in range(geom.Ly)),
             'Xx': tuple(geom.v(x, 0) for x in range(geom.Lx)),
             'Xy': tuple(geom.h(0, y) for y in range(geom.Ly))}
    if geom.periodic_x:
        loops['Zx'] = tuple(geom.h(x, 0) for x in range(geom.Lx))
    return loops


def _toric_vacuum(geom):
    n = geom.num_sites
    amplitudes = np.zeros(2 ** n, dtype=complex)
    amplitudes[0] = 1.
    for star in toric_code_stabilizers(geom)['stars']:
        amplitudes = 0.5 * (amplitudes + apply_x_string(amplitudes, star, n))
    return amplitudes / np.linalg.norm(amplitudes)


def _flux_state(geom, vacuum, flux, direction):
    n = geom.num_sites
    loops = logical_operators(geom)
    if direction == 'x':
        x_loop, flip = loops['Xx'], loops['Xy']
    else:
        x_loop, flip = loops['Xy'], loops['Xx']
    sign = -1. if flux.electric else 1.
    amplitudes = vacuum + sign * apply_x_string(vacuum, x_loop, n)
    if flux.magnetic:
        amplitudes = apply_x_string(amplitudes, flip, n)
    return amplitudes / np.linalg.norm(amplitudes)


def _flux_direction(geom, flux, direction):
    if geom.periodic_x:
        direction = direction or 'x'
        if direction not in ('x', 'y'):
            raise DomainError('Invalid direction: {!r}.'.format(direction))
        return direction
    direction = direction or 'y'
    if direction != 'y':
        raise DomainError(
            'Invalid direction {!r} for a cylinder.'.format(direction))
    for f in flux_weights(flux):
        if f.electric:
            raise DomainError(
                'No {!r} flux through a cylinder with smooth '
                'boundaries.'.format(f.label))
    return direction


def toric_code_state(geom, flux='1', direction=None):
    """
    Toric code ground state with definite anyonic flux (a minimally
    entangled state), or a superposition of such states.

    The stabilizer projection of :math:`|0 \\dots 0\\rangle` fixes
    :math:`\\bar{Z}_x = \\bar{Z}_y = +1`. The flux sector along *direction*
    is selected by projecting onto an eigenspace of the 't Hooft loop
    :math:`\\bar{X}` along *direction* (electric flux for eigenvalue
    :math:`-1`) and applying the perpendicular 't Hooft loop (magnetic
    flux).

    On a cylinder the flux threads the periodic direction and the smooth
    boundaries leave the sectors :code:`1` and :code:`m`: the Wilson loop
    :math:`\\bar{Z}_y` is :math:`+1` resp. :math:`-1`.

    :param geom: Torus or cylinder with the edge placement
    :param flux: Flux specification, see :py:func:`flux_weights`;
        superpositions are :math:`\\sum_a \\sqrt{p_a} |\\psi_a\\rangle`
    :param str direction: :code:`x` or :code:`y`; defaults to :code:`x`
        on a torus and :code:`y` on a cylinder
    :rtype: :py:class:`PureStateVector`
    :raises ResourceError: if the state does not fit a dense vector
    """
    _check_toric(geom)
    direction = _flux_direction(geom, flux, direction)
    vacuum = _toric_vacuum(geom)
    amplitudes = np.zeros_like(vacuum)
    for f in flux_weights(flux):
        amplitudes += math.sqrt(f.weight) * _flux_state(geom, vacuum, f,
                                                        direction)
    logger.debug('Toric code state on {!r}, flux {!r}.'.format(geom, flux))
    return PureStateVector(amplitudes,
                           SubsystemLayout.qubits(geom.num_sites),
                           normalize=True)


def mes_superposition(geom, weights, direction=None):
    """
    :math:`\\sum_a \\sqrt{p_a} |\\psi_a\\rangle` for caller-supplied
    weights :math:`p_a`.
    """
    return toric_code_state(geom, flux=dict(weights), direction=direction)


def stabilizer_residuals(geom, psi):
    """
    :math:`\\|(g - 1)\\psi\\|` for every star and plaquette generator.
    """
    n = geom.num_sites
    a = psi.amplitudes
    stabilizers = toric_code_stabilizers(geom)
    residuals = [np.linalg.norm(apply_x_string(a, s, n) - a)
                 for s in stabilizers['stars']]
    residuals += [np.linalg.norm(apply_z_string(a, p, n) - a)
                  for p in stabilizers['plaquettes']]
    return np.array(residuals)


# ----------------------------------------------------------------------------
def _tableau_row(num_sites, x_sites=(), z_sites=()):
    row = np.zeros(2 * num_sites, dtype=np.uint8)
    for s in x_sites:
        row[s] ^= 1
    for s in z_sites:
        row[num_sites + s] ^= 1
    return row


def toric_code_tableau(geom, flux=True, direction='x'):
    """
    Binary :math:`(x|z)` generator matrix of a toric code ground state.

    :param bool flux: Fix the flux along *direction* (a minimally entangled
        state); otherwise the state of fixed :math:`\\bar{Z}_x,
        \\bar{Z}_y`. Ignored on a cylinder, whose state is the :code:`1`
        sector of :py:func:`toric_code_state`.
    """
    n = geom.num_sites
    stabilizers = toric_code_stabilizers(geom)
    loops = logical_operators(geom)
    if not geom.periodic_x:
        rows = [_tableau_row(n, x_sites=s) for s in stabilizers['stars'][1:]]
        rows += [_tableau_row(n, z_sites=p)
                 for p in stabilizers['plaquettes']]
        rows.append(_tableau_row(n, z_sites=loops['Zy']))
        return np.array(rows)
    rows = [_tableau_row(n, x_sites=s) for s in stabilizers['stars'][1:]]
    rows += [_tableau_row(n, z_sites=p)
             for p in stabilizers['plaquettes'][1:]]
    if flux:
        rows.append(_tableau_row(n, z_sites=loops['Z' + direction]))
        rows.append(_tableau_row(n, x_sites=loops['X' + direction]))
    else:
        rows.append(_tableau_row(n, z_sites=loops['Zx']))
        rows.append(_tableau_row(n, z_sites=loops['Zy']))
    return np.array(rows)


def cluster_tableau(geom):
    """
    Graph state generators :math:`X_i \\prod_{j \\sim i} Z_j`.
    """
    n = geom.num_sites
    return np.array([_tableau_row(n, x_sites=(i,),
                                  z_sites=geom.neighbors(i))
                     for i in range(n)])


def gf2_rank(matrix):
    """
    Rank of a binary matrix over GF(2) by row reduction.
    """
    m = np.array(matrix, dtype=np.uint8) % 2
    rank = 0
    rows, cols = m.shape
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, col]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(rows):
            if r != rank and m[r, col]:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def stabilizer_entropy(tableau, region):
    """
    Entanglement entropy (nats) of a stabilizer state from its generator
    matrix: :math:`S(A) = (\\mathrm{rank}\\, G|_A - |A|) \\ln 2`, with
    :math:`G|_A` the generators restricted to the columns of :math:`A`.

    :param tableau: Binary matrix of shape :code:`(N, 2N)` with independent
        rows
    :param region: Sites of :math:`A`
    """
    tableau = np.asarray(tableau, dtype=np.uint8)
    n = tableau.shape[1] // 2
    if tableau.shape != (n, 2 * n):
        raise DomainError(
            'Invalid tableau shape: {!r}.'.format(tableau.shape))
    sites = sorted(set(region))
    columns = sites + [n + s for s in sites]
    return (gf2_rank(tableau[:, columns]) - len(sites)) * math.log(2.)


# ----------------------------------------------------------------------------
def random_low_depth_state(layout, spec, periodic=True):
    """
    :math:`V_d \\cdots V_1 |0\\rangle^{\\otimes N}` with Haar random gates
    drawn from :code:`numpy.random.default_rng(spec.seed)`.

    :param layout: Layout or number of qubits
    :type layout: :py:class:`SubsystemLayout` or int
    :param spec: Circuit
    :type spec: :py:class:`CircuitSpec`
    :param bool periodic: Sites form a ring (brickwork and diameters wrap)
    """
    if not isinstance(layout, SubsystemLayout):
        layout = SubsystemLayout.qubits(layout)
    if layout.total_dim > MAX_VECTOR_DIM:
        raise ResourceError('State dimension {} exceeds {}.'.format(
            layout.total_dim, MAX_VECTOR_DIM))
    layers = spec.resolve(layout.num_sites, periodic=periodic)
    rng = np.random.default_rng(spec.seed)

    n = layout.num_sites
    psi = np.zeros(layout.site_dims, dtype=complex)
    psi[(0,) * n] = 1.
    for layer in layers:
        for gate in layer:
            dim = layout.dim_of(gate)
            u = scipy.stats.unitary_group.rvs(dim, random_state=rng)
            psi = _apply_gate(psi, u, gate, layout)

    logger.debug('Random circuit: depth={}, radius={}, seed={}.'.format(
        spec.depth, spec.radius, spec.seed))
    return PureStateVector(psi.reshape(-1), layout, normalize=True)


def _apply_gate(psi, u, sites, layout):
    sites = list(sites)
    rest = [s for s in range(layout.num_sites) if s not in sites]
    t = np.transpose(psi, sites + rest)
    shape = t.shape
    t = (u @ t.reshape(u.shape[0], -1)).reshape(shape)
    return np.transpose(t, np.argsort(sites + rest))


# ----------------------------------------------------------------------------
def save_amplitudes(path, psi):
    """
    Write amplitudes as little-endian interleaved doubles (re, im) after a
    16 byte header holding the dimension and the number of sites.
    """
    header = np.array([(psi.amplitudes.size, psi.layout.num_sites)],
                      dtype=AMPLITUDE_FILE_HEADER)
    with open(path, 'wb') as ofd:
        ofd.write(header.tobytes())
        ofd.write(psi.amplitudes.astype('<c16').tobytes())


def load_amplitudes(path, layout=None):
    with open(path, 'rb') as ifd:
        raw = ifd.read()
    if len(raw) < AMPLITUDE_FILE_HEADER.itemsize:
        raise DomainError('Invalid amplitude file: {!r}.'.format(path))
    header = np.frombuffer(raw[:AMPLITUDE_FILE_HEADER.itemsize],
                           dtype=AMPLITUDE_FILE_HEADER)[0]
    amplitudes = np.frombuffer(raw[AMPLITUDE_FILE_HEADER.itemsize:],
                               dtype='<c16')
    dim, num_sites = int(header['dim']), int(header['num_sites'])
    if amplitudes.size != dim:
        raise DomainError(
            'Invalid amplitude file: {} of {} amplitudes.'.format(
                amplitudes.size, dim))
    if layout is None:
        if dim != 2 ** num_sites:
            raise DomainError('Invalid amplitude file: layout required.')
        layout = SubsystemLayout.qubits(num_sites)
    return PureStateVector(amplitudes, layout)
