# Copyright 2026, Edge State Entanglement Project
"""
Recovery channels: (rotated) Petz maps, the Fawzi-Renner fidelity check
and the chained reconstruction of a boundary state from its marginals.

Channels are represented by Choi matrices
:math:`J = \\sum_{ij} |i\\rangle\\langle j| \\otimes \\Delta(|i\\rangle
\\langle j|)` with the input factor first.
"""

import concurrent.futures
import logging
import math

import numpy as np

from tee.edgestate.entropy import conditional_mutual_information
from tee.edgestate.error import DomainError
from tee.edgestate.qla import (DensityOperator, SubsystemLayout, as_density,
                               fidelity, partial_trace, permute_sites,
                               support_power, support_projector, trace_norm)


logger = logging.getLogger(__name__)

CHANNEL_TOLERANCE = 1e-9
MARGINAL_TOLERANCE = 1e-9
BOUND_SLACK = 1e-7

DEFAULT_T_GRID = tuple(np.arange(-5., 5. + 0.125, 0.25))


class QuantumChannel(object):
    """
    Completely positive trace preserving map given by its Choi matrix.

    :param choi: Choi matrix of shape :code:`(d_in*d_out, d_in*d_out)`
    :param input_layout: Input layout
    :param output_layout: Output layout
    :param str label: Direction label, e.g. :code:`B->BC`
    :param output_sites: Positions of the output factors in the state the
        channel was built from
    :param bool check: Validate positivity and trace preservation
    """

    def __init__(self, choi, input_layout, output_layout, label='',
                 output_sites=None, check=True):
        d_in, d_out = input_layout.total_dim, output_layout.total_dim
        choi = np.asarray(choi, dtype=complex)
        if choi.shape != (d_in * d_out,) * 2:
            raise DomainError(
                'Invalid Choi matrix shape: {!r}.'.format(choi.shape))
        self.choi = 0.5 * (choi + choi.conj().T)
        self.input_layout = input_layout
        self.output_layout = output_layout
        self.label = label
        self.output_sites = output_sites
        if check:
            self.validate()

    @property
    def _choi4(self):
        d_in, d_out = (self.input_layout.total_dim,
                       self.output_layout.total_dim)
        return self.choi.reshape(d_in, d_out, d_in, d_out)

    def validate(self, tolerance=CHANNEL_TOLERANCE):
        """
        :raises DomainError: if the Choi matrix is not positive or the map
            not trace preserving
        """
        smallest = float(np.linalg.eigvalsh(self.choi)[0])
        if smallest < -tolerance:
            raise DomainError(
                'Invalid channel: Choi eigenvalue {:.3e}.'.format(smallest))
        reduced = np.einsum('iojo->ij', self._choi4)
        deviation = float(np.max(np.abs(
            reduced - np.eye(self.input_layout.total_dim))))
        if deviation > tolerance:
            raise DomainError(
                'Invalid channel: not trace preserving ({:.3e}).'.format(
                    deviation))

    def apply(self, state, sites=None):
        """
        Apply the channel to *sites* of *state*.

        :returns: Tuple :code:`(rho, rest)`: the output factors come first
            in *rho*, followed by the untouched sites listed in *rest* (in
            their original order)
        """
        rho = as_density(state)
        layout = rho.layout
        sites = tuple(range(layout.num_sites)) if sites is None else \
            tuple(int(s) for s in sites)
        if layout.restrict(sites) != self.input_layout or \
                len(set(sites)) != len(sites):
            raise DomainError(
                'Invalid sites {!r} for input layout {!r}.'.format(
                    sites, self.input_layout))
        rest = tuple(s for s in range(layout.num_sites) if s not in sites)
        rho = permute_sites(rho, sites + rest)

        d_in, d_out = (self.input_layout.total_dim,
                       self.output_layout.total_dim)
        d_rest = layout.total_dim // d_in
        r4 = rho.matrix.reshape(d_in, d_rest, d_in, d_rest)
        out = np.einsum('iajb,iojp->oapb', r4, self._choi4).reshape(
            d_out * d_rest, d_out * d_rest)
        out_layout = SubsystemLayout(
            self.output_layout.site_dims +
            tuple(layout.site_dims[s] for s in rest))
        return DensityOperator(out, out_layout, check=False), rest

    def __repr__(self):
        return '<QuantumChannel({!r}, {} -> {})>'.format(
            self.label, self.input_layout.total_dim,
            self.output_layout.total_dim)


def rotated_petz_map(rho_B, rho_BC, t=0., conditioning=None):
    """
    Rotated Petz map :math:`\\Delta_t(X) = \\rho_{BC}^{(1+it)/2}
    (\\rho_B^{-(1+it)/2} X \\rho_B^{-(1-it)/2} \\otimes I_C)
    \\rho_{BC}^{(1-it)/2}`.

    Powers are taken on the supports. Inputs orthogonal to
    :math:`\\mathrm{supp}\\, \\rho_B` are mapped to :math:`\\rho_{BC}`.

    :param rho_B: Conditioning marginal
    :param rho_BC: Joint state
    :param float t: Rotation parameter
    :param conditioning: Positions of :math:`B` within *rho_BC*; defaults
        to the leading sites
    :returns: Channel with output factors ordered :math:`B` then :math:`C`
    :rtype: :py:class:`QuantumChannel`
    :raises DomainError: if *rho_B* is not the marginal of *rho_BC*
    """
    rho_B, rho_BC = as_density(rho_B), as_density(rho_BC)
    nb = rho_B.layout.num_sites
    if conditioning is None:
        conditioning = tuple(range(nb))
    conditioning = rho_BC.layout.validate_sites(conditioning)
    if len(conditioning) != nb:
        raise DomainError('Invalid conditioning sites: {!r}.'.format(
            conditioning))
    rest = tuple(s for s in range(rho_BC.layout.num_sites)
                 if s not in conditioning)
    order = conditioning + rest
    rho_BC = permute_sites(rho_BC, order)

    marginal = partial_trace(rho_BC, range(nb))
    mismatch = float(np.max(np.abs(marginal.matrix - rho_B.matrix)))
    if mismatch > MARGINAL_TOLERANCE:
        raise DomainError(
            'Invalid marginal: deviation {:.3e}.'.format(mismatch))

    d_B, d_out = marginal.dim, rho_BC.dim
    s = support_power(rho_BC, 0.5 * (1. + 1j * t))
    k = support_power(marginal, -0.5 * (1. + 1j * t))
    kraus = np.einsum('obc,bi->oci', s.reshape(d_out, d_B, -1), k)
    choi = np.einsum('oci,pcj->iojp', kraus, kraus.conj()).reshape(
        d_B * d_out, d_B * d_out)
    perp = np.eye(d_B) - support_projector(marginal)
    choi += np.kron(perp.T, rho_BC.matrix)

    return QuantumChannel(choi, marginal.layout, rho_BC.layout,
                          label='B->BC' if t == 0 else 'B->BC(t={:g})'.format(
                              t),
                          output_sites=order)


def petz_map(rho_B, rho_BC, conditioning=None):
    """
    Petz recovery map :math:`\\Delta(X) = \\rho_{BC}^{1/2}
    (\\rho_B^{-1/2} X \\rho_B^{-1/2} \\otimes I_C) \\rho_{BC}^{1/2}`.
    """
    return rotated_petz_map(rho_B, rho_BC, 0., conditioning=conditioning)


# ----------------------------------------------------------------------------
def _positions(region):
    return tuple(sorted(int(s) for s in region))


def _reorder(rho, labels):
    """
    Sort the factors of *rho*, currently carrying the site *labels*, by
    label.
    """
    order = sorted(range(len(labels)), key=lambda i: labels[i])
    return permute_sites(rho, order)


def recover(rho_ABC, A, B, C, t=0.):
    """
    :math:`\\Delta_{B \\to BC}(\\rho_{AB})` with factors in the site order
    of *rho_ABC*.
    """
    rho = as_density(rho_ABC)
    A, B, C = _positions(A), _positions(B), _positions(C)
    rho_BC = partial_trace(rho, B + C)
    local_b = [i for i, s in enumerate(sorted(B + C)) if s in set(B)]
    channel = rotated_petz_map(partial_trace(rho, B), rho_BC, t,
                               conditioning=local_b)

    rho_AB = partial_trace(rho, A + B)
    ab = sorted(A + B)
    b_in_ab = [ab.index(s) for s in B]
    out, rest = channel.apply(rho_AB, b_in_ab)
    bc = sorted(B + C)
    labels = [bc[i] for i in channel.output_sites] + [ab[i] for i in rest]
    return _reorder(out, labels)


class FawziRennerRecord(object):
    """
    Outcome of :py:func:`fawzi_renner_check`.
    """

    def __init__(self, cmi, best_fidelity, best_t, petz_fidelity):
        self.cmi = float(cmi)
        self.best_fidelity = float(best_fidelity)
        self.best_t = float(best_t)
        self.petz_fidelity = float(petz_fidelity)

    @property
    def bound(self):
        return -2. * math.log(max(self.best_fidelity, 1e-300))

    @property
    def bound_satisfied(self):
        return self.cmi >= self.bound - BOUND_SLACK

    @property
    def status(self):
        return 'witnessed' if self.bound_satisfied else 'unwitnessed'

    def to_dict(self):
        return {'cmi': self.cmi, 'best_fidelity': self.best_fidelity,
                'best_t': self.best_t, 'petz_fidelity': self.petz_fidelity,
                'bound': self.bound,
                'bound_satisfied': self.bound_satisfied,
                'status': self.status}


def fawzi_renner_check(rho_ABC, A, B, C, t_grid=DEFAULT_T_GRID,
                       max_workers=None):
    """
    Compare :math:`I(A:C|B)` with :math:`-2 \\ln F(\\rho_{ABC},
    \\Delta_t(\\rho_{AB}))` maximized over the rotated Petz maps of
    *t_grid*. A violated inequality only means that no grid element
    witnesses the bound.

    :rtype: :py:class:`FawziRennerRecord`
    """
    rho = as_density(rho_ABC)
    grid = sorted(set(float(t) for t in t_grid) | {0.})

    def evaluate(t):
        return fidelity(rho, recover(rho, A, B, C, t=t))

    with concurrent.futures.ThreadPoolExecutor(
            max_workers=max_workers) as executor:
        fidelities = list(executor.map(evaluate, grid))
    best = int(np.argmax(fidelities))
    record = FawziRennerRecord(
        conditional_mutual_information(rho, A, B, C), fidelities[best],
        grid[best], fidelities[grid.index(0.)])
    if not record.bound_satisfied:
        logger.warning(
            'Recovery bound unwitnessed: cmi={:.6g}, -2 ln F={:.6g}.'.format(
                record.cmi, record.bound))
    return record


# ----------------------------------------------------------------------------
class ReconstructionDiagnostics(object):

    def __init__(self, d_AB, d_BC, cmi_reconstructed, fidelity):
        self.d_AB = float(d_AB)
        self.d_BC = float(d_BC)
        self.cmi_reconstructed = float(cmi_reconstructed)
        self.fidelity = float(fidelity)

    def to_dict(self):
        return {'d_AB': self.d_AB, 'd_BC': self.d_BC,
                'cmi_reconstructed': self.cmi_reconstructed,
                'fidelity': self.fidelity}


def chained_reconstruction(rho_X, A, B1, B2, C):
    """
    :math:`\\tilde{\\rho}' = \\Delta_{B_2 \\to B_2 C} \\circ
    \\Delta_{B_1 \\to A B_1}(\\rho_{B_1 B_2})`, where both maps are Petz
    maps of the marginals of *rho_X*.

    :param rho_X: State on :math:`A B_1 B_2 C` (and possibly more sites)
    :returns: Tuple :code:`(rho_tilde, diagnostics)`; *rho_tilde* lives on
        the sorted sites of :math:`A B_1 B_2 C`
    """
    rho = as_density(rho_X)
    A, B1, B2, C = (_positions(r) for r in (A, B1, B2, C))
    regions = A + B1 + B2 + C
    if len(set(regions)) != len(regions) or not all((A, B1, B2, C)):
        raise DomainError('Invalid reconstruction regions.')
    support = sorted(regions)
    rho = partial_trace(rho, support)
    local = {s: i for i, s in enumerate(support)}
    A, B1, B2, C = ([local[s] for s in r] for r in (A, B1, B2, C))
    B = sorted(B1 + B2)

    def marginal(*parts):
        return partial_trace(rho, sorted(sum(parts, [])))

    def conditioning(within, part):
        within = sorted(within)
        return [within.index(s) for s in part]

    delta_1 = petz_map(marginal(B1), marginal(A, B1),
                       conditioning=conditioning(A + B1, B1))
    delta_2 = petz_map(marginal(B2), marginal(B2, C),
                       conditioning=conditioning(B2 + C, B2))

    labels = list(B)
    state = marginal(B1, B2)
    out, rest = delta_1.apply(state, conditioning(B, B1))
    ab1 = sorted(A + B1)
    labels = [ab1[i] for i in delta_1.output_sites] + \
        [labels[i] for i in rest]
    out, rest = delta_2.apply(out, [labels.index(s) for s in B2])
    b2c = sorted(B2 + C)
    labels = [b2c[i] for i in delta_2.output_sites] + \
        [labels[i] for i in rest]
    rho_tilde = _reorder(out, labels)

    ab, bc = sorted(A + B), sorted(B + C)
    diagnostics = ReconstructionDiagnostics(
        trace_norm(partial_trace(rho_tilde, ab).matrix -
                   partial_trace(rho, ab).matrix),
        trace_norm(partial_trace(rho_tilde, bc).matrix -
                   partial_trace(rho, bc).matrix),
        conditional_mutual_information(rho_tilde, A, B, C),
        fidelity(rho, rho_tilde))
    logger.debug('Chained reconstruction: {!r}.'.format(
        diagnostics.to_dict()))
    return rho_tilde, diagnostics


def recovered_edge_state(rho_X, chain):
    """
    Chained reconstruction along a localized chain with :math:`A = X_1`,
    :math:`B_1 = X_2`, :math:`B_2 = X_3 \\dots X_{m-1}` and :math:`C = X_m`.
    """
    if chain.m < 4:
        raise DomainError('Invalid chain: m={} (at least 4).'.format(
            chain.m))
    m = chain.m
    return chained_reconstruction(
        rho_X, chain.sites_of((0,)), chain.sites_of((1,)),
        chain.sites_of(range(2, m - 1)), chain.sites_of((m - 1,)))
