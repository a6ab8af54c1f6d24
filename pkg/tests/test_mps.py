# Copyright 2026, Edge State Entanglement Project
"""
Matrix product state test facilities.
"""

import math
import unittest

import numpy as np

from tee.edgestate.entropy import region_renyi_entropy
from tee.edgestate.error import AnalysisError, DomainError, ResourceError
from tee.edgestate.mps import (
    BoundaryRing, MatrixProductState, chain_renyi_entropy,
    convergence_curve, entrywise_bound, gauge_transform,
    limit_reduced_first_m, mps_to_dense, random_mps, random_ring_tensors,
    reduced_first_m, renyi_area_fit, replica_transfer, ring_renyi_entropy,
    ring_tensors_from_dict)
from tee.edgestate.qla import partial_trace, trace_norm
from tee.edgestate.states import ghz_state


PAULIS = np.array([[[1, 0], [0, 1]], [[0, 1], [1, 0]],
                   [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]])


def pauli_channel_mps(p):
    tensors = np.sqrt(np.asarray(p))[:, None, None] * PAULIS
    return MatrixProductState(tensors, [1., 0.],
                              [math.cos(.3), math.sin(.3)])


def ghz_mps():
    tensors = np.array([[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
    return MatrixProductState(tensors, [1., 1.], [1., 1.])


class TransferOperatorTestCase(unittest.TestCase):

    def test_pauli_channel(self):
        T = pauli_channel_mps((.6, .3, .05, .05)).transfer
        np.testing.assert_allclose(np.abs(T.eigenvalues), [1., .8, .3, .3],
                                   atol=1e-12)
        self.assertAlmostEqual(T.gap, .2)
        T.check_unique()

    def test_reshuffled(self):
        R = pauli_channel_mps((.6, .3, .05, .05)).transfer.reshuffled()
        np.testing.assert_allclose(R, R.conj().T, atol=1e-12)
        np.testing.assert_allclose(np.linalg.eigvalsh(R), [.1, .1, .6, 1.2],
                                   atol=1e-12)

    def test_degenerate(self):
        with self.assertRaises(AnalysisError):
            ghz_mps().transfer.check_unique()

    def test_invalid(self):
        with self.assertRaises(DomainError):
            MatrixProductState(np.zeros((2, 2, 3)), [1., 0.], [1., 0.])
        with self.assertRaises(DomainError):
            MatrixProductState(np.ones((2, 2, 2)), [0., 0.], [1., 0.])
        with self.assertRaises(DomainError):
            MatrixProductState(np.ones((2, 2, 2)), [1.], [1., 0.])

# class TransferOperatorTestCase


class ReducedStateTestCase(unittest.TestCase):

    def setUp(self):
        self.mps = random_mps(2, 3, seed=61)

    # setUp ()

    def test_dense(self):
        rho = reduced_first_m(self.mps, 6, 2)
        dense = partial_trace(mps_to_dense(self.mps, 6), [0, 1])
        np.testing.assert_allclose(rho.matrix, dense.matrix, atol=1e-10)

    def test_ghz(self):
        psi = mps_to_dense(ghz_mps(), 3)
        np.testing.assert_allclose(psi.amplitudes, ghz_state(3).amplitudes,
                                   atol=1e-12)

    def test_gauge(self):
        rng = np.random.default_rng(62)
        X = rng.normal(size=(3, 3)) + 3. * np.eye(3)
        other = gauge_transform(self.mps, X)
        np.testing.assert_allclose(reduced_first_m(other, 7, 2).matrix,
                                   reduced_first_m(self.mps, 7, 2).matrix,
                                   atol=1e-10)

    def test_limit(self):
        mps = self.mps.normalized()
        limit = limit_reduced_first_m(mps, 2)
        rho = reduced_first_m(mps, 200, 2)
        np.testing.assert_allclose(rho.matrix, limit.matrix, atol=1e-8)
        self.assertAlmostEqual(np.trace(limit.matrix).real, 1.)

    def test_entrywise_bound(self):
        bound = entrywise_bound(self.mps, 8, 12, 2)
        self.assertTrue(bound.holds)
        self.assertLessEqual(bound.max_ratio, 1. + 1e-12)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            reduced_first_m(self.mps, 3, 4)
        with self.assertRaises(ResourceError):
            mps_to_dense(self.mps, 19)

    def test_dict(self):
        other = MatrixProductState.from_dict(self.mps.to_dict())
        np.testing.assert_allclose(other.tensors, self.mps.tensors)
        with self.assertRaises(DomainError):
            MatrixProductState.from_dict({'tensors': []})

# class ReducedStateTestCase


class ConvergenceTestCase(unittest.TestCase):

    def test_slope(self):
        m = 3
        curve = convergence_curve(pauli_channel_mps((.6, .3, .05, .05)), m,
                                  range(m + 4, m + 15))
        self.assertAlmostEqual(curve.predicted_slope, math.log(.8))
        self.assertLess(curve.relative_deviation, .05)
        self.assertEqual(len(curve.rows()), 11)

    def test_reference(self):
        mps = pauli_channel_mps((.6, .3, .05, .05))
        curve = convergence_curve(mps, 2, [4, 6])
        limit = limit_reduced_first_m(mps, 2).matrix
        for n, distance in zip([4, 6], curve.distances):
            self.assertAlmostEqual(
                distance,
                trace_norm(reduced_first_m(mps, n, 2).matrix - limit))
        self.assertGreater(curve.distances[-1], 0.)

    def test_degenerate(self):
        with self.assertRaises(AnalysisError):
            convergence_curve(ghz_mps(), 1, [4, 5, 6])

    def test_product(self):
        mps = MatrixProductState([[[.6]], [[.8]]], [1.], [1.])
        curve = convergence_curve(mps, 2, [3, 4, 5])
        for distance in curve.distances:
            self.assertAlmostEqual(distance, 0., places=12)
        self.assertIsNone(curve.slope)
        self.assertIsNone(curve.relative_deviation)

# class ConvergenceTestCase


class ReplicaTestCase(unittest.TestCase):

    def test_ghz_chain(self):
        self.assertAlmostEqual(chain_renyi_entropy(ghz_mps(), 4, 1, 2),
                               math.log(2.))

    def test_first_replica(self):
        mps = random_mps(2, 2, seed=63)
        np.testing.assert_allclose(replica_transfer(mps.tensors, 1).matrix,
                                   mps.transfer.matrix, atol=1e-12)

    def test_chain_dense(self):
        mps = random_mps(2, 2, seed=64)
        psi = mps_to_dense(mps, 6)
        self.assertAlmostEqual(chain_renyi_entropy(mps, 6, 3, 2),
                               region_renyi_entropy(psi, [0, 1, 2], 2),
                               places=8)

    def test_limits(self):
        with self.assertRaises(ResourceError):
            replica_transfer(np.zeros((2, 4, 4)), 4)
        with self.assertRaises(DomainError):
            replica_transfer(np.zeros((2, 2, 2)), 0)
        with self.assertRaises(DomainError):
            chain_renyi_entropy(ghz_mps(), 4, 1, 1)

# class ReplicaTestCase


class BoundaryRingTestCase(unittest.TestCase):

    def test_dense(self):
        edge, corner = random_ring_tensors(2, 2, 2, seed=65)
        ring = BoundaryRing(edge, corner, (2, 2))
        self.assertEqual(ring.num_sites, 6)
        self.assertEqual(ring.n_corners, 2)
        psi = ring.to_dense()
        inner = list(range(0, 12, 2))
        for alpha in (2, 3):
            self.assertAlmostEqual(ring_renyi_entropy(ring, alpha),
                                   region_renyi_entropy(psi, inner, alpha),
                                   places=8)

    def test_area_fit(self):
        edge, corner = random_ring_tensors(3, 3, 2, seed=66)
        for alpha in (2, 3):
            fit = renyi_area_fit(edge, corner, 2, range(20, 61, 4), alpha)
            self.assertLess(fit.relative_deviation, .01)
            self.assertGreater(fit.slope, 0.)
            self.assertEqual(len(fit.rows()), 11)

    def test_invalid(self):
        edge, corner = random_ring_tensors(2, 2, 2, seed=67)
        with self.assertRaises(DomainError):
            BoundaryRing(edge, corner[:, :1], (2, 2))
        with self.assertRaises(DomainError):
            BoundaryRing(edge, corner, ())
        with self.assertRaises(DomainError):
            renyi_area_fit(edge, corner, 2, [8, 8], 2)
        with self.assertRaises(DomainError):
            ring_tensors_from_dict({'edge': [[1., 0.]]})

# class BoundaryRingTestCase


if __name__ == '__main__':
    unittest.main()

# ----- END OF test_mps.py -----
