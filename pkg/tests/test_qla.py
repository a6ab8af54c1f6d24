# Copyright 2026, Edge State Entanglement Project
"""
Quantum linear algebra test facilities.
"""

import math
import unittest

import numpy as np

from tee.edgestate.error import DomainError, ResourceError, SupportError
from tee.edgestate.qla import (
    DensityOperator, HermitianOperator, PureStateVector, SubsystemLayout,
    bipartite_matrix, embed, fidelity, gibbs_relative_entropy, matrix_fn,
    matrix_log, partial_trace, permute_sites, relative_entropy,
    renyi_entropy, schmidt_spectrum, support_power, trace_distance,
    trace_norm, uhlmann_align, von_neumann_entropy)


X = np.array([[0., 1.], [1., 0.]])
Z = np.diag([1., -1.])
PLUS = np.array([1., 1.]) / math.sqrt(2.)


def random_state(num_sites, seed):
    rng = np.random.default_rng(seed)
    amplitudes = (rng.normal(size=2 ** num_sites) +
                  1j * rng.normal(size=2 ** num_sites))
    return PureStateVector(amplitudes, normalize=True)


def random_density(dim, seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return DensityOperator(rho / np.trace(rho).real)


def bell_state():
    return PureStateVector(np.array([1., 0., 0., 1.]) / math.sqrt(2.))


class LayoutTestCase(unittest.TestCase):

    def test_qubits(self):
        layout = SubsystemLayout.qubits(3)
        self.assertEqual(layout.site_dims, (2, 2, 2))
        self.assertEqual(layout.total_dim, 8)
        self.assertEqual(layout.validate_sites([2, 0, 2]), (0, 2))

    def test_invalid_sites(self):
        layout = SubsystemLayout((2, 3))
        with self.assertRaises(DomainError):
            layout.validate_sites([])
        with self.assertRaises(DomainError):
            layout.validate_sites([2])
        with self.assertRaises(DomainError):
            SubsystemLayout([])

    def test_inferred_layout(self):
        self.assertEqual(PureStateVector([1., 0., 0.]).layout.site_dims,
                         (3,))
        self.assertEqual(PureStateVector(np.eye(8)[0]).layout.num_sites, 3)

# class LayoutTestCase


class OperatorTestCase(unittest.TestCase):

    def test_norm(self):
        with self.assertRaises(DomainError):
            PureStateVector([1., 1.])
        psi = PureStateVector([3., 4.], normalize=True)
        np.testing.assert_allclose(psi.amplitudes, [.6, .8])

    def test_density_invariants(self):
        with self.assertRaises(DomainError):
            DensityOperator(np.eye(2))
        with self.assertRaises(DomainError):
            DensityOperator(np.array([[.5, 1.], [0., .5]]))
        with self.assertRaises(DomainError):
            DensityOperator(np.diag([1.5, -.5]))
        rho = DensityOperator(np.diag([.25, .75]))
        np.testing.assert_allclose(rho.spectrum().values, [.25, .75])

    def test_hermitian_symmetrized(self):
        h = HermitianOperator(np.array([[1., 1j], [-1j, 2.]]))
        np.testing.assert_allclose(h.matrix, h.matrix.conj().T)
        self.assertAlmostEqual(h.trace(), 3.)

# class OperatorTestCase


class PartialTraceTestCase(unittest.TestCase):

    def test_product_state(self):
        psi = PureStateVector(np.kron(np.array([1., 0.]), PLUS))
        rho = partial_trace(psi, [1])
        np.testing.assert_allclose(rho.matrix, np.outer(PLUS, PLUS),
                                   atol=1e-12)
        self.assertEqual(rho.layout, SubsystemLayout.qubits(1))

    def test_pure_matches_density(self):
        psi = random_state(4, seed=1)
        for keep in ([0], [1, 3], [0, 2, 3]):
            np.testing.assert_allclose(
                partial_trace(psi, keep).matrix,
                partial_trace(psi.to_density(), keep).matrix, atol=1e-12)

    def test_trace_preserved(self):
        rho = random_density(16, seed=2)
        self.assertAlmostEqual(partial_trace(rho, [1, 2]).trace(), 1.,
                               places=10)

    def test_resource_limit(self):
        psi = PureStateVector(np.eye(2 ** 13)[0])
        with self.assertRaises(ResourceError):
            partial_trace(psi, range(13))

# class PartialTraceTestCase


class EmbedTestCase(unittest.TestCase):

    def test_single_site(self):
        layout = SubsystemLayout.qubits(3)
        np.testing.assert_allclose(embed(Z, [1], layout),
                                   np.kron(np.kron(np.eye(2), Z), np.eye(2)))

    def test_non_contiguous(self):
        layout = SubsystemLayout.qubits(3)
        np.testing.assert_allclose(embed(np.kron(X, Z), [0, 2], layout),
                                   np.kron(np.kron(X, np.eye(2)), Z))

    def test_invalid_shape(self):
        with self.assertRaises(DomainError):
            embed(np.eye(4), [0], SubsystemLayout.qubits(2))

# class EmbedTestCase


class PermuteTestCase(unittest.TestCase):

    def test_swap(self):
        psi = PureStateVector([0., 1., 0., 0.])
        np.testing.assert_allclose(permute_sites(psi, (1, 0)).amplitudes,
                                   [0., 0., 1., 0.])

    def test_operator(self):
        rho = random_density(8, seed=3)
        order = (2, 0, 1)
        lhs = permute_sites(rho, order)
        psi = random_state(3, seed=4)
        np.testing.assert_allclose(
            partial_trace(lhs, [0]).matrix,
            partial_trace(rho, [2]).matrix, atol=1e-12)
        np.testing.assert_allclose(
            permute_sites(psi, order).to_density().matrix,
            permute_sites(psi.to_density(), order).matrix, atol=1e-12)

    def test_invalid_order(self):
        with self.assertRaises(DomainError):
            permute_sites(random_state(2, seed=5), (0, 0))

# class PermuteTestCase


class EntropyTestCase(unittest.TestCase):

    def test_bell(self):
        psi = bell_state()
        np.testing.assert_allclose(schmidt_spectrum(psi, [0]).values,
                                   [.5, .5])
        rho = partial_trace(psi, [0])
        self.assertAlmostEqual(von_neumann_entropy(rho), math.log(2.))
        self.assertAlmostEqual(renyi_entropy(rho, 2), math.log(2.))
        self.assertAlmostEqual(von_neumann_entropy(psi), 0.)

    def test_renyi_limits(self):
        rho = DensityOperator(np.diag([.1, .2, .7]))
        s1 = von_neumann_entropy(rho)
        self.assertAlmostEqual(renyi_entropy(rho, 1. + 1e-7), s1, places=5)
        self.assertGreater(renyi_entropy(rho, .5), s1)
        self.assertLess(renyi_entropy(rho, 2.), s1)

    def test_invalid_alpha(self):
        rho = DensityOperator(np.diag([.5, .5]))
        for alpha in (0., -1., 1.):
            with self.assertRaises(DomainError):
                renyi_entropy(rho, alpha)

# class EntropyTestCase


class RelativeEntropyTestCase(unittest.TestCase):

    def test_identical(self):
        rho = random_density(4, seed=6)
        self.assertAlmostEqual(relative_entropy(rho, rho), 0., places=10)

    def test_diagonal(self):
        rho = DensityOperator(np.diag([.5, .5]))
        sigma = DensityOperator(np.diag([.25, .75]))
        reference_result = (-math.log(2.) - .5 * math.log(.25) -
                            .5 * math.log(.75))
        self.assertAlmostEqual(relative_entropy(rho, sigma),
                               reference_result)

    def test_support_violation(self):
        rho = DensityOperator(np.diag([1., 0.]))
        sigma = DensityOperator(np.diag([0., 1.]))
        with self.assertRaises(SupportError) as ctx:
            relative_entropy(rho, sigma)
        self.assertAlmostEqual(ctx.exception.min_eigenvalue, 0.)
        self.assertIsInstance(ctx.exception, DomainError)

    def test_reduced_support(self):
        rho = DensityOperator(np.diag([.5, .5, 0., 0.]))
        sigma = DensityOperator(np.diag([.25, .25, .5, 0.]))
        self.assertAlmostEqual(relative_entropy(rho, sigma), math.log(2.))

    def test_gibbs_form(self):
        rho = random_density(4, seed=7)
        sigma = random_density(4, seed=8)
        h = -matrix_log(sigma).matrix
        self.assertAlmostEqual(gibbs_relative_entropy(rho, h),
                               relative_entropy(rho, sigma), places=8)

    def test_pinsker(self):
        rho = random_density(4, seed=9)
        sigma = random_density(4, seed=10)
        self.assertGreaterEqual(
            relative_entropy(rho, sigma),
            .5 * trace_norm(rho.matrix - sigma.matrix) ** 2 - 1e-12)

# class RelativeEntropyTestCase


class DistanceTestCase(unittest.TestCase):

    def test_trace_norm(self):
        self.assertAlmostEqual(trace_norm(np.diag([1., -2.])), 3.)
        zero = PureStateVector([1., 0.])
        one = PureStateVector([0., 1.])
        self.assertAlmostEqual(trace_distance(zero, one), 1.)

    def test_fidelity(self):
        rho = random_density(4, seed=11)
        self.assertAlmostEqual(fidelity(rho, rho), 1., places=8)
        zero = PureStateVector([1., 0.])
        plus = PureStateVector(PLUS)
        self.assertAlmostEqual(fidelity(zero, plus), 1. / math.sqrt(2.),
                               places=8)

    def test_fuchs_van_de_graaf(self):
        rho = random_density(4, seed=12)
        sigma = random_density(4, seed=13)
        f = fidelity(rho, sigma)
        t = trace_distance(rho, sigma)
        self.assertLessEqual(1. - f, t + 1e-10)
        self.assertLessEqual(t, math.sqrt(1. - f ** 2) + 1e-10)

# class DistanceTestCase


class MatrixFunctionTestCase(unittest.TestCase):

    def test_log_floor(self):
        rho = DensityOperator(np.diag([1., 0.]))
        np.testing.assert_allclose(np.diag(matrix_log(rho).matrix).real,
                                   [0., math.log(1e-12)])
        with self.assertRaises(DomainError):
            matrix_fn(rho, np.log)

    def test_support_power(self):
        rho = DensityOperator(np.diag([.5, .5, 0., 0.]))
        np.testing.assert_allclose(support_power(rho, 1.), rho.matrix,
                                   atol=1e-12)
        u = support_power(rho, 2j)
        np.testing.assert_allclose(u @ u.conj().T,
                                   np.diag([1., 1., 0., 0.]), atol=1e-12)

# class MatrixFunctionTestCase


class UhlmannTestCase(unittest.TestCase):

    def test_overlap_is_fidelity(self):
        psi = random_state(3, seed=14)
        phi = random_state(3, seed=15)
        unitary, overlap = uhlmann_align(psi, phi, [0])
        self.assertAlmostEqual(
            overlap, fidelity(partial_trace(psi, [0]),
                              partial_trace(phi, [0])), places=8)
        np.testing.assert_allclose(unitary @ unitary.conj().T, np.eye(4),
                                   atol=1e-10)

        a = bipartite_matrix(psi, [0])
        b = bipartite_matrix(phi, [0]) @ unitary.T
        self.assertAlmostEqual(abs(np.sum(a.conj() * b)), overlap,
                               places=8)

    def test_dimension_mismatch(self):
        qutrit = PureStateVector(np.ones(6), SubsystemLayout((3, 2)),
                                 normalize=True)
        with self.assertRaises(DomainError):
            uhlmann_align(qutrit, random_state(2, seed=16), [0])

# class UhlmannTestCase


if __name__ == '__main__':
    unittest.main()

# ----- END OF test_qla.py -----
