# Copyright 2026, Edge State Entanglement Project
"""
Entropic functional and topological entanglement entropy test facilities.
"""

import math
import unittest

import numpy as np

from tee.edgestate.entropy import (
    AreaLawSample, EntropyCache, area_law_fit, area_law_offset,
    conditional_entropy, conditional_mutual_information,
    kitaev_preskill_combination, mutual_information, region_entropies,
    region_entropy, region_renyi_entropy, tee_kitaev_preskill,
    tee_levin_wen)
from tee.edgestate.error import DomainError, FitError
from tee.edgestate.lattice import (LatticeGeometry, Region, Tripartition,
                                   band_region, kitaev_preskill_regions,
                                   levin_wen_regions, union)
from tee.edgestate.qla import partial_trace
from tee.edgestate.states import (TORIC_CODE_FLUXES, CircuitSpec,
                                  cluster_state, ghz_state,
                                  mes_superposition, random_low_depth_state,
                                  toric_code_state)


LN2 = math.log(2.)


class InformationTestCase(unittest.TestCase):

    def setUp(self):
        self.psi = ghz_state(3)

    # setUp ()

    def test_mutual_information(self):
        self.assertAlmostEqual(mutual_information(self.psi, [0], [1]), LN2)
        self.assertAlmostEqual(mutual_information(self.psi, [0], [1, 2]),
                               2. * LN2)

    def test_conditional_entropy(self):
        self.assertAlmostEqual(conditional_entropy(self.psi, [0], [1, 2]),
                               -LN2)
        self.assertAlmostEqual(conditional_entropy(self.psi, [0], [1]), 0.)

    def test_conditional_mutual_information(self):
        self.assertAlmostEqual(
            conditional_mutual_information(self.psi, [0], [1], [2]), LN2)

    def test_overlap(self):
        with self.assertRaises(DomainError):
            mutual_information(self.psi, [0, 1], [1])
        with self.assertRaises(DomainError):
            conditional_mutual_information(self.psi, [0], [], [2])

    def test_renyi(self):
        self.assertAlmostEqual(region_renyi_entropy(self.psi, [0], 2), LN2)
        self.assertAlmostEqual(region_renyi_entropy(self.psi, [0, 1, 2], 2),
                               0.)

    def test_mixed_state(self):
        rho = self.psi.to_density()
        self.assertAlmostEqual(region_entropy(rho, [1]), LN2)
        self.assertAlmostEqual(region_entropy(rho, [0, 1, 2]), 0.)

# class InformationTestCase


class EntropyCacheTestCase(unittest.TestCase):

    def test_cache(self):
        psi = cluster_state(LatticeGeometry('ring', 6))
        cache = EntropyCache(psi)
        self.assertAlmostEqual(cache([0], [1]), cache(Region([0, 1])))
        self.assertEqual(len(cache), 1)

    def test_parallel(self):
        psi = cluster_state(LatticeGeometry('ring', 6))
        regions = [[0], [0, 1], [0, 1, 2]]
        values = region_entropies(psi, regions, max_workers=2)
        self.assertEqual(len(values), 3)
        for region, value in zip(regions, values):
            self.assertAlmostEqual(value, region_entropy(psi, region))

# class EntropyCacheTestCase


class ToricCodeTEETestCase(unittest.TestCase):

    def setUp(self):
        self.geom = LatticeGeometry('torus', 3, 3, qubits_per_cell=2)
        self.psi = toric_code_state(self.geom, '1')

    # setUp ()

    def test_levin_wen(self):
        tri = levin_wen_regions(self.geom, 1)
        self.assertAlmostEqual(tee_levin_wen(self.psi, tri), LN2, places=8)

    def test_kitaev_preskill(self):
        A, B, C = kitaev_preskill_regions(self.geom, 1)
        self.assertAlmostEqual(
            kitaev_preskill_combination(self.psi, A, B, C), -LN2, places=8)
        self.assertAlmostEqual(
            tee_kitaev_preskill(self.psi, A, B, C, geometry=self.geom), LN2,
            places=8)

    def test_flux_independent(self):
        tri = levin_wen_regions(self.geom, 1)
        for f in TORIC_CODE_FLUXES[1:]:
            psi = toric_code_state(self.geom, f)
            self.assertAlmostEqual(tee_levin_wen(psi, tri), LN2, places=8)

    def test_invalid_tripartition(self):
        g = self.geom
        tri = Tripartition(Region([g.h(0, 0)]), Region([g.h(1, 0)]),
                           Region([g.h(2, 0)]), geometry=g)
        with self.assertRaises(DomainError):
            tee_levin_wen(self.psi, tri)

    def test_area_law_fit(self):
        g = self.geom
        annulus = union(*levin_wen_regions(g, 1))
        regions = [([g.h(0, 0)], 1), ([g.h(0, 0), g.h(1, 0)], 1),
                   (g.star(1, 1), 1), (g.plaquette(0, 0), 1),
                   (annulus, 2)]
        samples = [AreaLawSample.from_region(self.psi, g, r, n_boundaries=n)
                   for r, n in regions]
        self.assertEqual([s.perimeter for s in samples], [2, 3, 4, 4, 8])
        fit = area_law_fit(samples)
        self.assertAlmostEqual(fit.alpha, LN2, places=8)
        self.assertAlmostEqual(fit.gamma, LN2, places=8)
        self.assertEqual(fit.corner_const, 0.)
        self.assertLess(max(abs(r) for r in fit.residuals), 1e-8)
        self.assertAlmostEqual(fit.predict(6, n_boundaries=2), 4. * LN2,
                               places=8)

    def test_mes_band(self):
        band = band_region(self.geom, 1, 1, axis='x')
        for f in TORIC_CODE_FLUXES:
            psi = toric_code_state(self.geom, f)
            self.assertAlmostEqual(region_entropy(psi, band), 4. * LN2,
                                   places=8)
            self.assertAlmostEqual(
                area_law_offset(psi, self.geom, band, LN2), -2. * LN2,
                places=8)

    def test_mes_mixture(self):
        band = band_region(self.geom, 1, 1, axis='x')
        psi = mes_superposition(self.geom, {'1': .5, 'm': .25, 'e': .25})
        # flux sectors have orthogonal support on the band
        self.assertAlmostEqual(region_entropy(psi, band), 5.5 * LN2,
                               places=8)

# class ToricCodeTEETestCase


class ToricCylinderTestCase(unittest.TestCase):

    def setUp(self):
        self.geom = LatticeGeometry('cylinder', 3, 3, qubits_per_cell=2)
        self.band = band_region(self.geom, 1, 1)
        self.ends = [s for s in range(self.geom.num_sites)
                     if s not in self.band]

    # setUp ()

    def test_mes_band(self):
        for f in ('1', 'm'):
            psi = toric_code_state(self.geom, f)
            self.assertAlmostEqual(region_entropy(psi, self.band), 4. * LN2,
                                   places=8)
            self.assertAlmostEqual(
                area_law_offset(psi, self.geom, self.band, LN2), -2. * LN2,
                places=8)

    def test_flux_blocks(self):
        rho = {f: partial_trace(toric_code_state(self.geom, f),
                                self.ends).matrix
               for f in ('1', 'm')}
        psi = mes_superposition(self.geom, {'1': .5, 'm': .5})
        np.testing.assert_allclose(partial_trace(psi, self.ends).matrix,
                                   .5 * rho['1'] + .5 * rho['m'],
                                   atol=1e-10)
        self.assertLess(np.max(np.abs(rho['1'] @ rho['m'])), 1e-10)
        self.assertAlmostEqual(region_entropy(psi, self.band), 5. * LN2,
                               places=8)

# class ToricCylinderTestCase


class TrivialTEETestCase(unittest.TestCase):

    def test_cluster_ring(self):
        geom = LatticeGeometry('ring', 8)
        psi = cluster_state(geom)
        self.assertAlmostEqual(tee_levin_wen(psi, levin_wen_regions(geom)),
                               0., places=10)
        A, B, C = kitaev_preskill_regions(geom, 2)
        self.assertAlmostEqual(tee_kitaev_preskill(psi, A, B, C, geom), 0.,
                               places=10)

    def test_random_circuit(self):
        geom = LatticeGeometry('ring', 12)
        psi = random_low_depth_state(12, CircuitSpec(2, 2, seed=11))
        tri = levin_wen_regions(geom, 4)
        self.assertAlmostEqual(tee_levin_wen(psi, tri), 0., places=8)

# class TrivialTEETestCase


class AreaLawFitTestCase(unittest.TestCase):

    def test_synthetic(self):
        samples = [AreaLawSample(2. * p - n * .5 + .1 * c, p,
                                 n_boundaries=n, corners=c)
                   for p, n, c in ((4, 1, 4), (6, 1, 4), (8, 1, 6),
                                   (10, 2, 8), (12, 2, 6))]
        fit = area_law_fit(samples)
        self.assertAlmostEqual(fit.alpha, 2.)
        self.assertAlmostEqual(fit.gamma, .5)
        self.assertAlmostEqual(fit.corner_const, .1)

    def test_degenerate(self):
        with self.assertRaises(FitError):
            area_law_fit([AreaLawSample(1., 2), AreaLawSample(2., 3)])
        with self.assertRaises(FitError):
            area_law_fit([AreaLawSample(1., 2)] * 3)
        with self.assertRaises(FitError):
            area_law_fit([AreaLawSample(1., 2, n_boundaries=0),
                          AreaLawSample(2., 3, n_boundaries=0),
                          AreaLawSample(3., 4, n_boundaries=0)])

    def test_invalid_sample(self):
        with self.assertRaises(DomainError):
            AreaLawSample(1., -1)

# class AreaLawFitTestCase


if __name__ == '__main__':
    unittest.main()

# ----- END OF test_entropy.py -----
