# Copyright 2026, Edge State Entanglement Project
"""
Lattice geometry and region test facilities.
"""

import unittest

from tee.edgestate.error import DomainError, GeometryError
from tee.edgestate.lattice import (
    ChainPartition, LatticeGeometry, Region, Tripartition, annulus_partition,
    band_chain, band_region, check_kitaev_preskill, check_levin_wen,
    dump_regions, is_annulus, is_simply_connected, kitaev_preskill_regions,
    levin_wen_regions, load_regions, perimeter, union)


def toric_geometry():
    return LatticeGeometry('torus', 3, 3, qubits_per_cell=2)


class GeometryTestCase(unittest.TestCase):

    def test_invalid(self):
        with self.assertRaises(GeometryError):
            LatticeGeometry('sphere', 3, 3)
        with self.assertRaises(GeometryError):
            LatticeGeometry('ring', 4, 2)
        with self.assertRaises(GeometryError):
            LatticeGeometry('patch', 3, 3, qubits_per_cell=2)
        self.assertIsInstance(GeometryError('x'), DomainError)

    def test_edge_indexing(self):
        geom = toric_geometry()
        self.assertEqual(geom.num_sites, 18)
        self.assertEqual(geom.h(1, 2), 2 * (2 * 3 + 1))
        self.assertEqual(geom.v(1, 2), geom.h(1, 2) + 1)
        self.assertEqual(geom.h(-1, 0), geom.h(2, 0))
        self.assertEqual(geom.coords(geom.v(2, 1)), (2, 1, 1))
        self.assertEqual(geom.star(1, 1),
                         (geom.h(1, 1), geom.h(0, 1), geom.v(1, 1),
                          geom.v(1, 0)))

    def test_edge_cylinder(self):
        geom = LatticeGeometry('cylinder', 3, 3, qubits_per_cell=2)
        self.assertEqual(geom.num_sites, 15)
        self.assertFalse(geom.has_site(2, 0, 0))
        with self.assertRaises(GeometryError):
            geom.h(2, 0)
        self.assertEqual(geom.v(2, 0), 4)
        self.assertEqual(geom.h(0, 1), 5)
        self.assertEqual(geom.v(0, -1), geom.v(0, 2))
        for i in range(geom.num_sites):
            self.assertEqual(geom.site(*geom.coords(i)), i)
        self.assertEqual([len(geom.star(x, 1)) for x in range(3)],
                         [3, 4, 3])
        self.assertEqual(len(geom.faces()), 6)
        with self.assertRaises(GeometryError):
            geom.plaquette(2, 0)

    def test_neighbors(self):
        ring = LatticeGeometry('ring', 6)
        self.assertEqual(ring.neighbors(0), frozenset([1, 5]))
        cylinder = LatticeGeometry('cylinder', 3, 4)
        self.assertEqual(cylinder.neighbors(cylinder.site(0, 0)),
                         frozenset([cylinder.site(1, 0),
                                    cylinder.site(0, 1),
                                    cylinder.site(0, 3)]))
        with self.assertRaises(GeometryError):
            cylinder.site(3, 0)

    def test_dict(self):
        geom = toric_geometry()
        self.assertEqual(LatticeGeometry.from_dict(geom.to_dict()), geom)
        with self.assertRaises(GeometryError):
            LatticeGeometry.from_dict({'Lx': 3})

# class GeometryTestCase


class PerimeterTestCase(unittest.TestCase):

    def test_cells(self):
        patch = LatticeGeometry('patch', 4, 4)
        self.assertEqual(perimeter(patch, [patch.site(0, 0)]), 2)
        self.assertEqual(perimeter(patch, [patch.site(1, 1)]), 4)
        cylinder = LatticeGeometry('cylinder', 4, 3)
        column = [cylinder.site(1, y) for y in range(3)]
        self.assertEqual(perimeter(cylinder, column), 6)

    def test_edges(self):
        geom = toric_geometry()
        self.assertEqual(perimeter(geom, [geom.h(0, 0)]), 2)
        self.assertEqual(perimeter(geom, geom.star(1, 1)), 4)
        self.assertEqual(perimeter(geom, geom.plaquette(0, 0)), 4)

# class PerimeterTestCase


class ChainPartitionTestCase(unittest.TestCase):

    def test_periodic(self):
        chain = ChainPartition([Region([i]) for i in range(5)])
        self.assertEqual(chain.m, 5)
        self.assertEqual(chain.pairs()[-1], (4, 0))
        self.assertEqual(chain.block(5), chain.block(0))
        self.assertEqual(chain.sites_of([4, 5, 6]), (0, 1, 4))

    def test_open(self):
        chain = ChainPartition([Region([0]), Region([1, 2])], periodic=False)
        self.assertEqual(chain.pairs(), [(0, 1)])

    def test_invalid(self):
        with self.assertRaises(DomainError):
            ChainPartition([Region([i]) for i in range(3)])
        with self.assertRaises(DomainError):
            ChainPartition([Region([0, 1]), Region([1]), Region([2]),
                            Region([3])])

    def test_localized(self):
        chain = ChainPartition([Region([3, 7]), Region([9]), Region([12]),
                                Region([15])])
        local = chain.localized()
        self.assertEqual(local.block(0).sorted(), (0, 1))
        self.assertEqual(local.sites, (0, 1, 2, 3, 4))

    def test_dict(self):
        chain = ChainPartition([Region([i], label='X{}'.format(i))
                                for i in range(4)], block_scale=2)
        other = ChainPartition.from_dict(chain.to_dict())
        self.assertEqual(other.blocks, chain.blocks)
        self.assertEqual(other.block_scale, 2)
        with self.assertRaises(DomainError):
            ChainPartition.from_dict({'periodic': True})

# class ChainPartitionTestCase


class AnnulusTestCase(unittest.TestCase):

    def test_toric_annulus(self):
        geom = toric_geometry()
        chain = annulus_partition(geom, Region(geom.star(1, 1)), width=1,
                                  m=4)
        self.assertEqual(len(chain.sites), 8)
        self.assertEqual([len(b) for b in chain.blocks], [2, 2, 2, 2])
        self.assertTrue(is_annulus(geom, chain.sites))
        self.assertTrue(set(chain.sites).isdisjoint(geom.star(1, 1)))
        self.assertEqual(
            set(chain.sites),
            {geom.h(0, 0), geom.h(1, 0), geom.h(0, 2), geom.h(1, 2),
             geom.v(0, 0), geom.v(0, 1), geom.v(2, 0), geom.v(2, 1)})

    def test_cell_annulus(self):
        patch = LatticeGeometry('patch', 5, 5)
        chain = annulus_partition(patch, Region([patch.site(2, 2)]),
                                  width=1, m=4)
        self.assertEqual(len(chain.sites), 8)
        self.assertTrue(is_annulus(patch, chain.sites))
        self.assertFalse(is_simply_connected(patch, chain.sites))
        self.assertTrue(is_simply_connected(patch, [patch.site(2, 2)]))

    def test_overflow(self):
        geom = toric_geometry()
        with self.assertRaises(GeometryError):
            annulus_partition(geom, Region(geom.star(1, 1)), width=2, m=4)
        patch = LatticeGeometry('patch', 3, 3)
        with self.assertRaises(GeometryError):
            annulus_partition(patch, Region([patch.site(0, 0)]), width=1,
                              m=4)
        with self.assertRaises(DomainError):
            annulus_partition(patch, Region([patch.site(1, 1)]), width=1,
                              m=3)

# class AnnulusTestCase


class BandTestCase(unittest.TestCase):

    def test_cylinder_band(self):
        cylinder = LatticeGeometry('cylinder', 4, 4)
        band = band_region(cylinder, 1, 2)
        self.assertEqual(len(band), 8)
        self.assertEqual(perimeter(cylinder, band), 8)
        chain = band_chain(cylinder, 1, 2, 4)
        self.assertEqual(chain.m, 4)
        self.assertEqual(set(chain.sites), set(band))
        self.assertEqual(chain.block_scale, 2)

    def test_edge_cylinder_band(self):
        geom = LatticeGeometry('cylinder', 3, 3, qubits_per_cell=2)
        band = band_region(geom, 1, 1)
        self.assertEqual(len(band), 9)
        self.assertEqual(perimeter(geom, band), 6)
        self.assertNotIn(geom.v(0, 0), band)

    def test_toric_band(self):
        geom = toric_geometry()
        band = band_region(geom, 1, 1, axis='x')
        self.assertEqual(len(band), 9)
        self.assertEqual(perimeter(geom, band), 6)

    def test_invalid(self):
        cylinder = LatticeGeometry('cylinder', 4, 4)
        with self.assertRaises(GeometryError):
            band_region(cylinder, 0, 1, axis='x')
        with self.assertRaises(GeometryError):
            band_chain(cylinder, 1, 2, 5)
        with self.assertRaises(GeometryError):
            band_chain(toric_geometry(), 1, 1, 3)

# class BandTestCase


class TripartitionTestCase(unittest.TestCase):

    def test_disjoint(self):
        with self.assertRaises(DomainError):
            Tripartition(Region([0, 1]), Region([1]), Region([2]))

    def test_levin_wen_ring(self):
        ring = LatticeGeometry('ring', 8)
        tri = levin_wen_regions(ring, 1)
        self.assertEqual(tri.A.sorted(), (0, 1, 2))
        self.assertEqual(tri.B.sorted(), (3, 7))
        self.assertEqual(tri.C.sorted(), (4, 5, 6))
        self.assertTrue(tri.separated)
        check_levin_wen(ring, tri)

    def test_levin_wen_toric(self):
        geom = toric_geometry()
        tri = levin_wen_regions(geom, 1)
        check_levin_wen(geom, tri)
        self.assertEqual(len(union(*tri)), 8)
        with self.assertRaises(GeometryError):
            levin_wen_regions(geom, 2)

    def test_levin_wen_violation(self):
        ring = LatticeGeometry('ring', 8)
        tri = Tripartition(Region([0, 1]), Region([2]), Region([3, 4]))
        with self.assertRaises(DomainError):
            check_levin_wen(ring, tri)

    def test_kitaev_preskill(self):
        ring = LatticeGeometry('ring', 8)
        A, B, C = kitaev_preskill_regions(ring, 2)
        self.assertEqual((A.sorted(), B.sorted(), C.sorted()),
                         ((0, 1), (2, 3), (4, 5)))
        check_kitaev_preskill(ring, A, B, C)
        with self.assertRaises(DomainError):
            check_kitaev_preskill(ring, A, C, Region([6, 7]))

        geom = toric_geometry()
        A, B, C = kitaev_preskill_regions(geom, 1)
        check_kitaev_preskill(geom, A, B, C)
        self.assertEqual(len(union(A, B, C)), 4)

# class TripartitionTestCase


class RegionIOTestCase(unittest.TestCase):

    def test_load(self):
        doc = {'kind': 'torus', 'Lx': 3, 'Ly': 3, 'qubits_per_cell': 2,
               'regions': [{'label': 'A', 'sites': [0, 1]},
                           {'label': 'B', 'sites': [5]}]}
        geom, regions = load_regions(doc)
        self.assertEqual(geom, toric_geometry())
        self.assertEqual(list(regions), ['A', 'B'])
        self.assertEqual(dump_regions(geom, regions.values()), doc)

    def test_invalid(self):
        with self.assertRaises(GeometryError):
            load_regions({'kind': 'ring', 'Lx': 4,
                          'regions': [{'label': 'A', 'sites': [7]}]})
        with self.assertRaises(GeometryError):
            load_regions({'kind': 'ring', 'Lx': 4,
                          'regions': [{'sites': [1]}]})

# class RegionIOTestCase


if __name__ == '__main__':
    unittest.main()

# ----- END OF test_lattice.py -----
