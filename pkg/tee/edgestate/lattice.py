# Copyright 2026, Edge State Entanglement Project
"""
Lattice geometry facilities: regions, annular chain partitions and the
region layouts of the topological entanglement entropy estimators.

Two site placements are supported:

    - :code:`qubits_per_cell=1`: one site per cell of a square lattice
      (or of a ring). Perimeters count lattice edges with exactly one
      endpoint in the region.
    - :code:`qubits_per_cell=2`: toric code placement, one qubit per edge of
      a torus or a cylinder. On the torus site :code:`2*(y*Lx + x)` is the
      horizontal edge :math:`(x, y) - (x+1, y)`, site :code:`2*(y*Lx + x) + 1`
      the vertical edge :math:`(x, y) - (x, y+1)`. The cylinder has smooth
      boundaries: the horizontal edges leaving the last vertex column are
      absent and the remaining edges are numbered in the same order. Two
      edges are adjacent if they share a vertex; perimeters count the
      vertices touched both by the region and by its complement.
"""

import collections
import logging
import math

from tee.edgestate.error import DomainError, GeometryError


logger = logging.getLogger(__name__)


class Region(object):
    """
    Labeled, nonempty set of flat site indices.

    :param sites: Flat site indices
    :param str label: Label
    """

    def __init__(self, sites, label=''):
        try:
            sites = frozenset(int(s) for s in sites)
        except (TypeError, ValueError):
            raise DomainError('Invalid sites: {!r}.'.format(sites))
        if not sites or min(sites) < 0:
            raise DomainError('Invalid region sites: {!r}.'.format(sites))
        self._sites = sites
        self.label = str(label)

    @property
    def sites(self):
        return self._sites

    def sorted(self):
        return tuple(sorted(self._sites))

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self._sites)

    def __contains__(self, site):
        return site in self._sites

    def __or__(self, other):
        return Region(self._sites | other.sites,
                      label=''.join((self.label, other.label)))

    def isdisjoint(self, other):
        return self._sites.isdisjoint(other.sites)

    def __eq__(self, other):
        return isinstance(other, Region) and self._sites == other.sites

    def __hash__(self):
        return hash(self._sites)

    def __repr__(self):
        return '<Region(label={!r}, sites={})>'.format(self.label,
                                                      list(self.sorted()))


def union(*regions, label=None):
    sites = set()
    for r in regions:
        sites |= r.sites
    if label is None:
        label = ''.join(r.label for r in regions)
    return Region(sites, label=label)


class LatticeGeometry(object):
    """
    Finite square lattice (or ring).

    :param str kind: One of :code:`torus` (periodic in x and y),
        :code:`cylinder` (open in x, periodic in y), :code:`patch` (open) or
        :code:`ring` (periodic 1D chain, :code:`Ly=1`)
    :param int Lx: Extent in x
    :param int Ly: Extent in y
    :param int qubits_per_cell: Sites per cell; :code:`2` selects the toric
        code edge placement (torus or cylinder)
    """
    KINDS = ('torus', 'cylinder', 'patch', 'ring')

    def __init__(self, kind, Lx, Ly=1, qubits_per_cell=1):
        if kind not in self.KINDS:
            raise GeometryError('Invalid kind: {!r}.'.format(kind))
        Lx, Ly, qubits_per_cell = int(Lx), int(Ly), int(qubits_per_cell)
        if kind == 'ring':
            if Ly != 1 or Lx < 3:
                raise GeometryError(
                    'Invalid ring extents: {!r}.'.format((Lx, Ly)))
        elif Lx < 2 or Ly < 2:
            raise GeometryError('Invalid extents: {!r}.'.format((Lx, Ly)))
        if qubits_per_cell not in (1, 2):
            raise GeometryError(
                'Invalid qubits_per_cell: {!r}.'.format(qubits_per_cell))
        if qubits_per_cell == 2 and kind not in ('torus', 'cylinder'):
            raise GeometryError(
                'Edge placement requires a torus or a cylinder, '
                'not {!r}.'.format(kind))

        self.kind = kind
        self.Lx = Lx
        self.Ly = Ly
        self.qubits_per_cell = qubits_per_cell

        self._slots = None
        if self.is_edge_lattice:
            self._slots = [(x, y, s) for y in range(Ly) for x in range(Lx)
                           for s in (0, 1)
                           if s == 1 or self.periodic_x or x < Lx - 1]
            self._index = {slot: i for i, slot in enumerate(self._slots)}

    @property
    def periodic_x(self):
        return self.kind in ('torus', 'ring')

    @property
    def periodic_y(self):
        return self.kind in ('torus', 'cylinder')

    @property
    def is_edge_lattice(self):
        return self.qubits_per_cell == 2

    @property
    def num_sites(self):
        if self.is_edge_lattice:
            return len(self._slots)
        return self.qubits_per_cell * self.Lx * self.Ly

    def wrap(self, x, y):
        if self.periodic_x:
            x %= self.Lx
        if self.periodic_y:
            y %= self.Ly
        if not (0 <= x < self.Lx and 0 <= y < self.Ly):
            raise GeometryError(
                'Invalid cell {!r} for {!r}.'.format((x, y), self))
        return x, y

    def site(self, x, y=0, s=0):
        """
        Flat index of sublattice site *s* of cell :code:`(x, y)`; periodic
        directions wrap.
        """
        x, y = self.wrap(x, y)
        if self.is_edge_lattice:
            try:
                return self._index[(x, y, s)]
            except KeyError:
                raise GeometryError(
                    'No edge {!r} in {!r}.'.format((x, y, s), self))
        return self.qubits_per_cell * (y * self.Lx + x) + s

    def has_site(self, x, y=0, s=0):
        try:
            self.site(x, y, s)
        except GeometryError:
            return False
        return True

    def coords(self, index):
        if not 0 <= index < self.num_sites:
            raise GeometryError('Invalid site index: {!r}.'.format(index))
        if self.is_edge_lattice:
            return self._slots[index]
        cell, s = divmod(index, self.qubits_per_cell)
        y, x = divmod(cell, self.Lx)
        return x, y, s

    def region(self, sites, label=''):
        r = Region(sites, label=label)
        if max(r.sites) >= self.num_sites:
            raise GeometryError('Invalid region {!r} for {!r}.'.format(r,
                                                                      self))
        return r

    def all_sites(self):
        return Region(range(self.num_sites), label='all')

    # ------------------------------------------------------------------
    # toric code edge placement
    def h(self, x, y):
        return self.site(x, y, 0)

    def v(self, x, y):
        return self.site(x, y, 1)

    def star(self, x, y):
        """
        Edges incident to vertex :code:`(x, y)`; three on a cylinder
        boundary.
        """
        ends = ((x, y, 0), (x - 1, y, 0), (x, y, 1), (x, y - 1, 1))
        return tuple(self.site(*e) for e in ends if self.has_site(*e))

    def plaquette(self, x, y):
        return (self.h(x, y), self.v(x + 1, y), self.h(x, y + 1),
                self.v(x, y))

    def edge_vertices(self, index):
        x, y, s = self.coords(index)
        if s == 0:
            return (x, y), self.wrap(x + 1, y)
        return (x, y), self.wrap(x, y + 1)

    def vertices(self):
        return [(x, y) for y in range(self.Ly) for x in range(self.Lx)]

    def faces(self):
        """
        Lower left vertices of the plaquettes.
        """
        last = self.Lx if self.periodic_x else self.Lx - 1
        return [(x, y) for y in range(self.Ly) for x in range(last)]

    # ------------------------------------------------------------------
    def _cell_neighbors(self, x, y):
        steps = [(1, 0), (-1, 0)] if self.kind == 'ring' else \
            [(1, 0), (-1, 0), (0, 1), (0, -1)]
        for dx, dy in steps:
            try:
                yield self.wrap(x + dx, y + dy)
            except GeometryError:
                continue

    def neighbors(self, index):
        """
        Sites sharing a lattice edge (cells) or a vertex (edge placement)
        with *index*.
        """
        if self.is_edge_lattice:
            ends = set(self.edge_vertices(index))
            return frozenset(
                j for j in range(self.num_sites)
                if j != index and ends & set(self.edge_vertices(j)))
        x, y, _ = self.coords(index)
        return frozenset(self.site(nx, ny)
                         for nx, ny in self._cell_neighbors(x, y)
                         if (nx, ny) != (x, y))

    def edges(self):
        """
        Sorted list of adjacent site pairs :code:`(i, j)` with
        :code:`i < j`.
        """
        return sorted({(min(i, j), max(i, j))
                       for i in range(self.num_sites)
                       for j in self.neighbors(i)})

    def to_dict(self):
        return {'kind': self.kind, 'Lx': self.Lx, 'Ly': self.Ly,
                'qubits_per_cell': self.qubits_per_cell}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(d['kind'], d['Lx'], d.get('Ly', 1),
                       d.get('qubits_per_cell', 1))
        except (KeyError, TypeError) as err:
            raise GeometryError('Invalid geometry spec: {}.'.format(err))

    def __eq__(self, other):
        return isinstance(other, LatticeGeometry) and \
            self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        return ('<LatticeGeometry(kind={!r}, Lx={}, Ly={}, '
                'qubits_per_cell={})>').format(self.kind, self.Lx, self.Ly,
                                               self.qubits_per_cell)


# ----------------------------------------------------------------------------
class ChainPartition(object):
    """
    Decomposition :math:`X = X_1 \\dots X_m` of a boundary region into an
    ordered chain of blocks.

    :param blocks: Pairwise disjoint regions
    :type blocks: list of :py:class:`Region`
    :param bool periodic: Identify block :code:`m+1` with block :code:`1`
    :param int block_scale: Sites per block edge
    """

    def __init__(self, blocks, periodic=True, block_scale=1):
        blocks = tuple(blocks)
        if periodic and len(blocks) < 4:
            raise DomainError(
                'Invalid periodic chain: {} blocks (at least 4).'.format(
                    len(blocks)))
        if len(blocks) < 2:
            raise DomainError(
                'Invalid chain: {} blocks.'.format(len(blocks)))
        seen = set()
        for b in blocks:
            if not seen.isdisjoint(b.sites):
                raise DomainError('Invalid chain: overlapping blocks.')
            seen |= b.sites

        self.blocks = blocks
        self.periodic = bool(periodic)
        self.block_scale = int(block_scale)

    @property
    def m(self):
        return len(self.blocks)

    @property
    def sites(self):
        return tuple(sorted(set().union(*(b.sites for b in self.blocks))))

    def block(self, i):
        return self.blocks[i % self.m]

    def sites_of(self, indices):
        """
        Sorted sites of the union of the blocks with the given (cyclic)
        indices.
        """
        return tuple(sorted(set().union(
            *(self.block(i).sites for i in indices))))

    def pairs(self):
        """
        Nearest neighbor block pairs :code:`(i, i+1)`; the wrap pair
        :code:`(m-1, 0)` is included for periodic chains.
        """
        last = self.m if self.periodic else self.m - 1
        return [(i, (i + 1) % self.m) for i in range(last)]

    def localized(self):
        """
        Chain with sites relabeled by their position in :py:attr:`sites`,
        i.e. the chain as seen by the reduced state on :math:`X`.
        """
        position = {s: i for i, s in enumerate(self.sites)}
        return ChainPartition(
            [Region((position[s] for s in b.sites), label=b.label)
             for b in self.blocks],
            periodic=self.periodic, block_scale=self.block_scale)

    def to_dict(self):
        return {'periodic': self.periodic,
                'block_scale': self.block_scale,
                'blocks': [{'label': b.label, 'sites': list(b.sorted())}
                           for b in self.blocks]}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls([Region(b['sites'], label=b.get('label', ''))
                        for b in d['blocks']],
                       periodic=d.get('periodic', True),
                       block_scale=d.get('block_scale', 1))
        except (KeyError, TypeError) as err:
            raise DomainError('Invalid chain spec: {}.'.format(err))

    def __repr__(self):
        return '<ChainPartition(m={}, periodic={})>'.format(self.m,
                                                           self.periodic)


class Tripartition(object):
    """
    Regions :math:`A, B, C`, pairwise disjoint.

    :param geometry: Geometry used to evaluate the separation predicate
    :type geometry: :py:class:`LatticeGeometry` or None
    :param source: Chain the tripartition was grouped from
    :type source: :py:class:`ChainPartition` or None
    """

    def __init__(self, A, B, C, geometry=None, source=None):
        for x, y in ((A, B), (B, C), (A, C)):
            if not x.isdisjoint(y):
                raise DomainError(
                    'Invalid tripartition: {!r} and {!r} overlap.'.format(
                        x.label, y.label))
        self.A = A
        self.B = B
        self.C = C
        self.geometry = geometry
        self.source = source

    @property
    def separated(self):
        """
        :code:`True` if no lattice edge joins :math:`A` and :math:`C`;
        :code:`None` without a geometry.
        """
        if self.geometry is None:
            return None
        return not are_adjacent(self.geometry, self.A, self.C)

    def __iter__(self):
        return iter((self.A, self.B, self.C))

    def __repr__(self):
        return '<Tripartition(A={}, B={}, C={})>'.format(
            len(self.A), len(self.B), len(self.C))


# ----------------------------------------------------------------------------
def touched_vertices(geom, sites):
    return {v for s in sites for v in geom.edge_vertices(s)}


def are_adjacent(geom, a, b):
    """
    :code:`True` if some lattice edge joins a site of *a* with a site of
    *b*.
    """
    b_sites = set(b)
    return any(geom.neighbors(s) & b_sites for s in a)


def components(geom, sites, wall=()):
    """
    Connected components of *sites* under lattice adjacency.

    :param wall: Vertices which do not link edges (edge placement only)
    :returns: List of frozensets
    """
    sites = set(sites)
    wall = set(wall)
    result = []
    while sites:
        seed = sites.pop()
        component, queue = {seed}, collections.deque([seed])
        while queue:
            s = queue.popleft()
            if geom.is_edge_lattice:
                links = set(geom.edge_vertices(s)) - wall
                nbrs = {t for t in sites
                        if links & set(geom.edge_vertices(t))}
            else:
                nbrs = geom.neighbors(s) & sites
            for t in nbrs:
                sites.discard(t)
                component.add(t)
                queue.append(t)
        result.append(frozenset(component))
    return result


def complement_components(geom, region):
    """
    Components of the complement of *region*. For the edge placement the
    vertices touched by *region* act as a wall.
    """
    rest = set(range(geom.num_sites)) - set(region)
    wall = touched_vertices(geom, region) if geom.is_edge_lattice else ()
    return components(geom, rest, wall=wall)


def is_connected(geom, region):
    return len(components(geom, region)) == 1


def is_simply_connected(geom, region):
    return (is_connected(geom, region) and
            len(complement_components(geom, region)) <= 1)


def is_annulus(geom, region):
    """
    :code:`True` if *region* is connected and encloses a hole, i.e. it
    contains a cycle separating the lattice. On a ring the whole ring is
    the annulus.
    """
    if geom.kind == 'ring':
        return set(region) == set(range(geom.num_sites))
    return (is_connected(geom, region) and
            len(complement_components(geom, region)) >= 2)


def perimeter(geom, region):
    """
    Boundary length :math:`|\\partial R|` of *region*.
    """
    region = set(region)
    if geom.is_edge_lattice:
        rest = set(range(geom.num_sites)) - region
        return len(touched_vertices(geom, region) &
                   touched_vertices(geom, rest))
    return sum(1 for i, j in geom.edges() if (i in region) != (j in region))


def check_levin_wen(geom, tripartition):
    """
    :raises DomainError: if :math:`ABC` is not an annulus or :math:`B` does
        not separate :math:`A` from :math:`C`
    """
    A, B, C = tripartition
    if are_adjacent(geom, A, C):
        raise DomainError('Invalid tripartition: A and C are adjacent.')
    if not is_annulus(geom, union(A, B, C)):
        raise DomainError(
            'Invalid tripartition: ABC is topologically trivial.')


def check_kitaev_preskill(geom, A, B, C):
    """
    :raises DomainError: if :math:`A, B` and :math:`B, C` are not adjacent
        or :math:`ABC` is not simply connected
    """
    if not (are_adjacent(geom, A, B) and are_adjacent(geom, B, C)):
        raise DomainError('Invalid regions: not mutually adjacent.')
    abc = union(A, B, C)
    if geom.kind == 'ring':
        ok = is_connected(geom, abc) and len(abc) < geom.num_sites
    else:
        ok = is_simply_connected(geom, abc)
    if not ok:
        raise DomainError('Invalid regions: ABC not simply connected.')


# ----------------------------------------------------------------------------
def _unwrap(value, ref, length, periodic):
    if not periodic:
        return value
    d = (value - ref) % length
    if d > length / 2:
        d -= length
    return ref + d


def _check_box(geom, lo, hi):
    """
    Check that the unwrapped box :code:`lo..hi` (inclusive, in cells or
    vertices) fits the geometry without self-overlap.
    """
    for axis, (a, b) in enumerate(zip(lo, hi)):
        length = (geom.Lx, geom.Ly)[axis]
        periodic = (geom.periodic_x, geom.periodic_y)[axis]
        if periodic:
            if b - a + 1 > length:
                raise GeometryError(
                    'Annulus overflow: box {!r}..{!r} in {!r}.'.format(
                        lo, hi, geom))
        elif a < 0 or b >= length:
            raise GeometryError(
                'Annulus overflow: box {!r}..{!r} in {!r}.'.format(lo, hi,
                                                                 geom))


def _bounding_box(points, geom):
    ref = points[0]
    unwrapped = [(_unwrap(x, ref[0], geom.Lx, geom.periodic_x),
                  _unwrap(y, ref[1], geom.Ly, geom.periodic_y))
                 for x, y in points]
    xs, ys = zip(*unwrapped)
    return (min(xs), min(ys)), (max(xs), max(ys))


def _angular_split(items, center, m, label_prefix='X'):
    """
    Split :code:`(site, (px, py))` items into *m* contiguous groups ordered
    by the polar angle around *center*.
    """
    if m > len(items):
        raise GeometryError(
            'Invalid block count {} for {} annulus sites.'.format(
                m, len(items)))
    ordered = sorted(items, key=lambda it: math.atan2(it[1][1] - center[1],
                                                      it[1][0] - center[0]))
    n = len(ordered)
    blocks, start = [], 0
    for k in range(m):
        size = n // m + (1 if k < n % m else 0)
        blocks.append(Region((s for s, _ in ordered[start:start + size]),
                             label='{}{}'.format(label_prefix, k + 1)))
        start += size
    return blocks


def annulus_partition(geom, inner, width, m):
    """
    Periodic chain covering the width-*width* annulus around *inner*.

    The annulus consists of the sites inside the bounding box of *inner*
    grown by *width*, but outside the box itself. For the edge placement
    the box is spanned by the interior vertices of *inner* (vertices whose
    four edges all belong to *inner*) and the annulus consists of the edges
    of the grown vertex box not belonging to *inner*. Blocks are contiguous
    angular sectors around the box center.

    :param geom: Geometry
    :type geom: :py:class:`LatticeGeometry`
    :param inner: Inner region :math:`R`
    :type inner: :py:class:`Region`
    :param int width: Annulus width :math:`l`
    :param int m: Number of blocks
    :rtype: :py:class:`ChainPartition`
    :raises GeometryError: if the annulus does not fit the geometry
    """
    width, m = int(width), int(m)
    if width < 1:
        raise DomainError('Invalid width: {!r}.'.format(width))
    if m < 4:
        raise DomainError('Invalid block count: {!r}.'.format(m))
    if geom.kind == 'ring':
        raise GeometryError('Annuli require a 2D geometry.')
    inner = set(inner)

    if geom.is_edge_lattice:
        interior = [v for v in geom.vertices()
                    if set(geom.star(*v)) <= inner]
        if not interior:
            raise GeometryError('Inner region has no interior vertex.')
        (x0, y0), (x1, y1) = _bounding_box(interior, geom)
        lo, hi = (x0 - width, y0 - width), (x1 + width, y1 + width)
        _check_box(geom, lo, hi)
        items = []
        for u in range(lo[0], hi[0] + 1):
            for w in range(lo[1], hi[1] + 1):
                if u < hi[0]:
                    items.append((geom.h(u, w), (u + 0.5, w)))
                if w < hi[1]:
                    items.append((geom.v(u, w), (u, w + 0.5)))
        items = [it for it in items if it[0] not in inner]
    else:
        cells = [geom.coords(s)[:2] for s in sorted(inner)]
        (x0, y0), (x1, y1) = _bounding_box(cells, geom)
        lo, hi = (x0 - width, y0 - width), (x1 + width, y1 + width)
        _check_box(geom, lo, hi)
        items = [(geom.site(u, w), (u, w))
                 for u in range(lo[0], hi[0] + 1)
                 for w in range(lo[1], hi[1] + 1)
                 if not (x0 <= u <= x1 and y0 <= w <= y1)]

    if not items:
        raise GeometryError('Annulus is empty.')
    center = (0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1]))
    blocks = _angular_split(items, center, m)
    logger.debug('Annulus of {} sites split into {} blocks.'.format(
        len(items), m))
    return ChainPartition(blocks, periodic=True, block_scale=width)


def band_region(geom, start, width, axis='y', label='X'):
    """
    Non-contractible band winding around the periodic direction *axis*.

    With :code:`axis='y'` the band consists of the columns
    :code:`start..start+width-1`; with :code:`axis='x'` of the rows. For the
    edge placement the band consists of all edges incident to the band's
    vertices.
    """
    periodic = geom.periodic_y if axis == 'y' else geom.periodic_x
    if axis not in ('x', 'y') or not periodic or geom.kind == 'ring':
        raise GeometryError(
            'Invalid band axis {!r} for {!r}.'.format(axis, geom))
    lines = range(start, start + width)
    if geom.is_edge_lattice:
        k = 0 if axis == 'y' else 1
        fixed = {c % (geom.Lx, geom.Ly)[k] for c in lines}
        if len(fixed) != width:
            raise GeometryError('Band overflow: width {!r}.'.format(width))
        sites = [s for s in range(geom.num_sites)
                 if any(v[k] in fixed for v in geom.edge_vertices(s))]
    elif axis == 'y':
        sites = [geom.site(x, y) for x in lines for y in range(geom.Ly)]
    else:
        sites = [geom.site(x, y) for y in lines for x in range(geom.Lx)]
    if len(sites) >= geom.num_sites:
        raise GeometryError('Band overflow: width {!r}.'.format(width))
    return geom.region(sites, label=label)


def band_chain(geom, start, width, m, axis='y'):
    """
    Periodic chain of *m* blocks along a band; blocks are consecutive
    segments along the periodic direction.
    """
    if geom.is_edge_lattice:
        raise GeometryError('Band chains require one site per cell.')
    band = band_region(geom, start, width, axis=axis)
    length = geom.Ly if axis == 'y' else geom.Lx
    if m > length:
        raise GeometryError(
            'Invalid block count {} for band length {}.'.format(m, length))
    blocks, first = [], 0
    for k in range(m):
        size = length // m + (1 if k < length % m else 0)
        segment = range(first, first + size)
        if axis == 'y':
            sites = [s for s in band if geom.coords(s)[1] in segment]
        else:
            sites = [s for s in band if geom.coords(s)[0] in segment]
        blocks.append(Region(sites, label='X{}'.format(k + 1)))
        first += size
    return ChainPartition(blocks, periodic=True, block_scale=width)


# ----------------------------------------------------------------------------
def levin_wen_regions(geom, scale=1):
    """
    Annular tripartition :math:`ABC` with :math:`B` separating :math:`A`
    from :math:`C`.

    :param int scale: Linear size of the enclosed disk (lattice) or length
        of each :math:`B` arc (ring)
    :rtype: :py:class:`Tripartition`
    :raises GeometryError: if the regions do not fit
    """
    s = int(scale)
    if s < 1:
        raise DomainError('Invalid scale: {!r}.'.format(scale))

    if geom.kind == 'ring':
        L = geom.num_sites
        a = (L - 2 * s) // 2
        if a < 1:
            raise GeometryError('Ring too small for scale {}.'.format(s))
        A = range(0, a)
        B = list(range(a, a + s)) + list(range(2 * a + s, L))
        C = range(a + s, 2 * a + s)
    elif geom.is_edge_lattice:
        # ring of edges around the s x s vertex box at (1, 1)
        if s + 2 > min(geom.Lx, geom.Ly):
            raise GeometryError('Annulus overflow at scale {}.'.format(s))
        lo, hi = 0, s + 1
        A = [geom.h(x, lo) for x in range(lo, hi)]
        C = [geom.h(x, hi) for x in range(lo, hi)]
        B = [geom.v(x, y) for x in (lo, hi) for y in range(lo, hi)]
    else:
        lo, hi = (0, s), (3 * s - 1, 2 * s - 1)
        _check_box(geom, (0, 0), (3 * s - 1, 3 * s - 1))
        if (geom.periodic_x and 3 * s >= geom.Lx) or \
                (geom.periodic_y and 3 * s >= geom.Ly):
            raise GeometryError('Annulus overflow at scale {}.'.format(s))
        A = [geom.site(x, y) for x in range(3 * s) for y in range(s)]
        C = [geom.site(x, y) for x in range(3 * s)
             for y in range(2 * s, 3 * s)]
        B = [geom.site(x, y) for x in list(range(s)) +
             list(range(2 * s, 3 * s)) for y in range(s, 2 * s)]

    return Tripartition(geom.region(A, 'A'), geom.region(B, 'B'),
                        geom.region(C, 'C'), geometry=geom)


def _sector(angle):
    deg = math.degrees(angle) % 360.
    if 210. <= deg < 330.:
        return 0
    if deg >= 330. or deg <= 90.:
        return 1
    return 2


def kitaev_preskill_regions(geom, scale=1):
    """
    Three regions :math:`A, B, C` forming angular sectors of a disk (of a
    segment on a ring); the union is simply connected.

    :rtype: tuple of :py:class:`Region`
    """
    s = int(scale)
    if s < 1:
        raise DomainError('Invalid scale: {!r}.'.format(scale))

    if geom.kind == 'ring':
        if 3 * s >= geom.num_sites:
            raise GeometryError('Ring too small for scale {}.'.format(s))
        groups = [range(0, s), range(s, 2 * s), range(2 * s, 3 * s)]
        return tuple(geom.region(g, label)
                     for g, label in zip(groups, 'ABC'))

    groups = ([], [], [])
    if geom.is_edge_lattice:
        # all edges of the (s+1) x (s+1) vertex box at the origin
        if s + 2 > min(geom.Lx, geom.Ly):
            raise GeometryError('Disk overflow at scale {}.'.format(s))
        center = (0.5 * s, 0.5 * s)
        for x in range(s + 1):
            for y in range(s + 1):
                if x < s:
                    groups[_sector(math.atan2(y - center[1],
                                              x + 0.5 - center[0]))].append(
                        geom.h(x, y))
                if y < s:
                    groups[_sector(math.atan2(y + 0.5 - center[1],
                                              x - center[0]))].append(
                        geom.v(x, y))
    else:
        n = 2 * s
        if (geom.periodic_x and n >= geom.Lx) or \
                (geom.periodic_y and n >= geom.Ly):
            raise GeometryError('Disk overflow at scale {}.'.format(s))
        _check_box(geom, (0, 0), (n - 1, n - 1))
        center = (0.5 * (n - 1), 0.5 * (n - 1))
        for x in range(n):
            for y in range(n):
                groups[_sector(math.atan2(y - center[1],
                                          x - center[0]))].append(
                    geom.site(x, y))

    return tuple(geom.region(g, label) for g, label in zip(groups, 'ABC'))


# ----------------------------------------------------------------------------
def load_regions(doc):
    """
    Load a geometry and its labeled regions from a JSON document of the
    form :code:`{"kind": "torus", "Lx": 3, "Ly": 3, "qubits_per_cell": 2,
    "regions": [{"label": "A", "sites": [0, 1]}]}`.

    :returns: Tuple :code:`(geometry, regions)` with *regions* a dict
        mapping labels to :py:class:`Region` objects
    """
    geom = LatticeGeometry.from_dict(doc)
    regions = collections.OrderedDict()
    for r in doc.get('regions', []):
        try:
            regions[r['label']] = geom.region(r['sites'], label=r['label'])
        except (KeyError, TypeError) as err:
            raise GeometryError('Invalid region spec: {}.'.format(err))
    return geom, regions


def dump_regions(geom, regions):
    doc = geom.to_dict()
    doc['regions'] = [{'label': r.label, 'sites': list(r.sorted())}
                      for r in regions]
    return doc
