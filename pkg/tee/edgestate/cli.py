# Copyright 2026, Edge State Entanglement Project
"""
Command line experiment runner.

Every subcommand builds its inputs from an :py:class:`ExperimentConfig`
(a JSON file given with :code:`--config`, overridden by flags) and emits a
JSON record or CSV rows. Exit codes: :code:`0` on success, :code:`2` on
invalid inputs, :code:`3` if a dense size limit is exceeded and :code:`1`
for other analysis failures.
"""

import argparse
import concurrent.futures
import csv
import hashlib
import json
import logging
import math
import sys

import numpy as np

from tee.edgestate import (__version__, edgeham, entropy, gibbsfit, lattice,
                           mps, recovery, specmatch, states)
from tee.edgestate.error import (ConfigError, DomainError, EdgeStateError,
                                 ResourceError)
from tee.edgestate.run import EExperiment, RunRegistry
from tee.edgestate.settings import SolverSettings
from tee.edgestate.type import json_default


logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_ERROR = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3

MODELS = {
    'toric': {'kind': 'torus', 'Lx': 3, 'Ly': 3},
    'cluster': {'kind': 'ring', 'Lx': 8, 'Ly': 1},
    'cluster-cylinder': {'kind': 'cylinder', 'Lx': 4, 'Ly': 3},
    'product': {'kind': 'ring', 'Lx': 8, 'Ly': 1},
    'ghz': {'kind': 'ring', 'Lx': 8, 'Ly': 1},
    'random': {'kind': 'ring', 'Lx': 12, 'Ly': 1, 'depth': 2, 'radius': 2},
}
STATE_EXPERIMENTS = ('tee', 'edge-hamiltonian', 'gibbs-fit',
                     'spectrum-match', 'recovery-check')
DEFAULT_MODELS = {'spectrum-match': 'cluster-cylinder'}

# flags not entering the configuration (nor its hash)
RUNTIME_FLAGS = ('config', 'out', 'threads', 'format', 'db', 'verbose',
                 'log_level', 'experiment')


class ExperimentConfig(object):
    """
    Validated experiment configuration.

    :param str experiment: Subcommand name
    :param dict data: Configuration values
    """

    def __init__(self, experiment, data):
        try:
            EExperiment(experiment)
        except ValueError:
            raise ConfigError('Invalid experiment: {!r}.'.format(experiment))
        self.experiment = experiment
        self.data = dict(data)
        if experiment in STATE_EXPERIMENTS:
            model = self.data.setdefault(
                'model', DEFAULT_MODELS.get(experiment, 'toric'))
            if model not in MODELS:
                raise ConfigError('Invalid model: {!r}.'.format(model))
            for k, v in MODELS[model].items():
                self.data.setdefault(k, v)
            if model == 'random':
                self.require_seed()
        self.validate()

    @classmethod
    def from_args(cls, args):
        data = {}
        if getattr(args, 'config', None):
            try:
                with open(args.config) as ifd:
                    data = json.load(ifd)
            except (OSError, ValueError) as err:
                raise ConfigError('Invalid config file: {}.'.format(err))
            if not isinstance(data, dict):
                raise ConfigError('Invalid config: JSON object required.')
        data.update({k: v for k, v in vars(args).items()
                     if k not in RUNTIME_FLAGS and v is not None})
        return cls(args.experiment, data)

    def validate(self):
        for key in ('Lx', 'Ly', 'm', 'scale', 'width', 'depth', 'radius',
                    'd', 'bond', 'd_in', 'd_out', 'n_corners'):
            if key in self.data:
                v = self.data[key]
                if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    raise ConfigError('Invalid {}: {!r}.'.format(key, v))
        seed = self.data.get('seed')
        if seed is not None and (not isinstance(seed, int) or seed < 0):
            raise ConfigError('Invalid seed: {!r}.'.format(seed))
        solver = self.data.get('solver', {})
        if not isinstance(solver, dict):
            raise ConfigError('Invalid solver options: {!r}.'.format(solver))

    def require_seed(self):
        if self.data.get('seed') is None:
            raise ConfigError(
                'Invalid config: a seed is required for randomized inputs.')
        return self.data['seed']

    def get(self, key, default=None):
        return self.data.get(key, default)

    def __getitem__(self, key):
        try:
            return self.data[key]
        except KeyError:
            raise ConfigError('Invalid config: missing {!r}.'.format(key))

    def canonical(self):
        return json.dumps({'experiment': self.experiment, **self.data},
                          sort_keys=True, separators=(',', ':'),
                          default=json_default)

    @property
    def hash(self):
        return hashlib.sha256(self.canonical().encode('utf-8')).hexdigest()


class Outcome(object):
    """
    Results of a subcommand: a JSON serializable dict and CSV rows.
    """

    def __init__(self, results, header, rows):
        self.results = results
        self.header = list(header)
        self.rows = [list(r) for r in rows]


# ----------------------------------------------------------------------------
def build_state(config):
    """
    :returns: Tuple :code:`(state, geometry)`
    """
    model = config['model']
    geom = lattice.LatticeGeometry(
        config['kind'], config['Lx'], config['Ly'],
        qubits_per_cell=2 if model == 'toric' else 1)
    if model == 'toric':
        state = states.toric_code_state(
            geom, flux=config.get('flux', '1'),
            direction=config.get('direction'))
    elif model in ('cluster', 'cluster-cylinder'):
        state = states.cluster_state(geom)
    elif model == 'product':
        n = geom.num_sites
        if config.get('seed') is None:
            vectors = [np.ones(2) / math.sqrt(2.)] * n
        else:
            rng = np.random.default_rng(config['seed'])
            raw = rng.standard_normal((n, 2)) + \
                1j * rng.standard_normal((n, 2))
            vectors = [v / np.linalg.norm(v) for v in raw]
        state = states.product_state(vectors)
    elif model == 'ghz':
        state = states.ghz_state(geom.num_sites)
    else:
        spec = states.CircuitSpec(config['depth'], config['radius'],
                                  config.require_seed())
        state = states.random_low_depth_state(geom.num_sites, spec,
                                              periodic=geom.periodic_x)
    logger.info('Model {!r} on {!r}.'.format(model, geom))
    return state, geom


def _ring_chain(geom, m):
    n = geom.num_sites
    if m > n:
        raise ConfigError('Invalid m={} for {} sites.'.format(m, n))
    blocks, first = [], 0
    for i in range(m):
        size = n // m + (1 if i < n % m else 0)
        blocks.append(lattice.Region(range(first, first + size),
                                     label='X{}'.format(i + 1)))
        first += size
    return lattice.ChainPartition(blocks, periodic=True)


def build_chain(config, geom):
    """
    Chain of the boundary region. The :code:`chain` entry of the config is
    one of :code:`{"blocks": [...], "periodic": ...}`, :code:`{"annulus":
    {"vertex": [x, y] | "inner": [...], "width": l}}` or :code:`{"band":
    {"start": x, "width": w, "axis": "y"}}`; the block count is :code:`m`.
    """
    spec = config.get('chain')
    m = config.get('m', 4)
    if spec is None:
        if geom.is_edge_lattice:
            spec = {'annulus': {'vertex': [1, 1], 'width': 1}}
        elif geom.kind == 'ring':
            return _ring_chain(geom, m)
        else:
            spec = {'band': {'start': 1, 'width': max(geom.Lx - 2, 1)}}
    if not isinstance(spec, dict):
        raise ConfigError('Invalid chain: {!r}.'.format(spec))

    if 'blocks' in spec:
        return lattice.ChainPartition.from_dict(spec)
    if 'annulus' in spec:
        a = spec['annulus']
        if 'vertex' in a:
            inner = lattice.Region(geom.star(*a['vertex']), label='R')
        else:
            inner = lattice.Region(a['inner'], label='R')
        return lattice.annulus_partition(geom, inner, a.get('width', 1), m)
    if 'band' in spec:
        b = spec['band']
        return lattice.band_chain(geom, b.get('start', 1), b.get('width', 1),
                                  m, axis=b.get('axis', 'y'))
    raise ConfigError('Invalid chain: {!r}.'.format(spec))


def _edge(config):
    state, geom = build_state(config)
    chain = build_chain(config, geom)
    rho_X, local = edgeham.edge_state(state, chain)
    return rho_X, local


def _load_json(source):
    if isinstance(source, dict):
        return source
    try:
        with open(source) as ifd:
            return json.load(ifd)
    except (OSError, ValueError, TypeError) as err:
        raise ConfigError('Invalid tensor file: {}.'.format(err))


# ----------------------------------------------------------------------------
def run_tee(config, settings, threads):
    state, geom = build_state(config)
    method = config.get('method', 'levin-wen')
    scale = config.get('scale', 1)
    if method == 'levin-wen':
        tri = lattice.levin_wen_regions(geom, scale)
        gamma = entropy.tee_levin_wen(state, tri, geometry=geom)
    elif method == 'kitaev-preskill':
        A, B, C = lattice.kitaev_preskill_regions(geom, scale)
        gamma = entropy.tee_kitaev_preskill(state, A, B, C, geometry=geom)
    else:
        raise ConfigError('Invalid method: {!r}.'.format(method))
    logger.info('{}: gamma={:.10g}.'.format(method, gamma))
    return Outcome({'method': method, 'scale': scale, 'gamma': gamma},
                   ['method', 'scale', 'gamma'], [(method, scale, gamma)])


def run_edge_hamiltonian(config, settings, threads):
    rho_X, chain = _edge(config)
    floor = settings['log_floor']
    hamiltonian = edgeham.build_edge_hamiltonian(rho_X, chain, floor=floor)
    distance = edgeham.edge_gibbs_distance(rho_X, chain, floor=floor)
    results = {'m': chain.m, 'term_norms': hamiltonian.term_norms(),
               'distance': distance.to_dict()}
    if chain.m >= 4:
        results['decomposition'] = edgeham.telescoped_cmi_decomposition(
            rho_X, chain).to_dict()
    if config.get('dump_hamiltonian'):
        results['hamiltonian'] = hamiltonian.to_dict()
    rows = [(i, n) for i, n in enumerate(hamiltonian.term_norms())]
    return Outcome(results, ['term', 'norm'], rows)


def run_gibbs_fit(config, settings, threads):
    rho_X, chain = _edge(config)
    options = dict(settings.optimizer_options(), max_workers=threads)
    options.update(config.get('solver', {}))
    family_name = config.get('family', 'nearest_neighbor')

    if family_name == 'compare':
        nn, tb = gibbsfit.mbody_family_compare(rho_X, chain, options=options)
        results = {'nearest_neighbor': nn.to_dict(), 'two_block': tb.to_dict(),
                   'difference': abs(nn.value - tb.value)}
        rows = [('nearest_neighbor', nn.value, nn.tee_estimate),
                ('two_block', tb.value, tb.tee_estimate)]
        return Outcome(results, ['family', 'value', 'tee_estimate'], rows)

    if family_name == 'nearest_neighbor':
        family = gibbsfit.GibbsFamily(chain, rho_X.layout,
                                      kappa=options['kappa'])
    elif family_name == 'two_block':
        family = gibbsfit.GibbsFamily(
            chain, rho_X.layout, pattern='two_block',
            tripartition=gibbsfit.two_block_tripartition(chain),
            kappa=options['kappa'])
    else:
        raise ConfigError('Invalid family: {!r}.'.format(family_name))
    warm_starts = {}
    if config.get('recovered_start') and chain.m >= 4:
        rho_tilde, _ = recovery.recovered_edge_state(rho_X, chain)
        warm_starts['recovered'] = gibbsfit.warm_start_from_state(rho_tilde,
                                                                  family)
    fit = gibbsfit.minimize(rho_X, family, options=options,
                            warm_starts=warm_starts)
    rows = [(i, v) for i, v in enumerate(fit.history)]
    return Outcome(dict(fit.to_dict(), family=family_name),
                   ['iteration', 'value'], rows)


def _cylinder_regions(geom):
    if geom.kind != 'cylinder' or geom.Lx < 3:
        raise ConfigError(
            'Invalid geometry for a spectrum match: {!r}.'.format(geom))
    Y = [geom.site(0, y) for y in range(geom.Ly)]
    X = [geom.site(x, y) for x in range(1, geom.Lx - 1)
         for y in range(geom.Ly)]
    Yp = [geom.site(geom.Lx - 1, y) for y in range(geom.Ly)]
    return Y, X, Yp


def run_spectrum_match(config, settings, threads):
    state, geom = build_state(config)
    Y, X, Yp = _cylinder_regions(geom)
    chain = build_chain(config, geom) if config.get('m') else None
    cutoffs = config.get('cutoffs') or [settings['cutoff']]
    matches = specmatch.spectrum_match_curve(state, Y, X, Yp, cutoffs,
                                             chain=chain, max_workers=threads)
    return Outcome({'matches': [r.to_dict() for r in matches]},
                   ['cutoff', 'l1_distance', 'i_yy'],
                   [r.row() for r in matches])


def run_recovery_check(config, settings, threads):
    rho_X, chain = _edge(config)
    if chain.m < 4:
        raise ConfigError('Invalid chain: m={} (at least 4).'.format(chain.m))
    t_grid = config.get('t_grid')
    if t_grid is not None:
        settings['t_grid'] = list(t_grid)
    grid = settings.t_grid()

    records = []
    for tri in gibbsfit.neighbor_tripartitions(chain):
        records.append(recovery.fawzi_renner_check(
            rho_X, tri.A.sorted(), tri.B.sorted(), tri.C.sorted(),
            t_grid=grid, max_workers=threads))
    _, diagnostics = recovery.recovered_edge_state(rho_X, chain)
    results = {'records': [r.to_dict() for r in records],
               'reconstruction': diagnostics.to_dict()}
    rows = [(i, r.cmi, r.best_fidelity, r.best_t, r.status)
            for i, r in enumerate(records)]
    return Outcome(results, ['block', 'cmi', 'best_fidelity', 'best_t',
                             'status'], rows)


def run_mps_converge(config, settings, threads):
    if config.get('mps') is not None:
        state = mps.MatrixProductState.from_dict(_load_json(config['mps']))
    else:
        state = mps.random_mps(config.get('d', 2), config.get('bond', 2),
                               config.require_seed())
    m = config.get('m', 2)
    lengths = config.get('lengths') or list(range(m + 4, m + 16, 2))
    curve = mps.convergence_curve(state, m, lengths)
    return Outcome(curve.to_dict(), ['N', 'distance'], curve.rows())


def run_renyi_fit(config, settings, threads):
    if config.get('mps') is not None:
        edge, corner = mps.ring_tensors_from_dict(_load_json(config['mps']))
    else:
        edge, corner = mps.random_ring_tensors(
            config.get('d_in', 3), config.get('d_out', 3),
            config.get('bond', 2), config.require_seed())
    n_corners = config.get('n_corners', 2)
    perimeters = config.get('perimeters') or list(range(20, 61, 4))
    alphas = config.get('alphas') or [2, 3]

    with concurrent.futures.ThreadPoolExecutor(
            max_workers=threads) as executor:
        fits = list(executor.map(
            lambda a: mps.renyi_area_fit(edge, corner, n_corners, perimeters,
                                         a), alphas))
    rows = [(f.alpha, l, s, r) for f in fits for l, s, r in f.rows()]
    return Outcome({'fits': [f.to_dict() for f in fits]},
                   ['alpha', 'perimeter', 'entropy', 'residual'], rows)


EXPERIMENTS = {
    'tee': run_tee,
    'edge-hamiltonian': run_edge_hamiltonian,
    'gibbs-fit': run_gibbs_fit,
    'spectrum-match': run_spectrum_match,
    'recovery-check': run_recovery_check,
    'mps-converge': run_mps_converge,
    'renyi-fit': run_renyi_fit,
}


# ----------------------------------------------------------------------------
def write_outcome(config, outcome, out=None, fmt='json'):
    """
    Write *outcome* to the file *out* (stdout if :code:`None`).
    """
    stream = open(out, 'w', newline='') if out else sys.stdout
    try:
        if fmt == 'csv':
            writer = csv.writer(stream)
            writer.writerow(outcome.header)
            writer.writerows(outcome.rows)
        else:
            record = {'experiment': config.experiment,
                      'config': config.data,
                      'config_hash': config.hash,
                      'version': __version__,
                      'results': outcome.results}
            json.dump(record, stream, indent=2, sort_keys=True,
                      default=json_default)
            stream.write('\n')
    finally:
        if out:
            stream.close()


def run(config, threads=None, db=None):
    """
    Execute *config*, recording the run in the registry at *db* if given.

    :rtype: :py:class:`Outcome`
    """
    settings = SolverSettings(
        {k: v for k, v in config.get('solver', {}).items()
         if k in SolverSettings.DEFAULTS})
    handler = EXPERIMENTS[config.experiment]
    logger.info('Running {!r} (config {}).'.format(config.experiment,
                                                  config.hash[:12]))
    if db is None:
        outcome = handler(config, settings, threads)
    else:
        registry = RunRegistry(db)
        with registry.record(config.experiment, json.loads(
                config.canonical()), config.hash,
                seed=config.get('seed'),
                settings=settings) as r:
            outcome = handler(config, settings, threads)
            r.results = outcome.results
    logger.info('Finished {!r}.'.format(config.experiment))
    return outcome


def _model_flags(parser):
    parser.add_argument('--model', choices=sorted(MODELS))
    parser.add_argument('--kind', choices=lattice.LatticeGeometry.KINDS)
    parser.add_argument('--Lx', type=int)
    parser.add_argument('--Ly', type=int)
    parser.add_argument('--flux')
    parser.add_argument('--direction', choices=('x', 'y'))
    parser.add_argument('--depth', type=int)
    parser.add_argument('--radius', type=int)
    parser.add_argument('--m', type=int, help='number of chain blocks')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON experiment configuration')
    common.add_argument('--seed', type=int)
    common.add_argument('--out', help='output file (default: stdout)')
    common.add_argument('--threads', type=int,
                        help='worker threads over sweep points')
    common.add_argument('--format', choices=('json', 'csv'), default='json')
    common.add_argument('--db', help='SQLAlchemy URL of a run registry')
    common.add_argument('-v', '--verbose', action='count', default=0)
    common.add_argument('--log-level', dest='log_level',
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))

    parser = argparse.ArgumentParser(
        prog='tee-edgestate',
        description='Topological entanglement entropy from edge states.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    sub = parser.add_subparsers(dest='experiment', required=True)

    p = sub.add_parser('tee', parents=[common])
    _model_flags(p)
    p.add_argument('--method', choices=('levin-wen', 'kitaev-preskill'))
    p.add_argument('--scale', type=int)

    p = sub.add_parser('edge-hamiltonian', parents=[common])
    _model_flags(p)
    p.add_argument('--dump-hamiltonian', dest='dump_hamiltonian',
                   action='store_true', default=None)

    p = sub.add_parser('gibbs-fit', parents=[common])
    _model_flags(p)
    p.add_argument('--family',
                   choices=('nearest_neighbor', 'two_block', 'compare'))
    p.add_argument('--recovered-start', dest='recovered_start',
                   action='store_true', default=None)

    p = sub.add_parser('spectrum-match', parents=[common])
    _model_flags(p)
    p.add_argument('--Lambda', dest='cutoffs', type=float, nargs='+')

    p = sub.add_parser('recovery-check', parents=[common])
    _model_flags(p)
    p.add_argument('--t-grid', dest='t_grid', type=float, nargs=3,
                   metavar=('START', 'STOP', 'STEP'))

    p = sub.add_parser('mps-converge', parents=[common])
    p.add_argument('--mps', help='JSON file of MPS tensors')
    p.add_argument('--d', type=int)
    p.add_argument('--bond', type=int)
    p.add_argument('--m', type=int, help='number of leading sites')
    p.add_argument('--lengths', type=int, nargs='+')

    p = sub.add_parser('renyi-fit', parents=[common])
    p.add_argument('--mps', help='JSON file of edge and corner tensors')
    p.add_argument('--d-in', dest='d_in', type=int)
    p.add_argument('--d-out', dest='d_out', type=int)
    p.add_argument('--bond', type=int)
    p.add_argument('--n-corners', dest='n_corners', type=int)
    p.add_argument('--perimeters', type=int, nargs='+')
    p.add_argument('--alpha', dest='alphas', type=int, nargs='+')
    return parser


def configure_logging(verbose=0, level=None):
    if level is None:
        level = ('WARNING', 'INFO', 'DEBUG')[min(verbose, 2)]
    logging.basicConfig(
        stream=sys.stderr, level=getattr(logging, level),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.log_level)
    try:
        config = ExperimentConfig.from_args(args)
        outcome = run(config, threads=args.threads, db=args.db)
        write_outcome(config, outcome, out=args.out, fmt=args.format)
    except ResourceError as err:
        logger.error('Resource limit: {}'.format(err))
        return EXIT_RESOURCE
    except DomainError as err:
        logger.error('{}: {}'.format(type(err).__name__, err))
        return EXIT_DOMAIN
    except EdgeStateError as err:
        logger.error('{}: {}'.format(type(err).__name__, err))
        return EXIT_ERROR
    return EXIT_SUCCESS


if __name__ == '__main__':
    sys.exit(main())
