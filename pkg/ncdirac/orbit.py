# -*- coding: utf-8 -*-
"""Bounded breadth-first exploration of the orbit of a Dirac structure
under a generating set of O(n,n|Z).

Orbits are infinite in general, hence exploration stops at a depth
and at a node cap. A structure not found within the bounds is no
evidence that it is not in the orbit.

Each structure is emitted once, with the lexicographically smallest
among the shortest sequences of generator indices reaching it, in the
order of increasing depth and then witness. Frontiers can be expanded
in parallel processes without changing the result.

>>> from ncdirac.dirac import graph_poisson
>>> from ncdirac.orbit import explore, connect
>>> seed = graph_poisson([[0, '1/2'], ['-1/2', 0]])
>>> orbit = explore(seed, depth=1)
>>> orbit.bound, len(orbit), str(orbit.find(graph_poisson([[0, -2], [2, 0]])).witness)
('depth', 5, 'sigma{1,2}')
>>> str(connect(seed, graph_poisson([[0, -2], [2, 0]]), depth=1))
'sigma{1,2}'

"""
import ast
import collections
import functools
from multiprocessing import Pool as ProcessingPool
from .exact_core import DimensionMismatch, IntegerMatrix
from .onn import (Word, parse_word, eval_word, act, sigma, rho, nu,
                  transvection, elementary_skew, format_matrix)
from .dirac import DiracStructure
from .interfaces import (ComputationError, InputError, JSONSerializable,
                         require_keys)
from .utilities import utils
from .utilities.utils import ElapsedWCTime


class NotFoundWithinBounds(ComputationError):
    """the target was not reached within depth and node cap, which does
    not prove it is outside of the orbit"""


orbit_default_options = {
    'depth': '3  # maximal number of generator steps from the seed',
    'max_nodes': '10000  # maximal number of emitted structures, seed included',
    'n_jobs': '0  # number of processes expanding a frontier, 0 means sequential, None all cpus',
    'generators': "'default'  # 'default' or 'special', the set used when no generators are passed",
    'verbose': '0  # >0 prints a progress message per depth level, -9 is maximally quiet',
    'verb_disp': '1  # show progress every verb_disp depth levels if verbose > 0',
}

class OrbitOptions(dict):
    """a dictionary with the available options and their default values
    for `explore` and `connect`.

    ``OrbitOptions()`` returns all options with their defaults and a
    comment string, ``OrbitOptions('job')`` the options containing
    ``'job'`` in name or description, ``OrbitOptions(dict_)`` or
    ``OrbitOptions(depth=2)`` the given options only. Unique starting
    sequences of option names are accepted and corrected.

    >>> from ncdirac.orbit import OrbitOptions
    >>> sorted(OrbitOptions('process'))
    ['n_jobs']
    >>> opts = OrbitOptions(dep=2).complement()
    >>> opts('depth'), opts('max_nodes'), opts('generators'), opts('n_jobs')
    (2, 10000, 'default', 0)
    >>> import warnings
    >>> with warnings.catch_warnings(record=True) as warns:
    ...     warnings.simplefilter('always')
    ...     opts = OrbitOptions({'foo': 1})
    >>> len(opts), 'invalid key' in str(warns[0].message)
    (0, True)

    """
    @staticmethod
    def defaults():
        """return a dictionary with default option values and description"""
        return orbit_default_options

    def __init__(self, s=None, **kwargs):
        if s is None and not kwargs:
            super(OrbitOptions, self).__init__(OrbitOptions.defaults())
            return
        if utils.is_str(s):
            super(OrbitOptions, self).__init__(OrbitOptions().match(s))
            return
        if isinstance(s, dict):
            if kwargs:
                raise ValueError('Dictionary argument must be the only argument')
            super(OrbitOptions, self).__init__(s)
        elif s is None:
            super(OrbitOptions, self).__init__(kwargs)
        else:
            raise ValueError('The first argument must be a string or a dict '
                             'or a keyword argument or `None`')
        for key in list(self.keys()):
            correct_key = self.corrected_key(key)
            if correct_key is None:
                utils.print_warning('invalid key ``' + str(key) +
                                    '`` removed', '__init__', 'OrbitOptions')
                self.pop(key)
            elif key != correct_key:
                self[correct_key] = self.pop(key)

    def match(self, s=''):
        """return all options that match, in the name or the description,
        with string `s`, case is disregarded.
        """
        match = s.lower()
        res = {}
        for k in sorted(self):
            s = str(k) + '=\'' + str(self[k]) + '\''
            if match in s.lower():
                res[k] = self[k]
        return OrbitOptions(res)

    def corrected_key(self, key):
        """return the matching valid key, if ``key.lower()`` is a unique
        starting sequence to identify the valid key, ``else None``
        """
        key = key.lower()
        if key in orbit_default_options:
            return key
        matching_keys = [k for k in orbit_default_options if k.startswith(key)]
        return matching_keys[0] if len(matching_keys) == 1 else None

    def complement(self):
        """add all missing options with their default values"""
        for key in OrbitOptions.defaults():
            if key not in self:
                self[key] = OrbitOptions.defaults()[key]
        return self

    def __call__(self, key):
        """return the evaluated value of option `key`, comments removed"""
        val = self[self.corrected_key(key) or key]
        if utils.is_str(val):
            text = val.split('#')[0].strip()
            try:
                val = ast.literal_eval(text)
            except (ValueError, SyntaxError):
                val = text
        return val


class GeneratorSet(list):
    """a list of ``(label, element)`` pairs of integral `GroupElement`,
    closed under inverses, where ``label`` is word text evaluating to
    ``element``.

    >>> from ncdirac.orbit import GeneratorSet, default_generators
    >>> default_generators(1).labels
    ['sigma{1}', 'rho[[-1]]']
    >>> gens = GeneratorSet.from_words(['nu[[0,1],[-1,0]]', 'sigma{1,2}'], 2)
    >>> gens.labels
    ['nu[[0,1],[-1,0]]', 'inv(nu[[0,1],[-1,0]])', 'sigma{1,2}']

    """
    def __init__(self, n, pairs=()):
        super(GeneratorSet, self).__init__()
        self.n = n
        for label, g in pairs:
            self.add(label, g)

    def add(self, label, g):
        """append ``(label, g)`` unless ``g`` is already present"""
        if g.n != self.n:
            raise DimensionMismatch('generator %s is not in O(%d,%d)'
                                    % (label, self.n, self.n))
        if not g.integral:
            raise InputError('generator %s is not integral' % label)
        if g not in self.elements:
            self.append((label, g))

    @property
    def labels(self):
        return [label for label, _ in self]
    @property
    def elements(self):
        return [g for _, g in self]

    @staticmethod
    def from_words(words, n):
        """return the set of the given words and their inverses, each
        inverse right after its word"""
        gens = GeneratorSet(n)
        for text in words:
            w = parse_word(text) if utils.is_str(text) else text
            if not len(w):
                raise InputError('the empty word is no generator')
            g = eval_word(w, n)
            gens.add(str(w), g)
            gens.add(str(w.inverse()), g.inverse())
        if not len(gens):
            raise InputError('no generators given')
        return gens

    def witness(self, indices):
        """return the `Word` of a sequence of generator indices"""
        w = Word()
        for k in indices:
            w = w + parse_word(self[k][0])
        return w

def _add_rho(gens, a):
    a = IntegerMatrix(a)
    gens.add('rho' + format_matrix(a), rho(a))

def _add_transvections(gens, n):
    """add `rho` of all transvections and of their inverses"""
    eye = IntegerMatrix.identity(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                t = transvection(i, j, n)
                _add_rho(gens, t)
                _add_rho(gens, eye + eye - t)

def default_generators(n):
    """return the generating set of O(n,n|Z) made of the partial exchanges
    ``sigma{i}``, the exchange ``sigma{1,2}`` when ``n > 1``, which
    connects a Poisson matrix to its inverse in one step, and of `rho` of generators of GL(n,Z): transvections
    and their inverses, neighbor swaps and ``diag(-1, 1, ..., 1)``.

    >>> from ncdirac.orbit import default_generators
    >>> gens = default_generators(2)
    >>> gens.labels[:4]
    ['sigma{1}', 'sigma{2}', 'sigma{1,2}', 'rho[[1,0],[1,1]]']
    >>> len(gens), all(g.integral for g in gens.elements)
    (9, True)

    """
    if n < 1:
        raise DimensionMismatch('generators need n >= 1, got %d' % n)
    gens = GeneratorSet(n)
    for i in range(1, n + 1):
        gens.add('sigma{%d}' % i, sigma({i}, n))
    if n > 1:
        gens.add('sigma{1,2}', sigma({1, 2}, n))
    _add_transvections(gens, n)
    for i in range(1, n):
        order = list(range(n))
        order[i - 1], order[i] = i, i - 1
        _add_rho(gens, [[int(c == order[r]) for c in range(n)] for r in range(n)])
    _add_rho(gens, [[int(r == c) * (-1 if r == 0 else 1) for c in range(n)]
                    for r in range(n)])
    return gens

def special_generators(n):
    """return ``sigma{1,2}``, `rho` of transvections and their inverses
    and the elementary shifts `nu` and their inverses, which generate
    the special group SO(n,n|Z) for ``n >= 2``. For ``n == 1`` the set
    is ``rho[[-1]]`` alone.

    >>> from ncdirac.orbit import special_generators
    >>> gens = special_generators(2)
    >>> gens.labels[0], gens.labels[-2:]
    ('sigma{1,2}', ['nu[[0,-1],[1,0]]', 'nu[[0,1],[-1,0]]'])
    >>> all(g.is_special for g in gens.elements)
    True

    """
    if n < 1:
        raise DimensionMismatch('generators need n >= 1, got %d' % n)
    gens = GeneratorSet(n)
    if n == 1:
        _add_rho(gens, [[-1]])
        return gens
    gens.add('sigma{1,2}', sigma({1, 2}, n))
    _add_transvections(gens, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            shift = elementary_skew(i, j, n)
            gens.add('nu' + format_matrix(shift), nu(shift))
            gens.add('nu' + format_matrix(-shift), nu(-shift))
    return gens

def generators_by_name(name, n):
    """return `default_generators` or `special_generators`"""
    factories = {'default': default_generators,
                 'special': special_generators}
    if name not in factories:
        raise InputError('generators "%s" are not one of default, special'
                         % str(name))
    return factories[name](n)


class OrbitNode(collections.namedtuple(
        'OrbitNode', ['structure', 'witness', 'depth'])):
    """a structure of the orbit, a `Word` mapping the seed onto it and
    the length of the word"""
    def to_json(self):
        return {'structure': self.structure.to_json(),
                'witness': str(self.witness),
                'depth': self.depth}


class Orbit(list, JSONSerializable):
    """the `OrbitNode` list returned by `explore`, with attributes
    ``seed``, ``generators`` and ``bound``, the reason of termination:
    ``'depth'``, ``'nodes'`` or ``'complete'`` when no new structures
    were left.
    """
    def __init__(self, seed, generators, nodes=(), bound='depth'):
        super(Orbit, self).__init__(nodes)
        self.seed = seed
        self.generators = generators
        self.bound = bound

    def structures(self):
        return [node.structure for node in self]

    def find(self, structure):
        """return the `OrbitNode` of ``structure`` or `None`"""
        for node in self:
            if node.structure == structure:
                return node
        return None

    def to_json(self):
        return {'seed': self.seed.to_json(),
                'bound': self.bound,
                'nodes': [node.to_json() for node in self]}

    @classmethod
    def from_json(cls, doc):
        require_keys(doc, ('seed', 'bound', 'nodes'), 'Orbit')
        seed = DiracStructure.from_json(doc['seed'])
        nodes = [OrbitNode(DiracStructure.from_json(node['structure']),
                           parse_word(node['witness']), int(node['depth']))
                 for node in doc['nodes']]
        return cls(seed, None, nodes, doc['bound'])


def _images(gamma, elements):
    """return ``[act(g, gamma) for g in elements]``, the unit of work of
    `FrontierExpander`"""
    return [act(g, gamma) for g in elements]

class FrontierExpander(object):
    """A class and context manager computing the images of all
    structures of a frontier under all generators, in parallel.

    This class is based on the ``Pool`` class of the `multiprocessing`
    module and returns results in input order::

        with FrontierExpander(elements, n_jobs) as expand:
            images = expand(frontier)

    ``images[i][k] == act(elements[k], frontier[i])``. With
    ``number_of_processes <= 0`` no `multiprocessing` is invoked.

    >>> from ncdirac.orbit import FrontierExpander, default_generators
    >>> from ncdirac.dirac import graph_poisson
    >>> elements = default_generators(2).elements
    >>> with FrontierExpander(elements, 0) as expand:
    ...     images = expand([graph_poisson([[0, 1], [-1, 0]])])
    >>> len(images), len(images[0])
    (1, 9)

    """
    def __init__(self, elements, number_of_processes=0):
        self.work = functools.partial(_images, elements=list(elements))
        self.processes = number_of_processes
        if self.processes is None or self.processes > 0:
            self.pool = ProcessingPool(self.processes)
        else:
            self.pool = None

    def __call__(self, structures):
        if not self.pool or len(structures) < 2:
            return [self.work(gamma) for gamma in structures]
        return self.pool.map(self.work, structures)

    def terminate(self):
        """free allocated processing pool"""
        if not self.pool:
            return
        self.pool.terminate()
        self.pool.join()
        self.pool = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.terminate()


def _resolve(seed, gens, depth, max_nodes, options):
    opts = OrbitOptions(options or {}).complement()
    depth = opts('depth') if depth is None else depth
    max_nodes = opts('max_nodes') if max_nodes is None else max_nodes
    if depth < 0 or max_nodes < 0:
        raise InputError('depth=%s and max_nodes=%s must be nonnegative'
                         % (str(depth), str(max_nodes)))
    if gens is None:
        gens = generators_by_name(opts('generators'), seed.n)
    if gens.n != seed.n:
        raise DimensionMismatch('generators of O(%d,%d) cannot act in '
                                'dimension %d' % (gens.n, gens.n, seed.n))
    return opts, gens, depth, max_nodes

def _bfs(seed, gens, depth, max_nodes, opts, target=None):
    """return ``(orbit, found)``, stop early if ``target`` is emitted"""
    verbose = opts('verbose')
    timer = ElapsedWCTime()
    nodes = [OrbitNode(seed, Word(), 0)]
    seen = {seed: ()}
    if target is not None and target == seed:
        return Orbit(seed, gens, nodes, 'depth'), True
    frontier = [(seed, ())]
    bound = 'depth'
    with FrontierExpander(gens.elements, opts('n_jobs')) as expand:
        for level in range(1, depth + 1):
            if not frontier:
                break
            images = expand([gamma for gamma, _ in frontier])
            new_frontier = []
            for (_, indices), children in zip(frontier, images):
                for k, child in enumerate(children):
                    if child in seen:
                        continue
                    if len(nodes) >= max(max_nodes, 1):
                        utils.print_warning('node cap %d reached' % max_nodes,
                                            'explore', iteration=level,
                                            verbose=verbose)
                        return Orbit(seed, gens, nodes, 'nodes'), False
                    seen[child] = indices + (k,)
                    new_frontier.append((child, indices + (k,)))
                    nodes.append(OrbitNode(child, gens.witness(indices + (k,)),
                                           level))
                    if target is not None and child == target:
                        return Orbit(seed, gens, nodes, 'depth'), True
            frontier = new_frontier
            if verbose > 0 and level % opts('verb_disp') == 0:
                utils.print_message('%d new, %d structures (%ss, total %ss)'
                                    % (len(frontier), len(nodes),
                                       utils.num2str(timer.lap()),
                                       utils.num2str(timer.elapsed)),
                                    'explore', iteration=level, verbose=verbose)
    if not frontier:
        bound = 'complete'
    return Orbit(seed, gens, nodes, bound), False

def explore(seed, gens=None, depth=None, max_nodes=None, options=None):
    """return the `Orbit` of ``seed`` explored breadth first.

    ``gens`` is a `GeneratorSet`, by default chosen by option
    ``'generators'``; ``depth`` and ``max_nodes`` default to the
    options of the same name, see `OrbitOptions`.

    >>> from ncdirac.dirac import graph_poisson
    >>> from ncdirac.orbit import explore, default_generators
    >>> gamma = graph_poisson([[0, '1/3'], ['-1/3', 0]])
    >>> explore(gamma, depth=0).structures() == [gamma]
    True
    >>> orbit = explore(gamma, default_generators(2), depth=2)
    >>> [node.depth for node in orbit].count(0), orbit.find(gamma).witness
    (1, Word(''))
    >>> orbit = explore(gamma, depth=3, max_nodes=5)
    >>> len(orbit), orbit.bound
    (5, 'nodes')
    >>> explore(graph_poisson([[0]]), default_generators(1), depth=5).bound
    'complete'

    """
    opts, gens, depth, max_nodes = _resolve(seed, gens, depth, max_nodes,
                                            options)
    return _bfs(seed, gens, depth, max_nodes, opts)[0]

def connect(g1, g2, gens=None, depth=None, max_nodes=None, options=None):
    """return a `Word` ``w`` with ``act(eval_word(w, n), g1) == g2``.

    Raise `NotFoundWithinBounds` if ``g2`` is not reached within
    ``depth`` and ``max_nodes``.

    >>> from ncdirac.dirac import graph_poisson
    >>> from ncdirac.orbit import connect
    >>> zero = graph_poisson([[0, 0], [0, 0]])
    >>> str(connect(zero, graph_poisson([[0, -1], [1, 0]]), depth=3))
    'sigma{1};rho[[1,0],[1,1]];sigma{1}'
    >>> connect(zero, zero, depth=0)
    Word('')
    >>> try:
    ...     connect(zero, graph_poisson([[0, '1/2'], ['-1/2', 0]]), depth=2)
    ... except ValueError as e:
    ...     print(e.tag)
    NotFoundWithinBounds

    """
    if g1.n != g2.n:
        raise DimensionMismatch('structures in dimension %d and %d'
                                % (g1.n, g2.n))
    opts, gens, depth, max_nodes = _resolve(g1, gens, depth, max_nodes,
                                            options)
    orbit, found = _bfs(g1, gens, depth, max_nodes, opts, target=g2)
    if not found:
        raise NotFoundWithinBounds(
            'target not reached within depth %d and %d nodes (bound %s)'
            % (depth, max_nodes, orbit.bound))
    return orbit[-1].witness

def verify_witnesses(orbit):
    """`True` iff every witness maps the seed onto its structure"""
    n = orbit.seed.n
    return all(act(eval_word(node.witness, n), orbit.seed) == node.structure
               for node in orbit)
