#!/usr/bin/env python
"""test module of `ncdirac` package.

Usage::

    python -m ncdirac.test -h    # print this docstring
    python -m ncdirac.test       # doctest all (listed) files
    python -m ncdirac.test list  # list files to be doctested
    python -m ncdirac.test dirac.py [file2 [file3 [...]]] # doctest only these

or equivalently by passing Python code::

    python -c "import ncdirac.test; ncdirac.test.main()"  # doctest all (listed) files
    python -c "import ncdirac.test; ncdirac.test.main('list')"  # show files in doctest list
    python -c "import ncdirac.test; help(ncdirac.test)"  # print this docstring

File(name)s are interpreted within the package. Without a filename
argument, all files from attribute `files_for_doctest` are tested.
"""
import os, sys
import doctest

files_for_doctest = ['cli.py',
                     'dirac.py',
                     'exact_core.py',
                     'interfaces.py',
                     'onn.py',
                     'orbit.py',
                     'poissonize.py',
                     'qtorus.py',
                     'sample_structures.py',
                     'test.py',
                     os.path.join('utilities', 'math.py'),
                     os.path.join('utilities', 'utils.py'),
    ]
_files_written = ['_ncdirac_test_']
"""files written by the doc tests and hence, in case, to be deleted"""

def _clean_up(folder, start_matches, protected):
    """(permanently) remove entries in ``folder`` which begin with any of
    ``start_matches``, where ``""`` matches any string, and which are not
    in ``protected``.

    CAVEAT: use with care, as with ``"", ""`` as second and third
    arguments this could delete all files in ``folder``.
    """
    if not os.path.isdir(folder):
        return
    if not protected and "" in start_matches:
        raise ValueError(
            '''_clean_up(folder, [..., "", ...], []) is not permitted as it
               resembles "rm *"''')
    protected = protected + ["/"]
    for file_ in os.listdir(folder):
        if any(file_.startswith(s) for s in start_matches) \
                and not any(file_.startswith(p) for p in protected):
            os.remove(os.path.join(folder, file_))

def is_str(var):  # copy from utils to avoid relative import
    """`bytes` also fit the bill"""
    return isinstance(var, (str, bytes))

def various_doctests():
    """various doc tests.

    The property battery below runs on seeded random samples from
    `ncdirac.ss` and is deterministic.

    >>> import json
    >>> import numpy as np
    >>> import ncdirac
    >>> from ncdirac import ss
    >>> from ncdirac.exact_core import RationalMatrix, Singular, rank
    >>> from ncdirac.dirac import from_basis, graph_poisson, DiracStructure, NotDirac
    >>> from ncdirac.onn import (sigma, rho, nu, nu_elementary, transvection,
    ...     act, frac_linear, eval_word, parse_word, GroupElement, Word)
    >>> from ncdirac.poissonize import (to_poisson, split_blocks, from_split,
    ...     find_transversal, is_transversal, complement_shift)
    >>> from ncdirac.qtorus import (star, commutator_ratio, commutation_matrix,
    ...     clock_shift, FourierPolynomial, PoissonMatrix)
    >>> from ncdirac.orbit import (explore, connect, verify_witnesses,
    ...     default_generators, Orbit)
    >>> from ncdirac.cli import main
    >>> rs = np.random.RandomState(5)
    >>> samples = [ss.random_structure(1 + k % 5, rs, length=1 + k % 6)
    ...            for k in range(500)]
    >>> samples += [ss.random_foliation(3 + k % 3, rs, 2 + k % 3) for k in range(60)]
    >>> nullities = [g.nullity for g in samples]
    >>> all(nullities.count(k) >= 10 for k in range(4))
    True

    Exact linear algebra: reduction is idempotent and keeps the row
    space, inverses exist iff the rank is full, Hermite forms come with
    unimodular transforms, completions keep their leading rows and
    complements are moved onto coordinate subspaces:

    >>> from ncdirac.exact_core import (rref, invert, determinant, row_hnf,
    ...     saturate, complete_to_unimodular, IntegerMatrix, Subspace)
    >>> from ncdirac.poissonize import normalize_complement
    >>> def random_integer_matrix(rows, cols, bound=9):
    ...     return IntegerMatrix([[int(x) for x in rs.randint(-bound, bound + 1, cols)]
    ...                           for _ in range(rows)], (rows, cols))
    >>> for k in range(100):
    ...     m = random_integer_matrix(1 + k % 4, 1 + k % 5, 2).to_rational()
    ...     reduced = rref(m)[0]
    ...     assert rref(reduced)[0] == reduced
    ...     assert Subspace(m.cols, reduced) == Subspace(m.cols, m)
    >>> singular = 0
    >>> for k in range(100):
    ...     n = 1 + k % 4
    ...     m = random_integer_matrix(n, n, 1).to_rational()
    ...     try:
    ...         inverse = invert(m)
    ...     except Singular:
    ...         singular += 1
    ...         assert rank(m) < n
    ...     else:
    ...         assert rank(m) == n and m @ inverse == RationalMatrix.identity(n)
    >>> 0 < singular < 100
    True
    >>> for k in range(200):
    ...     a = random_integer_matrix(1 + k % 5, 1 + (k // 5) % 5)
    ...     h, u = row_hnf(a)
    ...     assert u @ a == h and abs(determinant(u)) == 1, a
    >>> for k in range(100):
    ...     n = 1 + k % 5
    ...     rows = saturate(random_integer_matrix(1 + k % n, n))
    ...     completed = complete_to_unimodular(rows)
    ...     assert abs(determinant(completed)) == 1
    ...     assert completed.take(range(rows.rows)) == rows
    ...     w = Subspace(n, rows)
    ...     a = normalize_complement(w)
    ...     assert abs(determinant(a)) == 1
    ...     image = Subspace(n, (a @ w.basis.T).T)
    ...     assert image == Subspace.coordinate(n, range(1, w.dim + 1))

    Validation of Dirac structures, all samples have rank n and are
    isotropic, perturbed bases are refused:

    >>> def isotropic(gamma):
    ...     a, b = gamma.A, gamma.B
    ...     return (a @ b.T + b @ a.T).is_zero()
    >>> assert all(rank(g.basis) == g.n and isotropic(g) for g in samples)
    >>> refused = 0
    >>> for gamma in samples[:100]:
    ...     try:
    ...         from_basis(ss.perturbed_basis(gamma, rs))
    ...     except NotDirac:
    ...         refused += 1
    >>> refused
    100

    The fractional-linear action is the action on graphs, where defined:

    >>> defined = 0
    >>> for k in range(200):
    ...     n = 2 + k % 3
    ...     pi = ss.random_skew(n, rs)
    ...     g = eval_word(ss.random_word(n, rs, 1 + k % 4), n)
    ...     try:
    ...         image = frac_linear(g, pi)
    ...     except Singular:
    ...         continue
    ...     defined += 1
    ...     assert graph_poisson(image) == act(g, graph_poisson(pi)), (k, pi, g)
    >>> assert defined > 50

    The projection to the dual space is the annihilator of the
    characteristic subspace:

    >>> assert all(g.p_star() == g.characteristic().characteristic.annihilator()
    ...            for g in samples[:200])

    Parity is preserved exactly by elements of determinant one:

    >>> for k in range(200):
    ...     gamma = samples[k]
    ...     g = eval_word(ss.random_word(gamma.n, rs, 1 + k % 4), gamma.n)
    ...     assert (act(g, gamma).parity == gamma.parity) == (g.det == 1), k
    ...     if gamma.is_poisson and act(g, gamma).is_poisson:
    ...         assert g.det == 1

    Shifts are conjugate to coordinate changes by partial exchanges:

    >>> for n in range(2, 6):
    ...     for i in range(1, n + 1):
    ...         for j in range(i + 1, n + 1):
    ...             s = sigma({i}, n)
    ...             assert s * rho(transvection(i, j, n)) * s == nu_elementary(i, j, n)

    A partial exchange of ``|I|`` equal to the nullity many coordinates
    gives a Poisson graph iff the coordinates are transversal, and no
    partial exchange of fewer coordinates does:

    >>> from itertools import combinations
    >>> subsets = [set(c) for k in range(5) for c in combinations(range(1, 5), k)]
    >>> structures = ([ss.random_structure(4, rs, 2 + k % 5) for k in range(35)] +
    ...               [ss.random_foliation(4, rs, 2 + k % 3) for k in range(15)])
    >>> for gamma in structures:
    ...     for i_set in subsets:
    ...         poisson = act(sigma(i_set, 4), gamma).is_poisson
    ...         if len(i_set) == gamma.nullity:
    ...             assert poisson == is_transversal(gamma, i_set)
    ...         if poisson:
    ...             assert len(i_set) >= gamma.nullity

    A single exchange changes the nullity by one:

    >>> assert all(abs(act(sigma({i}, g.n), g).nullity - g.nullity) == 1
    ...            for g in samples[:200] for i in range(1, g.n + 1))

    Commutation data of the crossed product: the exchanged structure is
    the graph of the commutation matrix, with vanishing ``I x I`` block
    and the holonomy in the ``I' x I`` block:

    >>> counts = {'even': 0, 'odd': 0}
    >>> for gamma in samples:
    ...     if counts[gamma.parity] >= 100:
    ...         continue
    ...     counts[gamma.parity] += 1
    ...     t = find_transversal(gamma)
    ...     pi = commutation_matrix(gamma, t.i_set).entries
    ...     assert graph_poisson(pi) == act(sigma(set(t.i_set), gamma.n), gamma)
    ...     i0 = [i - 1 for i in t.i_set]
    ...     i_prime0 = [j - 1 for j in t.i_prime]
    ...     assert pi.take(i0, i0).is_zero()
    ...     assert pi.take(i_prime0, i0) == split_blocks(gamma, t.i_set).beta
    >>> counts['even'] >= 50 and counts['odd'] >= 50
    True

    Splitting is undone by `from_split`, and moving the complementary
    torus shifts the Poisson matrix by an integer matrix:

    >>> for gamma in samples[:100] + samples[500:]:
    ...     t = find_transversal(gamma)
    ...     split = split_blocks(gamma, t.i_set)
    ...     assert from_split(split.pi_m, split.beta, t.i_set, gamma.n) == gamma
    ...     k_mat = [[int(x) for x in rs.randint(-2, 3, t.k)]
    ...              for _ in range(gamma.n - t.k)]
    ...     a, n_mat = complement_shift(gamma, t.i_set, k_mat)
    ...     moved = act(rho(a), gamma)
    ...     assert to_poisson(moved, t.i_set) == split.pi + n_mat
    ...     s = sigma(set(t.i_set), gamma.n)
    ...     assert rho(a) == s * nu(n_mat) * s

    The exchange diagram, exact as matrices:

    >>> for n in range(2, 6):
    ...     for k in range(n):
    ...         for rest in combinations(range(2, n + 1), k):
    ...             word = 'sigma{1};sigma{%s}' % ','.join(map(str, (1,) + rest))
    ...             assert eval_word(word, n) == sigma(set(rest), n)

    Star product, associativity, unit and central integer matrices:

    >>> for k in range(100):
    ...     n = 1 + k % 3
    ...     pi = PoissonMatrix(ss.random_skew(n, rs, 12, 12))
    ...     f, g, h = [ss.random_polynomial(n, rs, 1 + (k + d) % 8) for d in range(3)]
    ...     assert star(star(f, g, pi), h, pi).allclose(star(f, star(g, h, pi), pi))
    ...     assert star(f, FourierPolynomial.monomial([0] * n), pi) == f
    >>> pi = PoissonMatrix(ss.random_integer_skew(4, rs))
    >>> all(commutator_ratio(pi, i, j).is_trivial
    ...     for i in range(1, 5) for j in range(1, 5))
    True

    Noncommutative two-tori, an angle and its negative inverse are in one
    orbit, a shift is the conjugate of a transvection by an exchange:

    >>> half = ss.theta_graph('1/2')
    >>> str(connect(half, ss.theta_graph(-2), depth=1))
    'sigma{1,2}'
    >>> zero = ss.theta_graph(0)
    >>> shift = act(nu_elementary(1, 2, 2), zero)
    >>> str(connect(zero, shift, default_generators(2), depth=3))
    'sigma{1};rho[[1,0],[1,1]];sigma{1}'
    >>> theta = RationalMatrix([[0, '2/7'], ['-2/7', 0]])
    >>> for a in ([[1, 0], [1, 1]], [[1, 1], [0, 1]], [[1, 0], [-1, 1]]):
    ...     assert frac_linear(eval_word('rho' + json.dumps(a).replace(' ', ''), 2),
    ...                        theta) == theta
    >>> frac_linear(rho([[0, 1], [1, 0]]), theta) == -theta
    True

    Clock and shift matrices for all coprime ``p / q`` with ``q <= 12``:

    >>> from math import gcd
    >>> for q in range(1, 13):
    ...     for p in range(q):
    ...         if gcd(p, q) == 1:
    ...             rep = clock_shift(p, q)
    ...             assert rep.relation_residual() < 1e-12, (p, q)
    ...             assert rep.unitarity_residual() < 1e-12, (p, q)

    Orbits: witnesses are exact, single exchanges change the nullity by one
    and flip the parity, the double exchange ``sigma{1,2}`` changes it by
    an even amount and keeps the parity, coordinate changes keep both,
    runs are deterministic:

    >>> orbit = explore(ss.kronecker(3), depth=2)
    >>> verify_witnesses(orbit)
    True
    >>> edges = {'single': 0, 'double': 0}
    >>> for node in orbit[1:]:
    ...     last = Word(node.witness[-1:])
    ...     parent = orbit.find(act(eval_word(last, 2).inverse(), node.structure))
    ...     if parent is None:
    ...         continue
    ...     change = node.structure.nullity - parent.structure.nullity
    ...     if last[0].kind == 'sigma' and len(last[0].arg) % 2 == 1:
    ...         edges['single'] += 1
    ...         assert abs(change) == 1
    ...         assert node.structure.parity != parent.structure.parity
    ...     elif last[0].kind == 'sigma':
    ...         edges['double'] += 1
    ...         assert change % 2 == 0
    ...         assert node.structure.parity == parent.structure.parity
    ...     else:
    ...         assert node.structure.nullity == parent.structure.nullity
    ...         assert node.structure.parity == parent.structure.parity
    >>> edges['single'] > 0 and edges['double'] > 0
    True
    >>> again = explore(ss.kronecker(3), depth=2)
    >>> [(n.structure, str(n.witness)) for n in again] == [
    ...     (n.structure, str(n.witness)) for n in orbit]
    True
    >>> Orbit.from_json(json.loads(orbit.dumps())).structures() == orbit.structures()
    True

    Parallel expansion gives the same result:

    >>> try:
    ...     parallel = explore(ss.kronecker(3), depth=2, options={'n_jobs': 2})
    ... except (OSError, ImportError):  # no processes available
    ...     parallel = orbit
    >>> [str(n.witness) for n in parallel] == [str(n.witness) for n in orbit]
    True

    JSON round trips of the documented types:

    >>> gamma = samples[7]
    >>> DiracStructure.loads(gamma.dumps()) == gamma
    True
    >>> g = eval_word(ss.random_word(3, rs, 3), 3)
    >>> GroupElement.loads(g.dumps()) == g
    True
    >>> str(parse_word(str(ss.random_word(3, 1, 4)))) == str(ss.random_word(3, 1, 4))
    True
    >>> f = ss.random_polynomial(2, rs)
    >>> FourierPolynomial.loads(f.dumps()) == f
    True

    The command line interface and its exit codes:

    >>> structure = json.dumps(half.to_json())
    >>> main(['inspect', '--quiet', structure])  # doctest: +ELLIPSIS
    n:              2
    ...
    0
    >>> main(['inspect', '{"n": 2, "basis": [[1, 0, 1, 0], [0, 1, 0, 1]]}'])
    3
    >>> main(['inspect', '{"n": 2, "basis": [[1, 0, 1, 0]'])
    1
    >>> main(['act', '--word', '', structure]) == 0  # doctest: +ELLIPSIS
    {...}
    True
    >>> main(['act', '--word', 'sigma{9}', structure])
    1
    >>> main(['act', '--word', 'rho[[1,0,0],[0,1,0],[0,0,1]]', structure])
    4
    >>> kronecker = json.dumps(ss.kronecker(3).to_json())
    >>> main(['poissonize', kronecker])
    {"I": [1], "pi": [[0, "-1/3"], ["1/3", 0]], "pi_m": [[0]], "beta": [["1/3"]], "beta_mod1": [["1/3"]]}
    0
    >>> main(['poissonize', '--I', '{}', kronecker])
    5
    >>> main(['poissonize', '--I', '{1,2}', structure])
    1
    >>> main(['star', '{"n": 1, "terms": 5}', '{"n": 1, "terms": []}', '--pi', '[[0]]'])
    1
    >>> main(['star', '{"n": 1, "terms": [{"r": 2}]}', '{"n": 1, "terms": []}',
    ...       '--pi', '[[0]]'])
    1
    >>> main(['inspect', '{"n": -1, "basis": []}'])
    1
    >>> main(['fraclin', '--word', 'sigma{1,2}', '--pi', '[[0, 0], [0, 0]]'])
    2
    >>> main(['orbit', structure, '--target', json.dumps(ss.theta_graph(-2).to_json()),
    ...       '--depth', '1'])
    {"witness": "sigma{1,2}", "depth": 1}
    0
    >>> main(['orbit', json.dumps(zero.to_json()), '--quiet', '--target',
    ...       structure, '--depth', '2'])
    6
    >>> main(['rep', '--theta', '1/3'])  # doctest: +ELLIPSIS
    p/q:                 1/3
    ...
    0
    >>> main(['verify', kronecker])  # doctest: +ELLIPSIS
    isotropic ... pass
    ...
    0
    >>> main(['frobnicate'])
    1
    >>> with open('_ncdirac_test_structure.json', 'w') as f:
    ...     _ = f.write(kronecker)
    >>> main(['verify', '--json', '_ncdirac_test_structure.json'])  # doctest: +ELLIPSIS
    {"n": 2, "passed": true, ...}
    0

    """

def doctest_files(file_list=files_for_doctest, **kwargs):
    """doctest all (listed) files of the `ncdirac` package.

    Details: accepts ``verbose`` and all other keyword arguments that
    `doctest.testfile` would accept, while negative ``verbose`` values
    are passed as 0.
    """
    if not isinstance(file_list, list) and is_str(file_list):
        file_list = [file_list]
    verbosity_here = kwargs.get('verbose', 0)
    if verbosity_here < 0:
        kwargs['verbose'] = 0
    failures = 0
    for file_ in file_list:
        file_ = file_.strip().strip(os.path.sep)
        if file_.startswith('ncdirac' + os.path.sep):
            file_ = file_[8:]
        if verbosity_here >= 0:
            print('doctesting %s ...' % file_,
                  ' ' * (max(len(_file) for _file in file_list) -
                         len(file_)),
                  end="")
            sys.stdout.flush()
        protected_files = os.listdir('.')
        report = doctest.testfile(file_,
                                  package=__package__,
                                  **kwargs)
        _clean_up('.', _files_written, protected_files)
        failures += report[0]
        if verbosity_here >= 0:
            print(report)
    return failures

def get_version():
    try:
        with open(__file__[:-7] + '__init__.py', 'r') as f:
            for line in f.readlines():
                if line.startswith('__version__'):
                    return line[14:].split()[0].strip('"')
    except IOError:
        return ""

def main(*args, **kwargs):
    """test the `ncdirac` package.

    The first argument can be '-h' or '--help' or 'list' to list all
    files to be tested. Otherwise, arguments can be file(name)s to be
    tested, where names are interpreted relative to the package root
    and a leading 'ncdirac' + path separator is ignored.

    By default all files are tested.

    :See also: ``python -c "import ncdirac.test; help(ncdirac.test)"``
    """
    if len(args) > 0:
        if args[0].startswith(('-h', '--h')):
            print(__doc__)
            exit(0)
        elif args[0].startswith('list'):
            for file_ in files_for_doctest:
                print(file_)
            exit(0)
    else:
        v = get_version()
        print("doctesting `ncdirac` package%s by calling `doctest_files`:"
              % ((" (v%s)" % v) if v else ""))
    return doctest_files(list(args) if args else files_for_doctest, **kwargs)

if __name__ == "__main__":
    exit(main(*sys.argv[1:]) > 0)  # 0 if failures == 0 else 1
