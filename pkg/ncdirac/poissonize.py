# -*- coding: utf-8 -*-
"""Turn a Dirac structure into a Poisson matrix by a partial exchange
`sigma` over a coordinate transversal, and read off the transverse
Poisson structure and the holonomy of the characteristic foliation.

For a structure ``G`` of nullity ``k`` with characteristic subspace
``C``, a set ``I`` of ``k`` coordinates is a transversal iff the
coordinate subspace of the complement ``I'`` meets ``C`` only in zero.
Exactly then ``sigma(I)(G)`` is the graph of a Poisson matrix ``pi``,
whose ``I x I`` block vanishes, whose ``I' x I'`` block is the
transverse Poisson matrix on the torus of the coordinates ``I'`` and
whose ``I' x I`` block is the holonomy ``beta``, the linear map with
``C = {X : X_I' = beta X_I}``.

>>> from ncdirac.exact_core import Subspace
>>> from ncdirac.dirac import from_basis
>>> from ncdirac.onn import act
>>> from ncdirac.poissonize import find_transversal, to_poisson, split_blocks, from_split
>>> kronecker = from_basis([[3, 1, 0, 0], [0, 0, 1, -3]])
>>> find_transversal(kronecker).i_set
(1,)
>>> to_poisson(kronecker, [2]).to_json()
[[0, 3], [-3, 0]]
>>> split = split_blocks(kronecker, [2])
>>> split.pi_m.to_json(), split.beta.to_json()
([[0]], [[3]])

"""
import collections
from fractions import Fraction
from .exact_core import (RationalMatrix, IntegerMatrix, Subspace,
                         NotSaturated, invert, saturate,
                         primitive_integer_rows, complete_to_unimodular)
from .dirac import NotPoisson, graph_poisson, skew_matrix, from_basis
from .onn import sigma, act, IndexOutOfRange
from .interfaces import ComputationError

__all__ = ['NotPoisson', 'NotSaturatable', 'NotMinimalTransversal', 'TransversalChoice', 'SplitData',
           'find_transversal', 'to_poisson', 'split_blocks', 'from_split',
           'normalize_complement', 'complement_shift', 'is_transversal']


class NotSaturatable(ComputationError):
    """a rational complement could not be moved onto a coordinate
    subspace by GL(n,Z)"""

class NotMinimalTransversal(ComputationError):
    """``sigma_I`` gives a Poisson structure, but ``|I|`` exceeds the
    nullity, hence there is no holonomy block to split off"""


def _index_sets(i_set, n):
    """return sorted 0-based ``(I, I')`` for the 1-based ``i_set``"""
    i_set = sorted(set(i_set))
    for i in i_set:
        if not 1 <= i <= n:
            raise IndexOutOfRange('index %d is not in 1..%d' % (i, n))
    i0 = [i - 1 for i in i_set]
    return i0, [j for j in range(n) if j not in i0]


class TransversalChoice(collections.namedtuple(
    'TransversalChoice', ['i_set', 'i_prime', 'order'])):
    """1-based index set ``I``, its complement ``I'`` and ``order``,
    the coordinate renumbering which puts ``I'`` first, both ascending.
    """
    @property
    def k(self):
        return len(self.i_set)


class SplitData(collections.namedtuple(
    'SplitData', ['i_set', 'pi', 'pi_m', 'beta', 'beta_mod1'])):
    """``pi`` is the Poisson matrix of ``sigma(I)(G)``, ``pi_m`` its
    ``I' x I'`` block, ``beta`` the ``(n-k) x k`` holonomy map and
    ``beta_mod1`` its entries in ``[0, 1)``.
    """
    def to_json(self):
        return {'I': list(self.i_set),
                'pi': self.pi.to_json(),
                'pi_m': self.pi_m.to_json(),
                'beta': self.beta.to_json(),
                'beta_mod1': self.beta_mod1.to_json()}


def find_transversal(gamma):
    """return the `TransversalChoice` of the pivot columns of the
    canonical basis of the characteristic subspace.

    >>> from ncdirac.dirac import graph_poisson, graph_two_form
    >>> find_transversal(graph_poisson([[0, 1], [-1, 0]])).i_set
    ()
    >>> t = find_transversal(graph_two_form([[0, 0, 0]] * 3))
    >>> t.i_set, t.i_prime, t.k
    ((1, 2, 3), (), 3)

    """
    c = gamma.characteristic().characteristic
    i_set = tuple(p + 1 for p in c.pivots)
    i_prime = tuple(j for j in range(1, gamma.n + 1) if j not in i_set)
    return TransversalChoice(i_set, i_prime, i_prime + i_set)

def is_transversal(gamma, i_set):
    """`True` iff ``|I|`` is the nullity and the coordinate subspace of
    ``I'`` meets the characteristic subspace only in zero"""
    i0, i_prime0 = _index_sets(i_set, gamma.n)
    c = gamma.characteristic().characteristic
    complement = Subspace.coordinate(gamma.n, [j + 1 for j in i_prime0])
    return len(i0) == c.dim and complement.intersection_dim(c) == 0

def to_poisson(gamma, i_set):
    """return the Poisson matrix of ``sigma(i_set)(gamma)``.

    Raise `NotPoisson` if the exchanged structure has positive nullity,
    which happens iff ``i_set`` is not a transversal when its size is
    the nullity.

    >>> from ncdirac.dirac import foliation, graph_poisson
    >>> to_poisson(foliation(Subspace.coordinate(2, [1])), [1]).is_zero()
    True
    >>> try:
    ...     to_poisson(foliation(Subspace.coordinate(2, [1])), [2])
    ... except ValueError as e:
    ...     print(e.tag)
    NotPoisson

    """
    _index_sets(i_set, gamma.n)
    exchanged = act(sigma(set(i_set), gamma.n), gamma)
    if not exchanged.is_poisson:
        raise NotPoisson('sigma{%s} of the structure has nullity %d, the '
                         'coordinates are not transversal'
                         % (','.join(str(i) for i in sorted(set(i_set))),
                            exchanged.nullity))
    return exchanged.poisson_matrix()

def split_blocks(gamma, i_set):
    """return the `SplitData` of ``gamma`` for the transversal ``i_set``.

    >>> from ncdirac.dirac import graph_poisson, graph_two_form
    >>> split = split_blocks(graph_poisson([[0, '1/2'], ['-1/2', 0]]), [])
    >>> split.pi_m.to_json(), split.beta.shape
    ([[0, '1/2'], ['-1/2', 0]], (2, 0))
    >>> split = split_blocks(graph_two_form([[0, 0], [0, 0]]), [1, 2])
    >>> split.pi_m.shape, split.beta.shape
    ((0, 0), (0, 2))
    >>> split = split_blocks(from_split([[0]], [['-5/2']], [1], 2), [1])
    >>> split.beta.to_json(), split.beta_mod1.to_json()
    ([['-5/2']], [['1/2']])
    >>> try:
    ...     split_blocks(graph_poisson([[0, '1/2'], ['-1/2', 0]]), [1, 2])
    ... except ValueError as e:
    ...     print(e.tag)
    NotMinimalTransversal

    """
    i0, i_prime0 = _index_sets(i_set, gamma.n)
    pi = to_poisson(gamma, i_set)
    c = gamma.characteristic().characteristic
    if len(i0) != c.dim:
        raise NotMinimalTransversal('sigma_I is Poisson for %d coordinates, '
                                    'a split needs exactly the nullity %d'
                                    % (len(i0), c.dim))
    # rows of g restrict to the unit vectors on I
    g = invert(c.basis.take(col_indices=i0)) @ c.basis
    beta = g.take(col_indices=i_prime0).T
    return SplitData(tuple(i + 1 for i in i0), pi,
                     pi.take(i_prime0, i_prime0),
                     beta,
                     RationalMatrix._from_rows(
                         [[x - (x.numerator // x.denominator) for x in row]
                          for row in beta.tolist()], beta.cols))

def from_split(pi_m, beta, i_set, n):
    """return the structure whose characteristic subspace is the graph
    of ``beta`` over the coordinates ``i_set`` and whose transverse
    Poisson matrix is ``pi_m``, the inverse of `split_blocks`.

    >>> from ncdirac.poissonize import from_split
    >>> from_split([[0]], [[3]], [2], 2) == from_basis([[3, 1, 0, 0], [0, 0, 1, -3]])
    True

    """
    i0, i_prime0 = _index_sets(i_set, n)
    pi_m = skew_matrix(RationalMatrix(pi_m, (len(i_prime0), len(i_prime0))),
                       'transverse Poisson matrix')
    beta = RationalMatrix(beta, (len(i_prime0), len(i0)))
    pi = [[Fraction(0)] * n for _ in range(n)]
    for a, r in enumerate(i_prime0):
        for b, s in enumerate(i_prime0):
            pi[r][s] = pi_m[a, b]
        for b, s in enumerate(i0):
            pi[r][s] = beta[a, b]
            pi[s][r] = -beta[a, b]
    return act(sigma(set(i_set), n), graph_poisson(pi))

def normalize_complement(w):
    """return ``a`` in GL(n,Z) mapping the rational `Subspace` ``w`` onto
    the span of the first ``dim w`` unit vectors.

    >>> from ncdirac.poissonize import normalize_complement
    >>> normalize_complement(Subspace(2, [[1, 1]])).to_json()
    [[1, 0], [-1, 1]]
    >>> normalize_complement(Subspace(2, [['1/2', '1/3']])) == (
    ...     normalize_complement(Subspace(2, [[3, 2]])))
    True

    """
    rows = saturate(primitive_integer_rows(w.basis))
    try:
        completed = complete_to_unimodular(rows)
    except NotSaturated as e:
        raise NotSaturatable(str(e))
    return invert(completed.T).to_integer()

def complement_shift(gamma, i_set, k_mat):
    """return ``(a, n_mat)`` where the coordinate change ``rho(a)``,
    ``a = I + K`` with the integer ``(n-k) x k`` matrix ``k_mat`` placed
    on the ``I' x I`` block, moves the complementary torus and shifts
    the Poisson matrix of the transversal ``i_set`` by the integer
    skew matrix ``n_mat``::

        to_poisson(act(rho(a), gamma), i_set) == to_poisson(gamma, i_set) + n_mat

    >>> from ncdirac.poissonize import complement_shift
    >>> from ncdirac.onn import rho
    >>> kronecker = from_basis([[3, 1, 0, 0], [0, 0, 1, -3]])
    >>> a, n_mat = complement_shift(kronecker, [2], [[4]])
    >>> a.to_json(), n_mat.to_json()
    ([[1, 4], [0, 1]], [[0, 4], [-4, 0]])
    >>> to_poisson(act(rho(a), kronecker), [2]).to_json()
    [[0, 7], [-7, 0]]

    """
    n = gamma.n
    i0, i_prime0 = _index_sets(i_set, n)
    k_mat = IntegerMatrix(k_mat, (len(i_prime0), len(i0)))
    a = [[int(r == c) for c in range(n)] for r in range(n)]
    n_mat = [[0] * n for _ in range(n)]
    for p, r in enumerate(i_prime0):
        for q, s in enumerate(i0):
            a[r][s] += k_mat[p, q]
            n_mat[r][s] = k_mat[p, q]
            n_mat[s][r] = -k_mat[p, q]
    return IntegerMatrix(a), IntegerMatrix(n_mat)
