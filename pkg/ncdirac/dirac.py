# -*- coding: utf-8 -*-
"""Constant Dirac structures on the n-torus.

A Dirac structure is an n-dimensional maximal isotropic subspace of
``Q^n + Q^n*`` with respect to the pairing
``<(X1, xi1), (X2, xi2)> = (xi1 . X2 + xi2 . X1) / 2``. It is kept as
the reduced row echelon form of an ``n x 2n`` basis matrix ``[A | B]``
whose rows are the transposes of basis vectors, ``A`` the X-block and
``B`` the xi-block.

The graph of a skew matrix ``pi``, ``{(pi xi, xi)}``, has the basis
``[-pi | I]``, the graph of a closed two-form ``b``, ``{(X, b X)}``, has
the basis ``[I | -b]``.

>>> from ncdirac.exact_core import RationalMatrix, Subspace
>>> from ncdirac.dirac import graph_poisson, graph_two_form, characteristic, p_star
>>> gamma = graph_poisson([[0, '1/2'], ['-1/2', 0]])
>>> gamma.basis.to_json()
[[1, 0, 0, 2], [0, 1, -2, 0]]
>>> characteristic(gamma).nullity, gamma.parity
(0, 'even')
>>> characteristic(graph_two_form([[0, 0], [0, 0]])).nullity
2

"""
import collections
from fractions import Fraction
from .exact_core import (RationalMatrix, Subspace, DimensionMismatch,
                         as_rational, kernel, invert, rref, Singular,
                         parse_rational, parse_dimension,
                         primitive_integer_rows)
from .interfaces import ComputationError, JSONSerializable, require_keys


class NotDirac(ComputationError):
    """the row span is not a Dirac structure"""

class NotMaximal(NotDirac):
    """rank of the basis is smaller than n"""

class NotIsotropic(NotDirac):
    """the pairing does not vanish on the span"""

class NotSkew(ComputationError):
    """a matrix expected to be skew-symmetric is not"""

class NotPoisson(ComputationError):
    """the structure has positive nullity, it is not the graph of a
    Poisson matrix"""


def skew_matrix(pi, what='matrix'):
    """return ``pi`` as `RationalMatrix` or raise `NotSkew`"""
    pi = as_rational(pi)
    if not pi.is_skew():
        raise NotSkew('%s %s is not skew-symmetric' % (what, str(pi.to_json())))
    return pi


class CharacteristicData(collections.namedtuple(
    'CharacteristicData', ['characteristic', 'nullity', 'parity'])):
    """characteristic subspace ``C`` of a Dirac structure ``G``, that is
    ``X`` with ``(X, 0)`` in ``G``, its dimension, the nullity, and
    ``'even'`` or ``'odd'``, the nullity mod 2.
    """
    def to_json(self):
        return {'characteristic': self.characteristic.basis.to_json(),
                'nullity': self.nullity,
                'parity': self.parity}


class DiracStructure(JSONSerializable):
    """an immutable constant Dirac structure in canonical form.

    Use `from_basis`, `graph_poisson`, `graph_two_form` or `foliation`
    to construct instances. Two instances compare equal iff they are
    the same subspace.

    >>> from ncdirac.dirac import from_basis
    >>> gamma = from_basis([[3, 1, 0, 0], [0, 0, 1, -3]])
    >>> gamma.n, gamma.nullity, gamma.parity
    (2, 1, 'odd')
    >>> gamma.p_star() == Subspace(2, [[1, -3]])
    True
    >>> gamma == from_basis([[0, 0, -2, 6], [6, 2, 1, -3]])
    True
    >>> gamma.contains([3, 1, 0, 0]), gamma.is_poisson
    (True, False)

    """
    def __init__(self, basis):
        """``basis`` must be a validated `RationalMatrix` in RREF, use
        `from_basis` in any other case."""
        self.basis = basis
        self.n = basis.rows
        self._characteristic = None

    @property
    def A(self):
        """the X-block of `basis`"""
        return self.basis.take(col_indices=range(self.n))
    @property
    def B(self):
        """the xi-block of `basis`"""
        return self.basis.take(col_indices=range(self.n, 2 * self.n))

    def characteristic(self):
        """return `CharacteristicData`, computed once and cached"""
        if self._characteristic is None:
            self._characteristic = characteristic(self)
        return self._characteristic
    @property
    def nullity(self):
        return self.characteristic().nullity
    @property
    def parity(self):
        return self.characteristic().parity
    def p_star(self):
        return p_star(self)

    @property
    def is_poisson(self):
        return self.nullity == 0

    def poisson_matrix(self):
        """return ``pi`` with ``self == graph_poisson(pi)``.

        >>> from ncdirac.dirac import graph_poisson
        >>> pi = [[0, 1, '2/3'], [-1, 0, 5], ['-2/3', -5, 0]]
        >>> graph_poisson(pi).poisson_matrix() == RationalMatrix(pi)
        True

        """
        try:
            b_inv = invert(self.B)
        except Singular:
            raise NotPoisson('structure of nullity %d is not a Poisson graph'
                             % self.nullity)
        return -(b_inv @ self.A)

    def contains(self, v):
        """`True` iff the 2n-vector ``v = (X, xi)`` lies in the structure"""
        v = [parse_rational(x) for x in v]
        if len(v) != 2 * self.n:
            raise DimensionMismatch('vector of length %d is not in Q^%d + Q^%d*'
                                    % (len(v), self.n, self.n))
        return Subspace(2 * self.n, self.basis.tolist() + [v]).dim == self.n

    def __eq__(self, other):
        if not isinstance(other, DiracStructure):
            return NotImplemented
        return equals(self, other)
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    def __hash__(self):
        return hash(self.basis)
    def __repr__(self):
        return 'DiracStructure(%s)' % str(self.basis.to_json())

    def to_json(self):
        return {'n': self.n, 'basis': self.basis.to_json()}

    @classmethod
    def from_json(cls, doc):
        """accept ``{"n": int, "basis": [[...], ...]}``, the basis may be
        any (not necessarily canonical) basis of the structure"""
        require_keys(doc, ('n', 'basis'), 'DiracStructure')
        n = parse_dimension(doc['n'], 'n')
        basis = doc['basis']
        return from_basis(RationalMatrix.from_json(
            basis, (len(basis) if isinstance(basis, list) else 0, 2 * n)), n)


def pairing(v, w):
    """return ``(xi1 . X2 + xi2 . X1) / 2`` for ``v = (X1, xi1)`` and
    ``w = (X2, xi2)``.

    >>> from ncdirac.dirac import pairing
    >>> pairing([1, 0, 0, 0], [0, 0, 1, 0])
    Fraction(1, 2)
    >>> pairing([1, 0, 0, 0], [0, 1, 0, 0])
    Fraction(0, 1)
    >>> pairing([1, 1], [1, 1])
    Fraction(1, 1)

    """
    v = [parse_rational(x) for x in v]
    w = [parse_rational(x) for x in w]
    if len(v) != len(w) or len(v) % 2:
        raise DimensionMismatch('cannot pair vectors of length %d and %d'
                                % (len(v), len(w)))
    n = len(v) // 2
    return sum((v[n + i] * w[i] + w[n + i] * v[i] for i in range(n)),
               Fraction(0)) / 2

def from_basis(rows, n=None):
    """return the canonical `DiracStructure` spanned by ``rows``.

    ``rows`` is a ``k x 2n`` matrix, usually ``k == n``. Raise
    `NotMaximal` if the rank is smaller than n and `NotIsotropic` if the
    span is not isotropic.

    >>> from ncdirac.dirac import from_basis, NotDirac
    >>> from_basis([[0, 0, 1, 0], [0, 0, 0, 1]]).is_poisson
    True
    >>> try:
    ...     from_basis([[1, 0, 1, 0], [0, 1, 0, 1]])
    ... except ValueError as e:
    ...     print(e.tag)
    NotIsotropic
    >>> try:
    ...     from_basis([[0, 0, 1, 0], [0, 0, 2, 0]])
    ... except ValueError as e:
    ...     print(e.tag, isinstance(e, NotDirac))
    NotMaximal True

    """
    rows = as_rational(rows)
    if rows.cols % 2:
        raise DimensionMismatch('a basis of Q^n + Q^n* needs an even number '
                                'of columns, got %d' % rows.cols)
    if n is None:
        n = rows.cols // 2
    elif 2 * n != rows.cols:
        raise DimensionMismatch('basis with %d columns does not fit n=%d'
                                % (rows.cols, n))
    reduced, pivots = rref(rows)
    if len(pivots) != n:
        raise NotMaximal('rank %d of %s is not n=%d'
                         % (len(pivots), str(rows.to_json()), n))
    basis = reduced.take(range(n))
    a = basis.take(col_indices=range(n))
    b = basis.take(col_indices=range(n, 2 * n))
    if not (a @ b.T + b @ a.T).is_zero():
        raise NotIsotropic('span of %s is not isotropic' % str(rows.to_json()))
    return DiracStructure(basis)

def graph_poisson(pi):
    """return the graph ``{(pi xi, xi)}`` with basis ``[-pi | I]``.

    >>> from ncdirac.dirac import graph_poisson
    >>> graph_poisson([[0, 0], [0, 0]]).basis.to_json()
    [[0, 0, 1, 0], [0, 0, 0, 1]]
    >>> try:
    ...     graph_poisson([[0, 1], [0, 0]])
    ... except ValueError as e:
    ...     print(e.tag)
    NotSkew

    """
    pi = skew_matrix(pi, 'Poisson matrix')
    return from_basis((-pi).hstack(RationalMatrix.identity(pi.rows)))

def graph_two_form(b):
    """return the graph ``{(X, b X)}`` with basis ``[I | -b]``.

    >>> from ncdirac.dirac import graph_two_form
    >>> graph_two_form([[0, 1], [-1, 0]]).basis.to_json()
    [[1, 0, 0, -1], [0, 1, 1, 0]]

    """
    b = skew_matrix(b, 'two-form')
    return from_basis(RationalMatrix.identity(b.rows).hstack(-b))

def foliation(f):
    """return ``F + F°``, with ``F°`` the annihilator of the `Subspace` ``F``.

    >>> from ncdirac.dirac import foliation
    >>> gamma = foliation(Subspace.coordinate(2, [1]))
    >>> gamma.basis.to_json(), gamma.nullity
    ([[1, 0, 0, 0], [0, 0, 0, 1]], 1)
    >>> foliation(Subspace.zero(2)) == graph_poisson([[0, 0], [0, 0]])
    True
    >>> foliation(Subspace.full(2)) == graph_two_form([[0, 0], [0, 0]])
    True

    """
    n = f.ambient_dim
    ann = f.annihilator()
    top = f.basis.hstack(RationalMatrix.zeros(f.dim, n))
    bottom = RationalMatrix.zeros(ann.dim, n).hstack(ann.basis)
    return from_basis(top.vstack(bottom), n)

def characteristic(gamma):
    """return the `CharacteristicData` of ``gamma``.

    ``C = {c A : c B = 0}`` for the basis ``[A | B]``.

    >>> from ncdirac.dirac import from_basis, characteristic
    >>> data = characteristic(from_basis([[3, 1, 0, 0], [0, 0, 1, -3]]))
    >>> data.characteristic == Subspace(2, [[3, 1]]), data.nullity, data.parity
    (True, 1, 'odd')

    """
    left_kernel = kernel(gamma.B.T)
    c = Subspace(gamma.n, left_kernel.basis @ gamma.A)
    return CharacteristicData(c, c.dim, 'odd' if c.dim % 2 else 'even')

def p_star(gamma):
    """return the projection of ``gamma`` to the dual space, the span of
    the xi-block, which equals the annihilator of the characteristic
    subspace.

    >>> from ncdirac.dirac import graph_two_form
    >>> p_star(graph_two_form([[0, 0], [0, 0]])).dim
    0

    """
    return Subspace(gamma.n, gamma.B)

def equals(g1, g2):
    """`True` iff both structures are the same subspace"""
    if g1.n != g2.n:
        raise DimensionMismatch('structures on tori of dimension %d and %d'
                                % (g1.n, g2.n))
    return g1.basis == g2.basis

def characteristic_integer_basis(gamma):
    """return the characteristic subspace as primitive integer rows, for
    display"""
    return primitive_integer_rows(gamma.characteristic().characteristic.basis)
