# -*- coding: utf-8 -*-
"""Exact rational and integer matrix kernel used by every other module.

Matrices are immutable `numpy` arrays of ``dtype=object`` holding
`fractions.Fraction` (`RationalMatrix`) or `int` (`IntegerMatrix`)
entries, hence all arithmetic is exact and of arbitrary precision.
`Subspace` keeps the unique reduced row echelon form (RREF) of a
spanning set, which makes subspace equality and hashing decidable.
Elimination, inversion and determinants are delegated to `sympy`
``DomainMatrix`` over ``QQ``, the Hermite form with its unimodular
transform is computed here.

Main functions:

- `rref`: reduced row echelon form and pivot columns
- `kernel`: solution space of ``m x = 0`` as `Subspace`
- `invert`, `determinant`, `rank`
- `row_hnf`: row-style Hermite normal form ``h == u a`` with unimodular ``u``
- `complete_to_unimodular` and `saturate`: lattice basis completion

>>> from ncdirac.exact_core import RationalMatrix, Subspace, rref, kernel, determinant
>>> reduced, pivots = rref(RationalMatrix([[2, 4], [1, 2]]))
>>> reduced.to_json(), pivots
([[1, 2], [0, 0]], (0,))
>>> kernel(RationalMatrix([[1, 2]])).basis.to_json()
[[1, '-1/2']]

Rationals are written as JSON integers when integral and as ``"p/q"``
strings otherwise.
"""
from fractions import Fraction
from math import gcd as _gcd
import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from .interfaces import ComputationError, InputError, JSONSerializable
from .utilities.utils import is_integer, is_str


class DimensionMismatch(ComputationError):
    """shapes of the arguments do not fit together"""

class Singular(ComputationError):
    """a square matrix is not invertible"""

class NotSaturated(ComputationError):
    """a row lattice is not a direct summand of the integer lattice"""


def parse_rational(x):
    """return ``x`` as `Fraction`, accepting `int`, `Fraction` and
    strings like ``"3"``, ``"-2/6"``.

    Floats are refused, as they are not exact.

    >>> from ncdirac.exact_core import parse_rational
    >>> parse_rational('-2/6'), parse_rational(4), parse_rational(' 1/2 ')
    (Fraction(-1, 3), Fraction(4, 1), Fraction(1, 2))
    >>> try:
    ...     parse_rational(0.5)
    ... except ValueError as e:
    ...     print(e.tag)
    InputError

    """
    if type(x) is Fraction:
        return x
    if is_integer(x):
        return Fraction(int(x))
    if isinstance(x, Fraction):
        return Fraction(x.numerator, x.denominator)
    if is_str(x):
        if isinstance(x, bytes):
            x = x.decode()
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError('"%s" is not a rational literal' % str(x))
    raise InputError('%s of type %s is not an exact rational'
                     % (repr(x), type(x).__name__))

def parse_integer(x):
    """return ``x`` as `int` if it is an integral rational"""
    q = parse_rational(x)
    if q.denominator != 1:
        raise InputError('%s is not an integer' % format_rational(q))
    return q.numerator

def parse_dimension(x, what='dimension'):
    """return ``x`` as nonnegative `int`, raise `InputError` otherwise.

    >>> from ncdirac.exact_core import parse_dimension
    >>> parse_dimension('3')
    3
    >>> try:
    ...     parse_dimension(-1, 'n')
    ... except ValueError as e:
    ...     print(e)
    n must be nonnegative, got -1

    """
    d = parse_integer(x)
    if d < 0:
        raise InputError('%s must be nonnegative, got %d' % (what, d))
    return d

def format_rational(q):
    """return `int` for integral ``q``, else the string ``"p/q"``.

    >>> from fractions import Fraction
    >>> from ncdirac.exact_core import format_rational
    >>> format_rational(Fraction(6, 3)), format_rational(Fraction(-1, 2))
    (2, '-1/2')

    """
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return '%d/%d' % (q.numerator, q.denominator)


class _ExactMatrix(JSONSerializable):
    """base class of immutable exact matrices.

    Entries are kept in ``self._a``, a read-only `numpy` object array.
    Derived classes define `_coerce` for their entry type.
    """
    _coerce = staticmethod(parse_rational)

    def __init__(self, entries, shape=None):
        """``entries`` is a nested sequence (row-major) or an exact
        matrix; ``shape`` is only needed for matrices without rows."""
        if isinstance(entries, _ExactMatrix):
            entries = entries._a
        try:
            rows = [list(row) for row in entries]
        except TypeError:
            raise InputError('a matrix must be a list of rows, got %s'
                             % repr(entries))
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if min(shape) < 0:
            raise InputError('negative matrix shape %s' % str(shape))
        if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
            raise DimensionMismatch('rows %s do not fit the shape %s'
                                    % (str([len(row) for row in rows]), str(shape)))
        a = np.empty(shape, dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                a[i, j] = self._coerce(x)
        self._set_array(a)

    def _set_array(self, a):
        a.flags.writeable = False
        self._a = a
        self._hash = None

    @classmethod
    def _from_array(cls, a):
        """wrap ``a`` without checking or copying, entries must fit"""
        obj = cls.__new__(cls)
        obj._set_array(a)
        return obj

    @classmethod
    def _from_rows(cls, rows, cols):
        """wrap a list of lists of already coerced entries"""
        a = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            a[i, :] = row
        return cls._from_array(a)

    @classmethod
    def zeros(cls, rows, cols):
        a = np.empty((rows, cols), dtype=object)
        a.fill(cls._coerce(0))
        return cls._from_array(a)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)._a.copy()
        for i in range(n):
            m[i, i] = cls._coerce(1)
        return cls._from_array(m)

    @property
    def shape(self):
        return self._a.shape
    @property
    def rows(self):
        return self._a.shape[0]
    @property
    def cols(self):
        return self._a.shape[1]
    @property
    def T(self):
        return type(self)._from_array(self._a.T.copy())
    def asarray(self):
        """return a writable copy of the underlying object array"""
        return self._a.copy()
    def tolist(self):
        return [list(row) for row in self._a]
    def row(self, i):
        return list(self._a[i])

    def __getitem__(self, idx):
        val = self._a[idx]
        if isinstance(val, np.ndarray):
            if val.ndim == 2:
                return type(self)._from_array(val.copy())
            return list(val)
        return val

    def take(self, row_indices=None, col_indices=None):
        """return the submatrix of the given (0-based) rows and columns"""
        a = self._a
        if row_indices is not None:
            a = a[list(row_indices), :] if len(row_indices) else a[:0, :]
        if col_indices is not None:
            a = a[:, list(col_indices)] if len(col_indices) else a[:, :0]
        return type(self)._from_array(np.array(a, dtype=object).reshape(
            (a.shape[0], a.shape[1])))

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch('cannot stack %s and %s side by side'
                                    % (str(self.shape), str(other.shape)))
        return self._result_type(other)._from_array(
            np.hstack((self._a, other._a)))

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch('cannot stack %s on top of %s'
                                    % (str(self.shape), str(other.shape)))
        return self._result_type(other)._from_array(
            np.vstack((self._a, other._a)))

    def _result_type(self, other):
        if isinstance(self, IntegerMatrix) and isinstance(other, IntegerMatrix):
            return IntegerMatrix
        return RationalMatrix

    def _wrap(self, a, cls):
        """coerce the entries of a computed array into ``cls``"""
        out = np.empty(a.shape, dtype=object)
        flat_in, flat_out = a.reshape(-1), out.reshape(-1)
        for k in range(flat_in.size):
            flat_out[k] = cls._coerce(flat_in[k])
        return cls._from_array(out)

    def __matmul__(self, other):
        if not isinstance(other, _ExactMatrix):
            other = RationalMatrix(other)
        if self.cols != other.rows:
            raise DimensionMismatch('cannot multiply %s with %s'
                                    % (str(self.shape), str(other.shape)))
        cls = self._result_type(other)
        if self.cols == 0:
            return cls.zeros(self.rows, other.cols)
        return self._wrap(np.dot(self._a, other._a), cls)
    dot = __matmul__

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch('cannot add %s and %s'
                                    % (str(self.shape), str(other.shape)))
        return self._wrap(self._a + other._a, self._result_type(other))
    def __sub__(self, other):
        return self + (-other)
    def __neg__(self):
        return self._wrap(-self._a, type(self))
    def scale(self, factor):
        """return ``factor * self`` as `RationalMatrix`"""
        factor = parse_rational(factor)
        return self._wrap(self._a * factor, RationalMatrix)

    def __eq__(self, other):
        if not isinstance(other, _ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self._a.reshape(-1))))
        return self._hash

    def is_square(self):
        return self.rows == self.cols
    def is_zero(self):
        return all(x == 0 for x in self._a.reshape(-1))
    def is_integral(self):
        return all(Fraction(x).denominator == 1 for x in self._a.reshape(-1))
    def is_skew(self):
        return self.is_square() and bool(np.all(self._a == -self._a.T))

    def to_json(self):
        """row-major list of rows, with rationals as in `format_rational`"""
        return [[format_rational(x) for x in row] for row in self._a]

    @classmethod
    def from_json(cls, doc, shape=None):
        if not isinstance(doc, list):
            raise InputError('a matrix must be a JSON array of arrays')
        return cls(doc, shape)

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, str(self.to_json()))


class RationalMatrix(_ExactMatrix):
    """immutable matrix of `Fraction` entries in lowest terms.

    >>> from ncdirac.exact_core import RationalMatrix
    >>> m = RationalMatrix([[0, '1/2'], ['-1/2', 0]])
    >>> m.is_skew(), m.shape, m[0, 1]
    (True, (2, 2), Fraction(1, 2))
    >>> (m @ m).to_json()
    [['-1/4', 0], [0, '-1/4']]
    >>> m == RationalMatrix([[0, '2/4'], ['-3/6', 0]])
    True
    >>> RationalMatrix.zeros(2, 0).shape
    (2, 0)

    """
    _coerce = staticmethod(parse_rational)

    def to_integer(self):
        """return `IntegerMatrix` or raise `InputError` if not integral"""
        return IntegerMatrix(self)


class IntegerMatrix(_ExactMatrix):
    """immutable matrix of arbitrary-precision `int` entries.

    >>> from ncdirac.exact_core import IntegerMatrix
    >>> a = IntegerMatrix([[1, 0], [1, 1]])
    >>> (a @ a).to_json()
    [[1, 0], [2, 1]]
    >>> try:
    ...     IntegerMatrix([['1/2']])
    ... except ValueError as e:
    ...     print(e.tag)
    InputError

    """
    _coerce = staticmethod(parse_integer)

    def to_rational(self):
        return RationalMatrix._from_array(
            np.vectorize(Fraction, otypes=[object])(self._a)
            if self._a.size else np.empty(self.shape, dtype=object))


def as_rational(m):
    """return ``m`` as `RationalMatrix`, accepting nested lists"""
    if isinstance(m, RationalMatrix):
        return m
    if isinstance(m, IntegerMatrix):
        return m.to_rational()
    return RationalMatrix(m)

def as_integer(m):
    """return ``m`` as `IntegerMatrix`, accepting nested lists"""
    if isinstance(m, IntegerMatrix):
        return m
    return IntegerMatrix(m)


def to_domain_matrix(m):
    """return ``m`` as `sympy` ``DomainMatrix`` over the field ``QQ``"""
    m = as_rational(m)
    return DomainMatrix([[QQ(x.numerator, x.denominator) for x in row]
                         for row in m.tolist()], m.shape, QQ)

def from_domain_matrix(dm):
    """return the ``QQ`` or ``ZZ`` matrix ``dm`` as `RationalMatrix`"""
    domain = dm.domain
    rows = [[Fraction(int(domain.numer(x)), int(domain.denom(x)))
             for x in row] for row in dm.to_list()]
    return RationalMatrix._from_rows(rows, dm.shape[1])

def _from_domain_element(x):
    return Fraction(int(QQ.numer(x)), int(QQ.denom(x)))

def rref(m):
    """return ``(reduced, pivot_columns)``, the unique reduced row echelon
    form of ``m`` (same shape, zero rows last) and its 0-based pivot
    columns as strictly increasing `tuple`.

    >>> from ncdirac.exact_core import rref, RationalMatrix
    >>> rref(RationalMatrix([[0, 1], [1, 0]]))
    (RationalMatrix([[1, 0], [0, 1]]), (0, 1))
    >>> m = RationalMatrix([[3, 6, 1], [1, 2, 0], [4, 8, 1]])
    >>> r, p = rref(m)
    >>> r.to_json(), p
    ([[1, 2, 0], [0, 0, 1], [0, 0, 0]], (0, 2))
    >>> rref(r)[0] == r
    True

    """
    m = as_rational(m)
    if m.rows == 0 or m.cols == 0:
        return m, ()
    reduced, pivots = to_domain_matrix(m).rref()
    return from_domain_matrix(reduced), tuple(int(p) for p in pivots)

def rank(m):
    """return the rank of ``m``"""
    return len(rref(m)[1])

def kernel(m):
    """return the solution space of ``m x = 0`` as `Subspace` of
    dimension ``m.cols - rank(m)``.

    >>> from ncdirac.exact_core import kernel, RationalMatrix
    >>> kernel(RationalMatrix.identity(2)).dim
    0
    >>> kernel(RationalMatrix.zeros(2, 2)) == Subspace.full(2)
    True
    >>> kernel(RationalMatrix([[1, 2]])) == Subspace(2, [[-2, 1]])
    True

    """
    m = as_rational(m)
    if m.rows == 0 or m.cols == 0:
        return Subspace.full(m.cols)
    if rank(m) == m.cols:
        return Subspace.zero(m.cols)
    return Subspace(m.cols, from_domain_matrix(to_domain_matrix(m).nullspace()))

def invert(m, error=Singular):
    """return the exact inverse of the square matrix ``m``.

    Raise ``error``, by default `Singular`, if ``m`` is not invertible.

    >>> from ncdirac.exact_core import invert, RationalMatrix
    >>> invert(RationalMatrix([[0, '1/2'], ['-1/2', 0]])).to_json()
    [[0, -2], [2, 0]]
    >>> try:
    ...     invert(RationalMatrix([[1, 1], [1, 1]]))
    ... except ValueError as e:
    ...     print(e.tag)
    Singular

    """
    m = as_rational(m)
    if not m.is_square():
        raise DimensionMismatch('cannot invert a %dx%d matrix' % m.shape)
    if m.rows == 0:
        return m
    try:
        return from_domain_matrix(to_domain_matrix(m).inv())
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        raise error('matrix %s is singular' % str(m.to_json()))

def determinant(m):
    """return the exact determinant of the square matrix ``m``.

    >>> from ncdirac.exact_core import determinant, RationalMatrix
    >>> determinant(RationalMatrix([[0, 1], [1, 0]]))
    Fraction(-1, 1)
    >>> determinant(RationalMatrix.zeros(0, 0))
    Fraction(1, 1)

    """
    m = as_rational(m)
    if not m.is_square():
        raise DimensionMismatch('no determinant of a %dx%d matrix' % m.shape)
    if m.rows == 0:
        return Fraction(1)
    return _from_domain_element(to_domain_matrix(m).det())


def row_hnf(a):
    """return ``(h, u)`` with ``h == u @ a`` in row-style Hermite normal
    form and ``u`` unimodular.

    ``h`` is in echelon form with positive pivots, leftmost pivots first,
    and entries above a pivot are in ``[0, pivot)``. Ties in the choice
    of the pivot row go to the smallest row index.

    >>> from ncdirac.exact_core import row_hnf, IntegerMatrix
    >>> h, u = row_hnf(IntegerMatrix([[0, 1], [1, 0]]))
    >>> h.to_json(), u.to_json()
    ([[1, 0], [0, 1]], [[0, 1], [1, 0]])
    >>> row_hnf(IntegerMatrix([[2, 4]]))
    (IntegerMatrix([[2, 4]]), IntegerMatrix([[1]]))
    >>> a = IntegerMatrix([[4, 6, 1], [2, 3, 5], [6, 9, 6]])
    >>> h, u = row_hnf(a)
    >>> h.to_json()
    [[2, 3, 5], [0, 0, 9], [0, 0, 0]]
    >>> assert u @ a == h and abs(determinant(u)) == 1

    """
    a = as_integer(a)
    m, n = a.shape
    h = [[int(x) for x in row] for row in a.tolist()]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def subtract(i, q, r):  # row_i -= q * row_r
        h[i] = [x - q * y for x, y in zip(h[i], h[r])]
        u[i] = [x - q * y for x, y in zip(u[i], u[r])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if h[i][c] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: (abs(h[i][c]), i))
            if p != r:
                swap(p, r)
            for i in range(r + 1, m):
                if h[i][c] != 0:
                    subtract(i, h[i][c] // h[r][c], r)
            if all(h[i][c] == 0 for i in range(r + 1, m)):
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                subtract(i, q, r)
        r += 1
    return IntegerMatrix._from_rows(h, n), IntegerMatrix._from_rows(u, m)

def _integer_inverse(u):
    """inverse of a unimodular `IntegerMatrix`"""
    return invert(u).to_integer()

def complete_to_unimodular(primitive_rows):
    """return ``a`` in GL(n, Z) whose first k rows are ``primitive_rows``.

    Raise `NotSaturated` if the rows are dependent or their lattice is
    not a direct summand of Z^n.

    >>> from ncdirac.exact_core import complete_to_unimodular as complete
    >>> complete(IntegerMatrix([[1, 1]])).to_json()
    [[1, 1], [0, 1]]
    >>> complete(IntegerMatrix([[1, 0]])) == IntegerMatrix.identity(2)
    True
    >>> try:
    ...     complete(IntegerMatrix([[2, 0]]))
    ... except ValueError as e:
    ...     print(e.tag)
    NotSaturated

    """
    rows = as_integer(primitive_rows)
    k, n = rows.shape
    if k > n:
        raise NotSaturated('%d rows cannot be independent in Z^%d' % (k, n))
    if k == 0:
        return IntegerMatrix.identity(n)
    h, u = row_hnf(rows.T)
    # u rows.T == h == [1; 0] iff the lattice is saturated of rank k
    if h.take(range(k)) != IntegerMatrix.identity(k):
        raise NotSaturated('rows %s do not span a saturated sublattice'
                           % str(rows.to_json()))
    return _integer_inverse(u.T)

def primitive_integer_rows(m):
    """return the rows of a rational matrix scaled to primitive integer
    vectors (denominators cleared, gcd removed, sign kept), zero rows
    dropped.

    >>> from ncdirac.exact_core import primitive_integer_rows
    >>> primitive_integer_rows([['1/2', '1/3'], [0, 0], [4, -6]]).to_json()
    [[3, 2], [2, -3]]

    """
    m = as_rational(m)
    out = []
    for row in m.tolist():
        if all(x == 0 for x in row):
            continue
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in row]
        g = 0
        for x in ints:
            g = _gcd(g, x)
        out.append([x // g for x in ints])
    return IntegerMatrix._from_rows(out, m.cols)
def saturate(rows):
    """return an integer basis of the lattice ``span_Q(rows) ∩ Z^n``.

    The returned rows are the leading rows of a unimodular matrix, hence
    `complete_to_unimodular` accepts them.

    >>> from ncdirac.exact_core import saturate
    >>> saturate([[2, 0], [0, 4]]) == IntegerMatrix.identity(2)
    True
    >>> saturate([['1/2', '1/3']]).to_json()
    [[3, 2]]

    """
    reduced, pivots = rref(rows)
    prim = primitive_integer_rows(reduced.take(range(len(pivots))))
    k, n = prim.shape
    if k == 0:
        return IntegerMatrix.zeros(0, n)
    h, u = row_hnf(prim.T)
    return _integer_inverse(u.T).take(range(k))


class Subspace(JSONSerializable):
    """a rational subspace of Q^n, kept as the nonzero rows of the RREF
    of any spanning set.

    >>> from ncdirac.exact_core import Subspace
    >>> w = Subspace(3, [[2, 4, 0], [1, 2, 0]])
    >>> w.dim, w.basis.to_json(), w.pivots
    (1, [[1, 2, 0]], (0,))
    >>> w.annihilator() == Subspace(3, [[-2, 1, 0], [0, 0, 1]])
    True
    >>> w.is_complementary(Subspace.coordinate(3, [2, 3]))
    True
    >>> w.contains([3, 6, 0]), w.contains([1, 0, 0])
    (True, False)

    """
    def __init__(self, ambient_dim, vectors=None):
        """``vectors`` span the subspace, they may be dependent"""
        if vectors is None:
            vectors = RationalMatrix.zeros(0, ambient_dim)
        vectors = as_rational(vectors) if (isinstance(vectors, _ExactMatrix)
                                           or len(vectors)) else \
            RationalMatrix.zeros(0, ambient_dim)
        if vectors.cols != ambient_dim:
            raise DimensionMismatch('vectors of length %d do not live in Q^%d'
                                    % (vectors.cols, ambient_dim))
        reduced, pivots = rref(vectors)
        self.ambient_dim = ambient_dim
        self.pivots = pivots
        """0-based pivot columns of `basis`"""
        self.basis = reduced.take(range(len(pivots)))
        """canonical RREF basis, one row per dimension"""

    @staticmethod
    def zero(n):
        return Subspace(n)
    @staticmethod
    def full(n):
        return Subspace(n, RationalMatrix.identity(n))
    @staticmethod
    def coordinate(n, indices):
        """return the span of the unit vectors with 1-based ``indices``"""
        return Subspace(n, [[int(j + 1 == i) for j in range(n)]
                            for i in sorted(indices)])

    @property
    def dim(self):
        return self.basis.rows

    def contains(self, v):
        v = [parse_rational(x) for x in v]
        if len(v) != self.ambient_dim:
            raise DimensionMismatch('vector of length %d is not in Q^%d'
                                    % (len(v), self.ambient_dim))
        return Subspace(self.ambient_dim, self.basis.tolist() + [v]).dim == self.dim

    def annihilator(self):
        """return the annihilator in the dual space, in dual coordinates"""
        return kernel(self.basis)

    def sum(self, other):
        return Subspace(self.ambient_dim, self.basis.vstack(other.basis))

    def intersection_dim(self, other):
        return self.dim + other.dim - self.sum(other).dim

    def is_complementary(self, other):
        """`True` iff the direct sum of both is the ambient space"""
        return (self.dim + other.dim == self.ambient_dim and
                self.sum(other).dim == self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    def __hash__(self):
        return hash((self.ambient_dim, self.basis))
    def __repr__(self):
        return 'Subspace(%d, %s)' % (self.ambient_dim, str(self.basis.to_json()))

    def to_json(self):
        return {'ambient_dim': self.ambient_dim, 'basis': self.basis.to_json()}

    @classmethod
    def from_json(cls, doc):
        from .interfaces import require_keys
        require_keys(doc, ('ambient_dim', 'basis'), 'Subspace')
        n = parse_dimension(doc['ambient_dim'], 'ambient_dim')
        return cls(n, RationalMatrix.from_json(doc['basis'],
                                              (len(doc['basis']), n)))
