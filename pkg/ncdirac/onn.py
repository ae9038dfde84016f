# -*- coding: utf-8 -*-
"""The group O(n,n) of ``2n x 2n`` matrices ``g`` with ``g.T J g == J``,
``J = [[0, I], [I, 0]]``, its integral generators and their action on
Dirac structures and on Poisson matrices.

Generators, all in O(n,n|Z):

- `sigma`: exchanges the coordinates ``X_i`` and ``xi_i`` for ``i`` in a set
- `rho`: ``diag(A, inv(A.T))`` for ``A`` in GL(n,Z)
- `nu`: ``[[I, N], [0, I]]`` for integer skew ``N``, shifts ``pi`` by ``N``

Products of generators are written as words, like
``"sigma{1};rho[[1,0],[1,1]];sigma{1}"``, where the leftmost term is
applied first, that is the word evaluates to ``M(t_k) ... M(t_1)``.
Grammar, whitespace is ignored::

    word   := term (';' term)* | ''
    term   := 'sigma' '{' [int (',' int)*] '}' | 'rho' matrix
              | 'nu' matrix | 'raw' matrix | 'inv' '(' term ')'
    matrix := '[' row (',' row)* ']'
    row    := '[' rational (',' rational)* ']'

>>> from ncdirac.exact_core import RationalMatrix, Singular
>>> from ncdirac.onn import parse_word, eval_word, nu_elementary, Word
>>> w = parse_word('sigma{1}; rho[[1,0],[1,1]]; sigma{1}')
>>> eval_word(w, 2) == nu_elementary(1, 2, 2)
True
>>> str(w)
'sigma{1};rho[[1,0],[1,1]];sigma{1}'

"""
import collections
from .exact_core import (RationalMatrix, IntegerMatrix, Singular,
                         DimensionMismatch, as_rational, determinant, invert,
                         format_rational, parse_dimension)
from .dirac import from_basis, skew_matrix, NotSkew
from .interfaces import ComputationError, JSONSerializable, require_keys


class NotOrthogonal(ComputationError):
    """``g.T J g != J``"""

class IndexOutOfRange(ComputationError):
    """a coordinate index is not in ``1..n``"""

class NotUnimodular(ComputationError):
    """an integer matrix has determinant other than +1 or -1"""

class SingularDenominator(Singular):
    """``C pi + D`` is not invertible, the fractional linear action is
    not defined"""

class ParseError(ComputationError):
    """malformed word text, ``position`` is the 0-based offset"""
    def __init__(self, msg, position=0):
        super(ParseError, self).__init__('%s at position %d' % (msg, position))
        self.position = position


def J(n):
    """return ``[[0, I], [I, 0]]``, twice the Gram matrix of the pairing"""
    eye = IntegerMatrix.identity(n)
    zero = IntegerMatrix.zeros(n, n)
    return zero.hstack(eye).vstack(eye.hstack(zero))


class GroupElement(JSONSerializable):
    """an element ``g`` of O(n,n), with blocks ``g = [[A, B], [C, D]]``.

    Instances are created by `from_matrix` or the generator functions.
    ``g * h`` is the matrix product, `inverse` uses ``J g.T J``.

    >>> from ncdirac.onn import sigma, rho, from_matrix
    >>> g = sigma({1}, 2) * rho([[1, 0], [1, 1]])
    >>> g.n, g.integral, g.det, g.is_special
    (2, True, Fraction(-1, 1), False)
    >>> g * g.inverse() == from_matrix(RationalMatrix.identity(4))
    True

    """
    def __init__(self, matrix):
        """``matrix`` must be a validated `RationalMatrix`"""
        self.matrix = matrix
        self.n = matrix.rows // 2
        self.integral = matrix.is_integral()

    def _block(self, i, j):
        n = self.n
        return self.matrix.take(range(i * n, (i + 1) * n),
                                range(j * n, (j + 1) * n))
    @property
    def A(self):
        return self._block(0, 0)
    @property
    def B(self):
        return self._block(0, 1)
    @property
    def C(self):
        return self._block(1, 0)
    @property
    def D(self):
        return self._block(1, 1)

    @property
    def det(self):
        return determinant(self.matrix)
    @property
    def is_special(self):
        return is_special(self)

    def __mul__(self, other):
        if self.n != other.n:
            raise DimensionMismatch('cannot multiply elements of O(%d,%d) and '
                                    'O(%d,%d)' % (self.n, self.n, other.n, other.n))
        return GroupElement(self.matrix @ other.matrix)

    def inverse(self):
        j = J(self.n).to_rational()
        return GroupElement(j @ self.matrix.T @ j)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    def __hash__(self):
        return hash(self.matrix)
    def __repr__(self):
        return 'GroupElement(%s)' % str(self.matrix.to_json())

    def to_json(self):
        return {'n': self.n, 'matrix': self.matrix.to_json()}

    @classmethod
    def from_json(cls, doc):
        require_keys(doc, ('n', 'matrix'), 'GroupElement')
        n = parse_dimension(doc['n'], 'n')
        return from_matrix(RationalMatrix.from_json(doc['matrix']), n)


def from_matrix(m, n=None):
    """return a validated `GroupElement` from a ``2n x 2n`` matrix.

    >>> from ncdirac.onn import from_matrix
    >>> from_matrix([[0, 1], [1, 0]]).integral
    True
    >>> g = from_matrix([[2, 0], [0, '1/2']])
    >>> g.integral, g.is_special
    (False, True)
    >>> try:
    ...     from_matrix([[2, 0], [0, 1]])
    ... except ValueError as e:
    ...     print(e.tag)
    NotOrthogonal

    """
    m = as_rational(m)
    if n is None:
        n = m.rows // 2
    if m.shape != (2 * n, 2 * n):
        raise DimensionMismatch('a %dx%d matrix is not in O(%d,%d)'
                                % (m.rows, m.cols, n, n))
    j = as_rational(J(n))
    if m.T @ j @ m != j:
        raise NotOrthogonal('%s does not preserve the pairing' % str(m.to_json()))
    return GroupElement(m)

def _check_index(i, n):
    if not 1 <= i <= n:
        raise IndexOutOfRange('index %d is not in 1..%d' % (i, n))

def sigma(i_set, n):
    """return the involution exchanging ``X_i`` and ``xi_i`` for each
    1-based ``i`` in ``i_set``.

    >>> from ncdirac.onn import sigma
    >>> sigma({1}, 1).matrix.to_json()
    [[0, 1], [1, 0]]
    >>> sigma((), 3) == sigma({1, 2}, 3) * sigma({1, 2}, 3)
    True
    >>> try:
    ...     sigma({9}, 2)
    ... except ValueError as e:
    ...     print(e)
    index 9 is not in 1..2

    """
    for i in i_set:
        _check_index(i, n)
    perm = list(range(2 * n))
    for i in i_set:
        perm[i - 1], perm[n + i - 1] = n + i - 1, i - 1
    return GroupElement(RationalMatrix._from_rows(
        [[RationalMatrix._coerce(int(perm[r] == c)) for c in range(2 * n)]
         for r in range(2 * n)], 2 * n))

def rho(a):
    """return ``diag(a, inv(a.T))`` for ``a`` in GL(n,Z).

    >>> from ncdirac.onn import rho
    >>> g = rho([[1, 0], [1, 1]])
    >>> g.A.to_json(), g.D.to_json(), g.is_special
    ([[1, 0], [1, 1]], [[1, -1], [0, 1]], True)
    >>> try:
    ...     rho([[2, 0], [0, 1]])
    ... except ValueError as e:
    ...     print(e.tag)
    NotUnimodular

    """
    a = as_rational(a)
    if not a.is_square():
        raise DimensionMismatch('rho needs a square matrix, got %dx%d' % a.shape)
    if not a.is_integral() or abs(determinant(a)) != 1:
        raise NotUnimodular('%s is not in GL(%d,Z)' % (str(a.to_json()), a.rows))
    n = a.rows
    zero = RationalMatrix.zeros(n, n)
    return GroupElement(a.hstack(zero).vstack(zero.hstack(invert(a.T))))

def nu(n_mat):
    """return ``[[I, N], [0, I]]`` for the integer skew matrix ``n_mat``.

    >>> from ncdirac.onn import nu
    >>> nu([[0, 0], [0, 0]]) == sigma((), 2)
    True
    >>> try:
    ...     nu([[0, 1], [1, 0]])
    ... except ValueError as e:
    ...     print(e.tag)
    NotSkew

    """
    n_mat = skew_matrix(n_mat, 'shift')
    if not n_mat.is_integral():
        raise NotSkew('shift %s is not an integer skew matrix'
                      % str(n_mat.to_json()))
    n = n_mat.rows
    eye = RationalMatrix.identity(n)
    return GroupElement(eye.hstack(n_mat).vstack(
        RationalMatrix.zeros(n, n).hstack(eye)))

def elementary_skew(i, j, n):
    """return the ``n x n`` integer matrix with ``+1`` at ``(j, i)`` and
    ``-1`` at ``(i, j)``, 1-based"""
    _check_index(i, n)
    _check_index(j, n)
    if i >= j:
        raise IndexOutOfRange('need i < j, got i=%d, j=%d' % (i, j))
    rows = [[0] * n for _ in range(n)]
    rows[j - 1][i - 1] = 1
    rows[i - 1][j - 1] = -1
    return IntegerMatrix(rows)

def nu_elementary(i, j, n):
    """return `nu` of `elementary_skew`, which maps ``f_i`` to ``e_j``
    and fixes all ``e_k``.

    >>> from ncdirac.onn import nu_elementary
    >>> nu_elementary(1, 2, 2).B.to_json()
    [[0, -1], [1, 0]]

    """
    return nu(elementary_skew(i, j, n))

def transvection(i, j, n):
    """return the GL(n,Z) matrix mapping ``e_i`` to ``e_i + e_j`` and
    fixing the other unit vectors.

    >>> from ncdirac.onn import transvection
    >>> transvection(1, 2, 2).to_json()
    [[1, 0], [1, 1]]

    """
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise IndexOutOfRange('transvection needs i != j, got %d twice' % i)
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    rows[j - 1][i - 1] = 1
    return IntegerMatrix(rows)

def act(g, gamma):
    """return ``g(gamma)``, the structure with basis ``gamma.basis @ g.T``.

    >>> from ncdirac.onn import act, sigma
    >>> from ncdirac.dirac import graph_poisson
    >>> act(sigma({1, 2}, 2), graph_poisson([[0, '1/2'], ['-1/2', 0]])
    ...    ) == graph_poisson([[0, -2], [2, 0]])
    True

    """
    if g.n != gamma.n:
        raise DimensionMismatch('element of O(%d,%d) cannot act on a structure '
                                'in dimension %d' % (g.n, g.n, gamma.n))
    return from_basis(gamma.basis @ g.matrix.T, gamma.n)

def frac_linear(g, pi):
    """return ``(A pi + B) inv(C pi + D)``.

    Raise `SingularDenominator` if ``C pi + D`` is singular.

    >>> from ncdirac.onn import frac_linear, rho, nu
    >>> pi = RationalMatrix([[0, '1/3'], ['-1/3', 0]])
    >>> frac_linear(nu([[0, 1], [-1, 0]]), pi).to_json()
    [[0, '4/3'], ['-4/3', 0]]
    >>> frac_linear(rho([[2, 1], [1, 1]]), pi) == pi
    True
    >>> try:
    ...     frac_linear(sigma({1, 2}, 2), [[0, 0], [0, 0]])
    ... except ValueError as e:
    ...     print(e.tag, isinstance(e, Singular))
    SingularDenominator True

    """
    pi = skew_matrix(pi, 'Poisson matrix')
    if pi.rows != g.n:
        raise DimensionMismatch('%dx%d Poisson matrix for an element of O(%d,%d)'
                                % (pi.rows, pi.cols, g.n, g.n))
    denominator = g.C @ pi + g.D
    res = (g.A @ pi + g.B) @ invert(denominator, SingularDenominator)
    assert res.is_skew()
    return res

def is_special(g):
    """`True` iff ``det g == 1``"""
    return g.det == 1


Term = collections.namedtuple('Term', ['kind', 'arg'])
"""a word term, ``kind`` in ``('sigma', 'rho', 'nu', 'raw', 'inv')``,
``arg`` a sorted `tuple` of 1-based indices, a `RationalMatrix` or a
`Term`"""

def format_matrix(m):
    return '[' + ','.join('[' + ','.join(str(format_rational(x)) for x in row)
                          + ']' for row in m.tolist()) + ']'

def format_term(term):
    if term.kind == 'sigma':
        return 'sigma{%s}' % ','.join(str(i) for i in term.arg)
    if term.kind == 'inv':
        return 'inv(%s)' % format_term(term.arg)
    return term.kind + format_matrix(term.arg)

def invert_term(term):
    if term.kind == 'sigma':
        return term
    if term.kind == 'inv':
        return term.arg
    return Term('inv', term)

def term_element(term, n):
    """return the `GroupElement` of a single term in O(n,n)"""
    if term.kind == 'sigma':
        return sigma(term.arg, n)
    if term.kind == 'inv':
        return term_element(term.arg, n).inverse()
    size = 2 * n if term.kind == 'raw' else n
    if term.arg.rows != size:
        raise DimensionMismatch('%s term of size %d in a word for n=%d'
                                % (term.kind, term.arg.rows, n))
    if term.kind == 'rho':
        return rho(term.arg)
    if term.kind == 'nu':
        return nu(term.arg)
    return from_matrix(term.arg, n)


class Word(list):
    """a list of `Term`, read left to right, the leftmost term is
    applied first.

    >>> from ncdirac.onn import parse_word
    >>> w = parse_word('rho[[1,1],[0,1]]; sigma{2}')
    >>> str(w.inverse())
    'sigma{2};inv(rho[[1,1],[0,1]])'
    >>> eval_word(w + w.inverse(), 2) == eval_word(Word(), 2)
    True
    >>> str(Word()), len(parse_word('  '))
    ('', 0)

    """
    def __str__(self):
        return ';'.join(format_term(t) for t in self)
    def __repr__(self):
        return 'Word(%s)' % repr(str(self))
    def __add__(self, other):
        return Word(list.__add__(self, list(other)))
    def inverse(self):
        return Word(invert_term(t) for t in reversed(self))

class WordParser(object):
    """recursive descent parser for the word grammar, see `parse_word`"""
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.length = len(text)

    def skip_whitespace(self):
        while self.pos < self.length and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_whitespace()
        return self.pos >= self.length

    def match(self, terminal):
        self.skip_whitespace()
        if self.text.startswith(terminal, self.pos):
            self.pos += len(terminal)
            return True
        return False

    def expect(self, terminal):
        if not self.match(terminal):
            raise self.error('expected "%s"' % terminal)

    def error(self, msg):
        self.skip_whitespace()
        found = self.text[self.pos:self.pos + 8] or 'end of input'
        return ParseError('%s, found "%s"' % (msg, found), self.pos)

    def parse(self):
        self.pos = 0
        word = Word()
        if self.at_end():
            return word
        word.append(self.parse_term())
        while self.match(';'):
            word.append(self.parse_term())
        if not self.at_end():
            raise self.error('expected ";" or end of word')
        return word

    def parse_term(self):
        if self.match('sigma'):
            return Term('sigma', self.parse_index_set())
        for kind in ('rho', 'nu', 'raw'):
            if self.match(kind):
                return Term(kind, self.parse_matrix())
        if self.match('inv'):
            self.expect('(')
            term = self.parse_term()
            self.expect(')')
            return Term('inv', term)
        raise self.error('expected one of sigma, rho, nu, raw, inv')

    def parse_index_set(self):
        self.expect('{')
        indices = set()
        if not self.match('}'):
            indices.add(self.parse_int())
            while self.match(','):
                indices.add(self.parse_int())
            self.expect('}')
        return tuple(sorted(indices))

    def parse_int(self):
        self.skip_whitespace()
        start = self.pos
        if self.pos < self.length and self.text[self.pos] in '+-':
            self.pos += 1
        while self.pos < self.length and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits.lstrip('+-'):
            self.pos = start
            raise self.error('expected an integer')
        return int(digits)

    def parse_rational(self):
        num = self.parse_int()
        if self.match('/'):
            den_pos = self.pos
            den = self.parse_int()
            if den == 0:
                raise ParseError('zero denominator', den_pos)
            return RationalMatrix._coerce('%d/%d' % (num, den))
        return RationalMatrix._coerce(num)

    def parse_row(self):
        self.expect('[')
        row = [self.parse_rational()]
        while self.match(','):
            row.append(self.parse_rational())
        self.expect(']')
        return row

    def parse_matrix(self):
        self.expect('[')
        start = self.pos
        rows = [self.parse_row()]
        while self.match(','):
            rows.append(self.parse_row())
        self.expect(']')
        if any(len(row) != len(rows) for row in rows):
            raise ParseError('matrix is not square', start)
        return RationalMatrix(rows)


def parse_word(text):
    """return the `Word` of ``text``, raise `ParseError` if malformed.

    >>> from ncdirac.onn import parse_word
    >>> parse_word('inv( nu[[0,1],[-1,0]] );sigma{2,1}')
    Word('inv(nu[[0,1],[-1,0]]);sigma{1,2}')
    >>> try:
    ...     parse_word('sigma{1};;rho[[1]]')
    ... except ValueError as e:
    ...     print(e.tag, e.position)
    ParseError 9

    """
    return WordParser(text).parse()

def eval_word(w, n):
    """return the product ``M(t_k) ... M(t_1)`` in O(n,n), accepts also
    word text.

    >>> from ncdirac.onn import eval_word
    >>> eval_word('sigma{1};sigma{1}', 2) == eval_word('', 2)
    True
    >>> eval_word('nu[[0,-1],[1,0]]', 2) == eval_word(
    ...     'sigma{1};rho[[1,0],[1,1]];sigma{1}', 2)
    True

    """
    if not isinstance(w, Word):
        w = parse_word(w)
    g = GroupElement(RationalMatrix.identity(2 * n))
    for term in w:
        g = term_element(term, n) * g
    return g
