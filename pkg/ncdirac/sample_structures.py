# -*- coding: utf-8 -*-
"""versatile container for sample objects: skew matrices, generator
words, Dirac structures and Fourier polynomials, deterministic given a
seed.

For the time being this is probably best used like::

    from ncdirac.sample_structures import ss

Methods with a ``rs`` argument take a `numpy.random.RandomState` or an
integer seed.

>>> from ncdirac.sample_structures import ss
>>> gamma = ss.random_structure(3, 1)
>>> gamma == ss.random_structure(3, 1), gamma.n
(True, 3)
>>> ss.kronecker(3).nullity, ss.theta_graph('1/2').is_poisson
(1, True)
>>> [ss.random_foliation(4, k, dim=k).nullity for k in range(5)]
[0, 1, 2, 3, 4]

"""
from fractions import Fraction
import numpy as np
from .exact_core import RationalMatrix, IntegerMatrix, Subspace
from .dirac import from_basis, graph_poisson, foliation
from .onn import Term, Word, eval_word, act, elementary_skew, transvection
from .qtorus import FourierPolynomial, PoissonMatrix


def _random_state(rs):
    if isinstance(rs, np.random.RandomState):
        return rs
    return np.random.RandomState(rs)


class SampleStructures(object):
    """collection of sample objects, see also `ss`"""
    def random_skew(self, n, rs=None, max_num=9, max_den=9):
        """return a random skew `RationalMatrix` with entries
        ``p/q``, ``|p| <= max_num``, ``1 <= q <= max_den``"""
        rs = _random_state(rs)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                x = Fraction(int(rs.randint(-max_num, max_num + 1)),
                             int(rs.randint(1, max_den + 1)))
                rows[i][j], rows[j][i] = x, -x
        return RationalMatrix(rows)

    def random_integer_skew(self, n, rs=None, bound=2):
        return self.random_skew(n, rs, bound, 1).to_integer()

    def random_term(self, n, rs=None):
        """return a random `Term` among ``sigma`` of a nonempty index
        set, ``rho`` of a transvection or its inverse and ``nu`` of an
        elementary shift or its negative"""
        rs = _random_state(rs)
        kinds = ['sigma', 'rho', 'nu'] if n > 1 else ['sigma', 'rho']
        kind = kinds[rs.randint(len(kinds))]
        if kind == 'sigma':
            mask = rs.randint(2, size=n)
            mask[rs.randint(n)] = 1
            return Term('sigma', tuple(i + 1 for i in range(n) if mask[i]))
        if n == 1:
            return Term('rho', RationalMatrix([[-1]]))
        i, j = sorted(int(k) + 1 for k in rs.choice(n, 2, replace=False))
        sign = 1 if rs.randint(2) else -1
        if kind == 'rho':
            if rs.randint(2):
                i, j = j, i
            eye = IntegerMatrix.identity(n)
            t = transvection(i, j, n)
            return Term('rho', (t if sign > 0 else eye + eye - t).to_rational())
        return Term('nu', elementary_skew(i, j, n).scale(sign))

    def random_word(self, n, rs=None, length=3):
        """return a `Word` of ``length`` random terms"""
        rs = _random_state(rs)
        return Word(self.random_term(n, rs) for _ in range(length))

    def random_structure(self, n, rs=None, length=3):
        """return the image of a random Poisson graph under a random word
        of ``length`` terms"""
        rs = _random_state(rs)
        seed = graph_poisson(self.random_skew(n, rs))
        return act(eval_word(self.random_word(n, rs, length), n), seed)

    def random_subspace(self, n, rs=None, dim=None, max_num=9, max_den=9):
        """return a random `Subspace` of Q^n of dimension ``dim``, drawn
        from ``0..n`` if not given"""
        rs = _random_state(rs)
        if dim is None:
            dim = int(rs.randint(n + 1))
        vectors = []
        while len(vectors) < dim:
            v = [Fraction(int(rs.randint(-max_num, max_num + 1)),
                          int(rs.randint(1, max_den + 1))) for _ in range(n)]
            if Subspace(n, vectors + [v]).dim > len(vectors):
                vectors.append(v)
        return Subspace(n, vectors)

    def random_foliation(self, n, rs=None, dim=None):
        """return `foliation` of a `random_subspace`, its nullity is the
        dimension of the subspace"""
        return foliation(self.random_subspace(n, rs, dim))

    def perturbed_basis(self, gamma, rs=None):
        """return the basis of ``gamma`` with one entry changed such that
        the first row is no longer isotropic"""
        rs = _random_state(rs)
        n = gamma.n
        rows = gamma.basis.tolist()
        delta = Fraction(int(rs.randint(1, 4)))
        support = [j for j in range(2 * n) if rows[0][j] != 0]
        j = support[rs.randint(len(support))]
        rows[0][(j + n) % (2 * n)] += delta
        return RationalMatrix(rows)

    def kronecker(self, b):
        """return the structure spanned by ``(b, 1, 0, 0)`` and
        ``(0, 0, 1, -b)``, whose leaves are the lines of slope ``1/b``"""
        return from_basis([[b, 1, 0, 0], [0, 0, 1, -b]])

    def theta_graph(self, theta):
        """return the graph of ``[[0, theta], [-theta, 0]]``"""
        return graph_poisson(PoissonMatrix.from_theta(theta).entries)

    def random_polynomial(self, n, rs=None, terms=8, max_mode=3):
        """return a `FourierPolynomial` with at most ``terms`` monomials
        of modes in ``[-max_mode, max_mode]^n``"""
        rs = _random_state(rs)
        coefficients = {}
        for _ in range(terms):
            r = tuple(int(x) for x in rs.randint(-max_mode, max_mode + 1, n))
            coefficients[r] = complex(rs.randn(), rs.randn())
        return FourierPolynomial(n, coefficients)

ss = SampleStructures()
