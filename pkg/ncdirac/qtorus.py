# -*- coding: utf-8 -*-
"""Quantum tori at desk scale: the star product of finite Fourier
series, exact commutation phases, finite clock and shift
representations and the quantization descriptor of a Dirac structure.

For a Poisson matrix ``pi`` and the deformation parameter ``hbar``,
monomials multiply as::

    e_r * e_s = exp(-pi i hbar r.T pi s) e_(r+s)

The exponent is rational for rational ``pi`` and is kept as
`ExactPhase`, a rational number mod 2, until a complex coefficient is
needed.

>>> import numpy as np
>>> from ncdirac.exact_core import RationalMatrix
>>> from ncdirac.qtorus import FourierPolynomial, PoissonMatrix, star
>>> from ncdirac.qtorus import commutation_matrix, descriptor
>>> pi = PoissonMatrix.from_theta('1/2')
>>> f = star(FourierPolynomial.monomial([1, 0]), FourierPolynomial.monomial([0, 1]), pi)
>>> f.terms
{(1, 1): -1j}

"""
import collections
from fractions import Fraction
from math import gcd
import numpy as np
from .exact_core import (RationalMatrix, DimensionMismatch, as_rational,
                         parse_rational, parse_integer, parse_dimension,
                         format_rational)
from .dirac import skew_matrix
from .onn import IndexOutOfRange, rho
from .poissonize import find_transversal, to_poisson
from .interfaces import (ComputationError, InputError, JSONSerializable,
                         require_keys)
from .utilities.math import Mh
from .utilities.utils import is_integer

coefficient_threshold = 1e-15
"""coefficients of smaller modulus are dropped from star products"""
residual_tolerance = 1e-12
"""tolerance of floating point identities, e.g. of `ClockShiftRep`"""


class NotCoprime(ComputationError):
    """``gcd(p, q) != 1`` or ``q < 1``"""


class ExactPhase(object):
    """the unit complex number ``exp(pi i value)`` with rational
    ``value`` kept reduced into ``[0, 2)``.

    >>> from ncdirac.qtorus import ExactPhase
    >>> ExactPhase('-1/2')
    ExactPhase(3/2)
    >>> ExactPhase('-1/2').to_complex(), (ExactPhase('1/3') + ExactPhase('2/3')).to_complex()
    (-1j, (-1+0j))
    >>> -ExactPhase(1) == ExactPhase(3)
    True

    """
    def __init__(self, value=0):
        value = parse_rational(value)
        self.value = value - 2 * (value.numerator // (2 * value.denominator))

    def __add__(self, other):
        if not isinstance(other, ExactPhase):
            other = ExactPhase(other)
        return ExactPhase(self.value + other.value)
    def __neg__(self):
        return ExactPhase(-self.value)
    def __sub__(self, other):
        return self + (-other)
    def __eq__(self, other):
        if not isinstance(other, ExactPhase):
            return NotImplemented
        return self.value == other.value
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    def __hash__(self):
        return hash(self.value)
    def __repr__(self):
        return 'ExactPhase(%s)' % str(format_rational(self.value))

    @property
    def is_trivial(self):
        return self.value == 0

    def to_complex(self):
        """exact at quarter turns, otherwise the nearest double"""
        return complex(Mh.aroot_of_unity(self.value.numerator,
                                         2 * self.value.denominator))

    def to_json(self):
        return format_rational(self.value)


class PoissonMatrix(JSONSerializable):
    """an exact skew-symmetric ``n x n`` matrix.

    >>> from ncdirac.qtorus import PoissonMatrix
    >>> theta = PoissonMatrix.from_theta('-1/2')
    >>> theta.entries.to_json(), theta.reduced_mod1().to_json()
    ([[0, '-1/2'], ['1/2', 0]], [[0, '1/2'], ['1/2', 0]])
    >>> (theta + [[0, 1], [-1, 0]]) == PoissonMatrix.from_theta('1/2')
    True
    >>> PoissonMatrix.from_json([[0, 3], [-3, 0]]).n
    2

    """
    def __init__(self, entries):
        self.entries = skew_matrix(entries, 'Poisson matrix')
        self.n = self.entries.rows

    @staticmethod
    def from_theta(theta):
        """return ``[[0, theta], [-theta, 0]]``"""
        theta = parse_rational(theta)
        return PoissonMatrix([[0, theta], [-theta, 0]])

    def __getitem__(self, idx):
        return self.entries[idx]
    def __add__(self, other):
        other = other.entries if isinstance(other, PoissonMatrix) else as_rational(other)
        return PoissonMatrix(self.entries + other)
    def __eq__(self, other):
        if not isinstance(other, PoissonMatrix):
            return NotImplemented
        return self.entries == other.entries
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    def __hash__(self):
        return hash(self.entries)
    def __repr__(self):
        return 'PoissonMatrix(%s)' % str(self.entries.to_json())

    def reduced_mod1(self):
        """return the entries reduced into ``[0, 1)``, no longer skew"""
        return RationalMatrix._from_rows(
            [[x - x.numerator // x.denominator for x in row]
             for row in self.entries.tolist()], self.n)

    def to_json(self):
        return {'n': self.n, 'pi': self.entries.to_json()}

    @classmethod
    def from_json(cls, doc):
        """accept ``{"n": int, "pi": [[...]]}`` or a bare matrix"""
        if isinstance(doc, list):
            return cls(RationalMatrix.from_json(doc))
        require_keys(doc, ('n', 'pi'), 'PoissonMatrix')
        n = parse_dimension(doc['n'], 'n')
        return cls(RationalMatrix.from_json(doc['pi'], (n, n)))


def as_poisson(pi):
    return pi if isinstance(pi, PoissonMatrix) else PoissonMatrix(pi)


class FourierPolynomial(JSONSerializable):
    """finitely many complex coefficients of the monomials ``e_r``,
    ``r`` in Z^n, kept in the `dict` ``terms``.

    >>> from ncdirac.qtorus import FourierPolynomial as FP
    >>> f = FP.monomial([1, 0]) + 2j * FP.monomial([0, -1])
    >>> f.n, len(f), f.coefficient([0, -1])
    (2, 2, 2j)
    >>> f + (-1) * f == FP.zero(2)
    True
    >>> FP.from_json(f.to_json()) == f
    True

    """
    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for r, c in (terms or {}).items():
            r = tuple(parse_integer(x) for x in r)
            if len(r) != n:
                raise DimensionMismatch('multi-index %s is not in Z^%d'
                                        % (str(r), n))
            c = complex(c)
            if c != 0:
                self.terms[r] = self.terms.get(r, 0) + c

    @staticmethod
    def zero(n):
        return FourierPolynomial(n)

    @staticmethod
    def monomial(r, coefficient=1):
        return FourierPolynomial(len(r), {tuple(r): coefficient})

    def coefficient(self, r):
        return self.terms.get(tuple(r), 0j)

    def __len__(self):
        return len(self.terms)

    def _check_n(self, other):
        if self.n != other.n:
            raise DimensionMismatch('Fourier polynomials on T^%d and T^%d'
                                    % (self.n, other.n))

    def __add__(self, other):
        self._check_n(other)
        terms = dict(self.terms)
        for r, c in other.terms.items():
            terms[r] = terms.get(r, 0) + c
        return FourierPolynomial(self.n, terms)
    def __mul__(self, scalar):
        """multiplication with a scalar, see `star` for the product"""
        return FourierPolynomial(self.n, dict(
            (r, c * scalar) for r, c in self.terms.items()))
    __rmul__ = __mul__
    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, FourierPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms
    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res
    __hash__ = None

    def allclose(self, other, tol=residual_tolerance):
        """`True` iff all coefficients differ by less than ``tol``"""
        self._check_n(other)
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.coefficient(r) - other.coefficient(r)) < tol
                   for r in keys)

    def __repr__(self):
        return 'FourierPolynomial(%d, %s)' % (self.n, repr(self.terms))

    def to_json(self):
        return {'n': self.n,
                'terms': [{'r': list(r), 're': c.real, 'im': c.imag}
                          for r, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, doc):
        require_keys(doc, ('n', 'terms'), 'FourierPolynomial')
        if not isinstance(doc['terms'], list):
            raise InputError('terms must be a JSON array, not %s'
                             % type(doc['terms']).__name__)
        terms = {}
        for term in doc['terms']:
            require_keys(term, ('r',), 'term')
            if not isinstance(term['r'], list):
                raise InputError('multi-index %s is not a JSON array'
                                 % repr(term['r']))
            try:
                c = complex(float(term.get('re', 0)), float(term.get('im', 0)))
            except (TypeError, ValueError):
                raise InputError('coefficient of %s is not a number' % str(term))
            r = tuple(parse_integer(x) for x in term['r'])
            terms[r] = terms.get(r, 0) + c
        return cls(parse_dimension(doc['n'], 'n'), terms)


def bilinear(pi, r, s):
    """return ``r.T pi s`` as `Fraction`"""
    return sum((pi[j, k] * r[j] * s[k] for j in range(len(r))
                for k in range(len(s)) if r[j] and s[k]), Fraction(0))

def star_phase(pi, r, s, hbar=1):
    """return the `ExactPhase` of ``e_r * e_s``, ``-hbar r.T pi s``"""
    return ExactPhase(-parse_rational(hbar) * bilinear(pi, r, s))

def star(f, g, pi, hbar=1):
    """return the star product ``f * g`` for the Poisson matrix ``pi``.

    >>> from ncdirac.qtorus import star, FourierPolynomial as FP
    >>> f = FP.monomial([2, -1], 3)
    >>> star(f, FP.monomial([0, 0]), [[0, '1/7'], ['-1/7', 0]]) == f
    True
    >>> pi = [[0, 1], [-1, 0]]
    >>> star(FP.monomial([1, 0]), FP.monomial([0, 1]), pi).terms
    {(1, 1): (-1+0j)}
    >>> star(FP.monomial([0, 1]), FP.monomial([1, 0]), pi).terms
    {(1, 1): (-1+0j)}

    """
    pi = as_poisson(pi)
    f._check_n(g)
    if f.n != pi.n:
        raise DimensionMismatch('Fourier polynomials on T^%d with a %dx%d '
                                'Poisson matrix' % (f.n, pi.n, pi.n))
    hbar = parse_rational(hbar)
    terms = {}
    for r, a in f.terms.items():
        for s, b in g.terms.items():
            rs = tuple(x + y for x, y in zip(r, s))
            phase = star_phase(pi.entries, r, s, hbar)
            terms[rs] = terms.get(rs, 0) + a * b * phase.to_complex()
    return FourierPolynomial(f.n, dict(
        (r, c) for r, c in terms.items() if abs(c) >= coefficient_threshold))

def relabel(f, a):
    """return the image of ``f`` under ``e_r -> e_(a.T r)``.

    For ``a`` in GL(n,Z) this is an isomorphism of the quantum torus of
    ``a pi a.T`` onto the one of ``pi``.

    >>> from ncdirac.qtorus import relabel, star, FourierPolynomial as FP
    >>> a, pi = [[1, 0], [1, 1]], PoissonMatrix([[0, '1/3'], ['-1/3', 0]])
    >>> f, g = FP.monomial([1, 2]), FP.monomial([-1, 1], 1j)
    >>> pi_src = PoissonMatrix(RationalMatrix(a) @ pi.entries @ RationalMatrix(a).T)
    >>> relabel(star(f, g, pi_src), a).allclose(
    ...     star(relabel(f, a), relabel(g, a), pi))
    True

    """
    a = rho(a).A  # validates GL(n,Z)
    if a.rows != f.n:
        raise DimensionMismatch('%dx%d matrix cannot relabel T^%d'
                                % (a.rows, a.cols, f.n))
    at = a.T
    terms = {}
    for r, c in f.terms.items():
        image = tuple(int(sum(at[i, j] * r[j] for j in range(f.n)))
                      for i in range(f.n))
        terms[image] = c
    return FourierPolynomial(f.n, terms)

def commutator_ratio(pi, i, j, hbar=1):
    """return the `ExactPhase` ``rho`` with
    ``e_j * e_i = exp(pi i rho) e_i * e_j`` for unit vectors ``e_i``,
    that is ``2 hbar pi_ij`` mod 2.

    >>> from ncdirac.qtorus import commutator_ratio, PoissonMatrix
    >>> commutator_ratio(PoissonMatrix.from_theta('1/2'), 1, 2).to_complex()
    (-1+0j)
    >>> commutator_ratio(PoissonMatrix.from_theta(5), 1, 2).is_trivial
    True

    """
    pi = as_poisson(pi)
    for k in (i, j):
        if not 1 <= k <= pi.n:
            raise IndexOutOfRange('index %d is not in 1..%d' % (k, pi.n))
    return ExactPhase(2 * parse_rational(hbar) * pi[i - 1, j - 1])

def commutation_matrix(gamma, i_set):
    """return the `PoissonMatrix` of commutation data of the generators
    of the crossed product of the transversal ``i_set``, which is
    ``to_poisson(gamma, i_set)``.

    >>> from ncdirac.dirac import from_basis
    >>> kronecker = from_basis([[3, 1, 0, 0], [0, 0, 1, -3]])
    >>> commutation_matrix(kronecker, [2])
    PoissonMatrix([[0, 3], [-3, 0]])

    """
    return PoissonMatrix(to_poisson(gamma, i_set))


class ClockShiftRep(collections.namedtuple(
        'ClockShiftRep', ['p', 'q', 'u', 'v'])):
    """clock ``u = diag(w^0, ..., w^(q-1))``, ``w = exp(2 pi i p / q)``,
    and cyclic shift ``v`` with ``v e_k = e_(k+1)``, which satisfy
    ``v u = exp(-2 pi i p / q) u v``.
    """
    def relation_residual(self):
        """return ``‖v u - exp(-2 pi i p/q) u v‖_∞``"""
        omega_bar = complex(Mh.aroot_of_unity(-self.p, self.q))
        return Mh.residual(np.dot(self.v, self.u),
                           omega_bar * np.dot(self.u, self.v))

    def unitarity_residual(self):
        return max(Mh.unitarity_residual(self.u), Mh.unitarity_residual(self.v))

    def to_json(self):
        def complex_matrix(m):
            return [[[z.real, z.imag] for z in row] for row in m.tolist()]
        return {'p': self.p, 'q': self.q,
                'u': complex_matrix(self.u), 'v': complex_matrix(self.v),
                'relation_residual': self.relation_residual(),
                'unitarity_residual': self.unitarity_residual()}

def clock_shift(p, q):
    """return the `ClockShiftRep` for the angle ``p / q``.

    >>> from ncdirac.qtorus import clock_shift
    >>> rep = clock_shift(1, 2)
    >>> rep.u.tolist(), rep.v.tolist()
    ([[(1+0j), 0j], [0j, (-1+0j)]], [[0j, (1+0j)], [(1+0j), 0j]])
    >>> assert rep.relation_residual() < 1e-12
    >>> rep = clock_shift(1, 3)
    >>> assert rep.relation_residual() < 1e-12 and rep.unitarity_residual() < 1e-12
    >>> assert np.abs(np.linalg.matrix_power(rep.u, 3) - np.eye(3)).max() < 1e-12
    >>> try:
    ...     clock_shift(2, 4)
    ... except ValueError as e:
    ...     print(e.tag)
    NotCoprime

    """
    if not (is_integer(p) and is_integer(q)):
        raise InputError('p=%s and q=%s must be integers' % (str(p), str(q)))
    p, q = int(p), int(q)
    if q < 1 or gcd(p, q) != 1:
        raise NotCoprime('p=%d and q=%d are not coprime with q >= 1' % (p, q))
    u = np.diag(Mh.aroot_of_unity(p * np.arange(q), q)).astype(complex)
    v = np.roll(np.eye(q, dtype=complex), 1, axis=0)
    return ClockShiftRep(p, q, u, v)


class QuantizationDescriptor(collections.namedtuple(
        'QuantizationDescriptor', ['parity', 'nullity', 'theta_reduced'])):
    """a computable label of the quantization of a Dirac structure.

    Structures in one orbit of O(n,n|Z) can have different labels, as
    ``theta_reduced`` depends on the transversal, and equal labels do not
    imply Morita equivalent quantizations.
    """
    def to_json(self):
        return {'parity': self.parity, 'nullity': self.nullity,
                'theta_reduced': self.theta_reduced.to_json()}

def descriptor(gamma):
    """return the `QuantizationDescriptor` of ``gamma`` for the
    transversal of `find_transversal`.

    >>> from ncdirac.dirac import graph_poisson, foliation
    >>> d = descriptor(graph_poisson([[0, '1/2'], ['-1/2', 0]]))
    >>> d.parity, d.nullity, d.theta_reduced.to_json()
    ('even', 0, [[0, '1/2'], ['1/2', 0]])
    >>> from ncdirac.exact_core import Subspace
    >>> d = descriptor(foliation(Subspace.coordinate(2, [1])))
    >>> d.parity, d.nullity, d.theta_reduced.is_zero()
    ('odd', 1, True)

    """
    data = gamma.characteristic()
    pi = PoissonMatrix(to_poisson(gamma, find_transversal(gamma).i_set))
    return QuantizationDescriptor(data.parity, data.nullity, pi.reduced_mod1())
