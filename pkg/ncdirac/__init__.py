# -*- coding: utf-8 -*-
"""Package `ncdirac` computes exactly with constant Dirac structures on
the n-torus, the action of the integral group O(n,n|Z) on them and the
quantum tori they give rise to.

A constant Dirac structure is a maximal isotropic subspace of
``Q^n + Q^n*``. Graphs of skew matrices (Poisson structures) and of
two-forms are special cases. The group O(n,n|Z) acts on these
structures, and structures in one orbit have Morita equivalent
quantizations. Every structure can be moved by a partial exchange
`sigma` of coordinates to the graph of a Poisson matrix, whose blocks
describe the transverse Poisson structure and the holonomy of the
characteristic foliation.

Arithmetic is exact throughout: matrices are `numpy` object arrays of
`fractions.Fraction` or `int`. Floating point numbers appear only for
complex coefficients of Fourier polynomials and finite matrix
representations in `qtorus`.

Modules:

- `exact_core`: rational and integer matrices, RREF, kernels, Hermite form
- `dirac`: `DiracStructure`, characteristic subspace, nullity, parity
- `onn`: O(n,n) elements, generators `sigma`, `rho`, `nu`, words
- `poissonize`: transversals, Poisson matrix, holonomy ``beta``
- `qtorus`: star product, commutation phases, clock and shift matrices
- `orbit`: bounded orbit exploration and witness words
- `cli`: the command line interface ``ncdirac``

Used external packages are `numpy` and `sympy`, the latter for exact
elimination over the rationals.

Install
=======
To install the package from a ``ncdirac`` folder::

    pip install -e .

which also installs the ``ncdirac`` command line tool.

Testing
=======
From the system shell::

    python -m ncdirac.test -h
    python -m ncdirac.test
    python -m ncdirac.test orbit.py

should run without complaints in less than a minute.

Example
=======
From a python shell::

    import ncdirac
    gamma = ncdirac.from_basis([[3, 1, 0, 0], [0, 0, 1, -3]])
    gamma.nullity, gamma.parity  # (1, 'odd')
    ncdirac.poissonize.split_blocks(gamma, [2]).beta
    ncdirac.connect(ncdirac.ss.theta_graph('1/2'),
                    ncdirac.ss.theta_graph(-2), depth=1)  # Word('sigma{1,2}')
    ncdirac.OrbitOptions('node')  # display node cap options

From the system shell::

    ncdirac inspect '{"n": 2, "basis": [[3, 1, 0, 0], [0, 0, 1, -3]]}'
    ncdirac rep --theta 1/3

:See also: `DiracStructure`, `act`, `explore`, `OrbitOptions`

:License: BSD 3-Clause.
"""
__license__ = "BSD 3-clause"
__version__ = "0.1.0"

from . import (exact_core, dirac, onn, poissonize, qtorus, orbit,
               interfaces, utilities)
test = 'type "import ncdirac.test" to access the `test` module of `ncdirac`'
from .sample_structures import ss
from .exact_core import RationalMatrix, IntegerMatrix, Subspace
from .dirac import (DiracStructure, from_basis, graph_poisson,
                    graph_two_form, foliation)
from .onn import act, frac_linear, sigma, rho, nu, parse_word, eval_word
from .poissonize import find_transversal, to_poisson, split_blocks
from .qtorus import star, clock_shift, FourierPolynomial, PoissonMatrix
from .orbit import explore, connect, OrbitOptions
