# -*- coding: utf-8 -*-
"""floating point math utilities, used where exact arithmetic ends,
namely for complex coefficients and finite matrix representations.
"""
import numpy as np

class MathHelperFunctions(object):
    """static convenience math helper functions, if the function name
    is preceded with an "a", a numpy array is returned
    """
    @staticmethod
    def residual(a, b):
        """return the max-norm of ``a - b``, that is, ``‖a - b‖_∞``
        taken entry-wise.

        >>> from ncdirac.utilities.math import Mh
        >>> Mh.residual([[1, 2], [3, 4]], [[1, 2], [3, 4.5]])
        0.5
        >>> Mh.residual([], [])
        0.0

        """
        d = np.abs(np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex))
        return float(np.max(d)) if d.size else 0.0
    @staticmethod
    def unitarity_residual(m):
        """return ``‖m m^H - 1‖_∞``.

        >>> import numpy as np
        >>> from ncdirac.utilities.math import Mh
        >>> assert Mh.unitarity_residual(np.array([[0, 1j], [1, 0]])) < 1e-15

        """
        m = np.asarray(m, dtype=complex)
        return MathHelperFunctions.residual(np.dot(m, m.conj().T),
                                            np.eye(len(m)))
    @staticmethod
    def aroot_of_unity(k, q):
        """return ``exp(2 pi i k / q)`` for integer ``k``, vectorized,
        with exact values at the quarter turns.

        >>> from ncdirac.utilities.math import Mh
        >>> z = Mh.aroot_of_unity([0, 1, 2, 3, 5], 4)
        >>> assert list(z) == [1, 1j, -1, complex(0, -1), 1j]

        """
        k = np.mod(np.asarray(k), q)
        z = np.exp(2j * np.pi * k / q)
        quarter = (4 * k) % q == 0
        exact = np.array([1, 1j, -1, complex(0, -1)])[(4 * k // q) % 4]
        return np.where(quarter, exact, z)

Mh = MathHelperFunctions
