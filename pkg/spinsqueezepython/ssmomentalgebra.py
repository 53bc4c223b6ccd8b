"""
Module: ssmomentalgebra.py

Reconstruction of collective-spin operator expectations from readouts along
a finite set of axes.

Readouts along an axis n give the moments <(n . J)^k>.  These are linear in the
fully symmetrized moments <Sym(Jx^p Jy^q Jz^r)>, p + q + r = k, which are
therefore recovered by least squares over the measured axes.  Any product of
collective operators of degree <= 4 is a fixed linear combination of such
symmetrized monomials (the coefficients follow from the spin commutation
relations alone); they are computed once in a faithful finite representation
(the direct sum of spins 1/2 .. 4).
"""

# external package imports.
from functools import lru_cache
import itertools
import math

import numpy as np

# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


_MAX_ORDER:int = 4
_SPINS:tuple = (0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0)


def _SpinMatrices(j:float) -> tuple:
    """
    Returns (Jx, Jy, Jz) of a spin-j irreducible representation.
    """
    m = np.arange(j, -j - 1, -1)
    dim:int = m.shape[0]
    jplus = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):
        jplus[k - 1, k] = np.sqrt(j * (j + 1) - m[k] * (m[k] + 1))
    jminus = jplus.conj().T
    return (jplus + jminus) / 2.0, (jplus - jminus) / 2.0j, np.diag(m).astype(complex)


@lru_cache(maxsize=1)
def _Representation() -> tuple:
    """
    Returns the per-spin generator triples of the faithful representation.
    """
    return tuple(_SpinMatrices(j) for j in _SPINS)


def _WordVector(word:tuple) -> np.ndarray:
    """
    Returns the flattened matrix of a word J_a1 J_a2 ... in the faithful representation.
    """
    blocks:list = []
    for gens in _Representation():
        mat = np.eye(gens[0].shape[0], dtype=complex)
        for letter in word:
            mat = mat @ gens[letter]
        blocks.append(mat.reshape(-1))
    return np.concatenate(blocks)


@lru_cache(maxsize=1)
def _MonomialBasis() -> tuple:
    """
    Returns (monomials, matrix) where the matrix columns are the flattened
    symmetrized monomials of degree 0 .. 4 in the faithful representation.
    """
    monomials:list = SSMomentAlgebra.AllMonomials()
    columns:list = []
    for mono in monomials:
        word = (0,) * mono[0] + (1,) * mono[1] + (2,) * mono[2]
        perms = sorted(set(itertools.permutations(word)))
        columns.append(sum(_WordVector(w) for w in perms) / len(perms))
    return tuple(monomials), np.stack(columns, axis=1)


@lru_cache(maxsize=4096)
def _ExpandWord(word:tuple) -> np.ndarray:
    """
    Returns the coefficients of a word over the symmetrized monomial basis.
    """
    monomials, basis = _MonomialBasis()
    coef, *_ = np.linalg.lstsq(basis, _WordVector(word), rcond=None)
    coef[np.abs(coef) < 1e-12] = 0.0
    return coef


@export
class SSMomentAlgebra:
    """
    Symmetrized-moment bookkeeping for shot-based estimation (static methods only).

    Operators are represented as polynomials: dictionaries mapping words
    (tuples of 0 = Jx, 1 = Jy, 2 = Jz, applied left to right as written) to
    complex coefficients.

    Threadsafety:
        All members are thread-safe; cached tables are built once.
    """

    @staticmethod
    def Monomials(order:int) -> list:
        """
        Returns the exponent triples (p, q, r) with p + q + r = order, in a fixed order.
        """
        return [(p, q, order - p - q) for p in range(order, -1, -1) for q in range(order - p, -1, -1)]


    @staticmethod
    def AllMonomials() -> list:
        """
        Returns the exponent triples of every order 0 .. 4 (35 triples).
        """
        result:list = []
        for order in range(_MAX_ORDER + 1):
            result += SSMomentAlgebra.Monomials(order)
        return result


    @staticmethod
    def SymmetricMoments(directions:np.ndarray, axisMoments:dict) -> dict:
        """
        Fits the symmetrized moments from per-axis moments.

        Args:
            directions (np.ndarray):
                (A, 3) array of unit axis directions.
            axisMoments (dict):
                Maps each order k (1..4) to a length-A array of <(n_a . J)^k>.

        Returns:
            A dictionary mapping each exponent triple to its symmetrized moment;
            the triple (0, 0, 0) maps to 1.

        Raises:
            SSArgumentOutOfRangeException:
                The axes do not determine all monomials of some order.
        """
        directions = np.asarray(directions, dtype=float)
        result:dict = {(0, 0, 0): 1.0}
        for order, values in axisMoments.items():
            monomials = SSMomentAlgebra.Monomials(order)
            design = np.empty((directions.shape[0], len(monomials)))
            for col, (p, q, r) in enumerate(monomials):
                multinomial:float = math.factorial(order) / (math.factorial(p) * math.factorial(q) * math.factorial(r))
                design[:, col] = multinomial * directions[:, 0] ** p * directions[:, 1] ** q * directions[:, 2] ** r
            if (np.linalg.matrix_rank(design) < len(monomials)):
                raise SSArgumentOutOfRangeException("directions", "The readout axes do not determine all order-{0} moments.".format(order))
            fit, *_ = np.linalg.lstsq(design, np.asarray(values, dtype=float), rcond=None)
            for mono, value in zip(monomials, fit):
                result[mono] = float(value)
        return result


    @staticmethod
    def Linear(direction) -> dict:
        """
        Returns the polynomial n . J.
        """
        return {(k,): complex(c) for k, c in enumerate(direction) if (c != 0)}


    @staticmethod
    def Multiply(left:dict, right:dict) -> dict:
        """
        Returns the operator product left * right.
        """
        result:dict = {}
        for wl, cl in left.items():
            for wr, cr in right.items():
                key = wl + wr
                result[key] = result.get(key, 0.0) + cl * cr
        return result


    @staticmethod
    def Expand(poly:dict) -> np.ndarray:
        """
        Returns the coefficients of a polynomial (degree <= 4) over the monomials of AllMonomials().
        """
        total = np.zeros(len(_MonomialBasis()[0]), dtype=complex)
        for word, coef in poly.items():
            if (len(word) > _MAX_ORDER):
                raise SSArgumentOutOfRangeException("poly", "Operator degree exceeds {0}.".format(_MAX_ORDER))
            total += coef * _ExpandWord(tuple(word))
        return total


    @staticmethod
    def Expectation(poly:dict, moments:dict) -> complex:
        """
        Returns the expectation of a polynomial given the symmetrized moments.
        """
        monomials = _MonomialBasis()[0]
        values = np.array([moments[m] for m in monomials], dtype=float)
        return complex(SSMomentAlgebra.Expand(poly) @ values)


    @staticmethod
    def OperatorSet(nonlinear:bool) -> list:
        """
        Returns the polynomials of the squeezing operator set, in the order
        Jx, Jy, Jz (and for the nonlinear set Jx^2, Jy^2, Jz^2, Jxy^2, Jyz^2, Jzx^2).
        """
        r:float = np.sqrt(0.5)
        linear:list = [SSMomentAlgebra.Linear(n) for n in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        if (not nonlinear):
            return linear
        ops:list = list(linear)
        for op in linear:
            ops.append(SSMomentAlgebra.Multiply(op, op))
        for n in ((r, r, 0), (0, r, r), (r, 0, r)):
            diag = SSMomentAlgebra.Linear(n)
            ops.append(SSMomentAlgebra.Multiply(diag, diag))
        return ops


    @staticmethod
    def GramFromMoments(moments:dict, nonlinear:bool) -> tuple:
        """
        Returns (means, gram) of the operator set, gram_ij = <S_i S_j>, from symmetrized moments.
        """
        ops:list = SSMomentAlgebra.OperatorSet(nonlinear)
        d:int = len(ops)
        means = np.array([SSMomentAlgebra.Expectation(op, moments).real for op in ops])
        gram = np.empty((d, d), dtype=complex)
        for i in range(d):
            for j in range(d):
                gram[i, j] = SSMomentAlgebra.Expectation(SSMomentAlgebra.Multiply(ops[i], ops[j]), moments)
        return means, gram
