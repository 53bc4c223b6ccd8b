"""
Module: ssdickevector.py

Coefficients of a permutation-symmetric state in the Dicke basis |J = N/2, m>.

Index k = 0..N holds m = k - N/2, which is the symmetric combination of all
basis states with k qubits in |1>.
"""

# external package imports.
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssconst import NORM_TOLERANCE
from .ssstatevector import SSStateVector

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@lru_cache(maxsize=64)
def _SqrtBinomials(nQubits:int) -> np.ndarray:
    k = np.arange(nQubits + 1)
    logC = gammaln(nQubits + 1) - gammaln(k + 1) - gammaln(nQubits - k + 1)
    result = np.exp(0.5 * logC)
    result.setflags(write=False)
    return result


@lru_cache(maxsize=64)
def _RaisingCoefficients(nQubits:int) -> np.ndarray:
    # J+ |k> = sqrt((k + 1)(N - k)) |k + 1>.
    k = np.arange(nQubits)
    result = np.sqrt((k + 1.0) * (nQubits - k))
    result.setflags(write=False)
    return result


@export
class SSDickeVector:
    """
    State of N qubits restricted to the symmetric subspace.

    Threadsafety:
        Instances are not thread-safe; use Copy() to share between threads.
    """

    def __init__(self, nQubits:int, coefficients:np.ndarray) -> None:
        """
        Initializes a new instance of the class.

        Args:
            nQubits (int):
                Number of qubits N >= 1.
            coefficients (np.ndarray):
                N + 1 complex coefficients, index k for m = k - N/2.

        Raises:
            SSArgumentOutOfRangeException:
                The coefficient count is not N + 1.
        """
        if (coefficients is None):
            raise SSArgumentNullException("coefficients")
        if (nQubits is None) or (nQubits < 1):
            raise SSArgumentOutOfRangeException("nQubits", "Number of qubits must be >= 1, got {0}.".format(nQubits))
        coefficients = np.array(coefficients, dtype=complex).reshape(-1)
        if (coefficients.shape[0] != nQubits + 1):
            raise SSArgumentOutOfRangeException("coefficients", "Expected {0} Dicke coefficients, got {1}.".format(nQubits + 1, coefficients.shape[0]))

        self._fNumQubits:int = int(nQubits)
        self._fCoefficients:np.ndarray = coefficients


    def __repr__(self) -> str:
        return "SSDickeVector(N={0})".format(self._fNumQubits)


    @property
    def Coefficients(self) -> np.ndarray:
        """ Gets the coefficient array (index k for m = k - N/2). """
        return self._fCoefficients


    @property
    def NumQubits(self) -> int:
        """ Gets the number of qubits N. """
        return self._fNumQubits


    @property
    def MagneticNumbers(self) -> np.ndarray:
        """ Gets the m values -N/2..N/2 of the coefficients. """
        return np.arange(self._fNumQubits + 1) - self._fNumQubits / 2.0


    def Copy(self) -> 'SSDickeVector':
        """ Returns a deep copy. """
        return SSDickeVector(self._fNumQubits, self._fCoefficients.copy())


    def Norm(self) -> float:
        """ Returns the 2-norm of the coefficients. """
        return float(np.linalg.norm(self._fCoefficients))


    def IsNormalized(self, tolerance:float=1e-12) -> bool:
        """ Returns True if the norm is 1 within the tolerance. """
        return abs(self.Norm() - 1.0) <= tolerance


    @staticmethod
    def Basis(nQubits:int, k:int) -> 'SSDickeVector':
        """
        Returns the Dicke state with k qubits excited (m = k - N/2).
        """
        if (k < 0) or (k > nQubits):
            raise SSArgumentOutOfRangeException("k", "Dicke index must be in 0..{0}, got {1}.".format(nQubits, k))
        coefficients = np.zeros(nQubits + 1, dtype=complex)
        coefficients[k] = 1.0
        return SSDickeVector(nQubits, coefficients)


    @staticmethod
    def CoherentX(nQubits:int) -> 'SSDickeVector':
        """
        Returns the product of |+> states, sqrt(C(N, k)) / 2^(N/2) in the Dicke basis.
        """
        coefficients = _SqrtBinomials(nQubits) * np.exp(-0.5 * nQubits * np.log(2.0))
        return SSDickeVector(nQubits, coefficients.astype(complex))


    @staticmethod
    def ApplyLadder(coefficients:np.ndarray, nQubits:int, raising:bool) -> np.ndarray:
        """
        Returns J+ c (raising) or J- c (lowering) for a coefficient array.
        """
        ladder = _RaisingCoefficients(nQubits)
        result = np.zeros_like(coefficients)
        if (raising):
            result[1:] = ladder * coefficients[:-1]
        else:
            result[:-1] = ladder * coefficients[1:]
        return result


    @staticmethod
    def ApplyVector(coefficients:np.ndarray, nQubits:int, direction) -> np.ndarray:
        """
        Returns (n . J) c inside the symmetric subspace.

        Args:
            coefficients (np.ndarray):
                Dicke coefficients.
            nQubits (int):
                Number of qubits N.
            direction (array-like):
                Vector (nx, ny, nz); it is not normalized.
        """
        nx, ny, nz = (float(v) for v in direction)
        result = nz * (np.arange(nQubits + 1) - nQubits / 2.0) * coefficients
        if (nx != 0.0) or (ny != 0.0):
            up = SSDickeVector.ApplyLadder(coefficients, nQubits, True)
            down = SSDickeVector.ApplyLadder(coefficients, nQubits, False)
            # Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i).
            result = result + 0.5 * (nx - 1j * ny) * up + 0.5 * (nx + 1j * ny) * down
        return result


    def ToStateVector(self) -> SSStateVector:
        """
        Returns the full 2^N state vector of this symmetric state.

        Raises:
            SSArgumentOutOfRangeException:
                N exceeds the state-vector capacity.
        """
        n:int = self._fNumQubits
        SSStateVector.CheckQubitCount(n)
        popcounts = SSStateVector.PopCounts(n)
        amplitudes = (self._fCoefficients / _SqrtBinomials(n))[popcounts]
        return SSStateVector(n, amplitudes, copy=False)


    @staticmethod
    def FromStateVector(state:SSStateVector, tolerance:float=NORM_TOLERANCE) -> 'SSDickeVector':
        """
        Projects a state vector onto the symmetric subspace.

        Args:
            state (SSStateVector):
                State to project.
            tolerance (float):
                Largest allowed norm loss of the projection.

        Raises:
            SSArgumentOutOfRangeException:
                The state is not permutation symmetric within the tolerance.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        n:int = state.NumQubits
        popcounts = SSStateVector.PopCounts(n)
        sums = np.bincount(popcounts, weights=state.Amplitudes.real, minlength=n + 1) \
            + 1j * np.bincount(popcounts, weights=state.Amplitudes.imag, minlength=n + 1)
        result = SSDickeVector(n, sums / _SqrtBinomials(n))
        if (abs(result.Norm() - state.Norm()) > tolerance):
            raise SSArgumentOutOfRangeException("state", "State is not permutation symmetric (projected norm {0:.12f}).".format(result.Norm()))
        return result


    def ToDictionary(self) -> dict:
        """
        Returns the json record {n_qubits, coefficients: [[re, im], ...]}.
        """
        return {
            "n_qubits": self._fNumQubits,
            "coefficients": [[float(c.real), float(c.imag)] for c in self._fCoefficients],
        }
