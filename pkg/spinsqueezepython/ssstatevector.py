"""
Module: ssstatevector.py

Matrix-free N-qubit state vector.

Basis ordering: qubit j corresponds to bit (j - 1) of the basis index, so
qubit 1 is the least significant bit.  When the amplitudes are viewed as a
tensor of shape (2,) * N (numpy row-major order), qubit j lives on axis N - j.
"""

# external package imports.
from functools import lru_cache
import json

import numpy as np

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssconfigurationexception import SSConfigurationException
from .ssconst import MAX_QUBITS

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@lru_cache(maxsize=32)
def _PopCounts(nQubits:int) -> np.ndarray:
    """
    Returns the number of set bits of every basis index (read-only array).
    """
    idx = np.arange(2 ** nQubits, dtype=np.int64)
    counts = np.zeros(2 ** nQubits, dtype=np.int64)
    for bit in range(nQubits):
        counts += (idx >> bit) & 1
    counts.setflags(write=False)
    return counts


@export
class SSStateVector:
    """
    Complex amplitude vector over the 2^N computational basis states.

    Threadsafety:
        This class is not guaranteed to be thread-safe; instances are exclusively
        owned values.  Gate application methods mutate the instance in place and 
        return it, so calls can be chained.
    """

    def __init__(self, nQubits:int, amplitudes:np.ndarray=None, copy:bool=True) -> None:
        """
        Initializes a new instance of the class.

        Args:
            nQubits (int):
                Number of qubits (1 <= N <= 24).
            amplitudes (np.ndarray):
                Amplitudes of length 2^N, or None for |0...0>.
            copy (bool):
                True to copy the supplied amplitudes; False to take ownership.

        Raises:
            SSArgumentOutOfRangeException:
                nQubits is outside of 1..24, or the amplitudes have the wrong length.
        """
        SSStateVector.CheckQubitCount(nQubits)

        if (amplitudes is None):
            self._fAmplitudes:np.ndarray = np.zeros(2 ** nQubits, dtype=complex)
            self._fAmplitudes[0] = 1.0
        else:
            arr = np.array(amplitudes, dtype=complex, copy=True) if copy else np.asarray(amplitudes, dtype=complex)
            arr = arr.reshape(-1)
            if (arr.shape[0] != 2 ** nQubits):
                raise SSArgumentOutOfRangeException("amplitudes", "Expected {0} amplitudes for {1} qubits, got {2}.".format(2 ** nQubits, nQubits, arr.shape[0]))
            self._fAmplitudes = arr

        self._fNumQubits:int = int(nQubits)


    def __repr__(self) -> str:
        return "SSStateVector(nQubits={0}, norm={1:.12f})".format(self._fNumQubits, self.Norm())


    @staticmethod
    def CheckQubitCount(nQubits:int) -> None:
        """
        Raises SSArgumentOutOfRangeException if the number of qubits is outside of 1..24.
        """
        if (nQubits is None):
            raise SSArgumentNullException("nQubits")
        if (int(nQubits) != nQubits) or (nQubits < 1) or (nQubits > MAX_QUBITS):
            raise SSArgumentOutOfRangeException("nQubits", "Number of qubits must be in 1..{0}, got {1}.".format(MAX_QUBITS, nQubits))


    @staticmethod
    def ZeroState(nQubits:int) -> 'SSStateVector':
        """
        Returns |0...0>, the state with amplitude 1 at basis index 0.

        Raises:
            SSArgumentOutOfRangeException:
                nQubits is outside of 1..24.
        """
        return SSStateVector(nQubits)


    @staticmethod
    def RandomState(nQubits:int, rng:np.random.Generator) -> 'SSStateVector':
        """
        Returns a Haar-random normalized state drawn with the supplied generator.
        """
        dim:int = 2 ** nQubits
        amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        amps /= np.linalg.norm(amps)
        return SSStateVector(nQubits, amps, copy=False)


    @staticmethod
    def ProductState(qubitStates) -> 'SSStateVector':
        """
        Returns the product state of the supplied single-qubit states.

        Args:
            qubitStates (list):
                Sequence of 2-vectors; element j-1 is the state of qubit j.
        """
        psi = np.array([1.0 + 0.0j])
        for q in qubitStates:
            psi = np.kron(np.asarray(q, dtype=complex), psi)    # higher qubits are more significant.
        return SSStateVector(len(qubitStates), psi, copy=False)


    @staticmethod
    def PopCounts(nQubits:int) -> np.ndarray:
        """
        Returns a cached read-only array holding the number of set bits of each basis index.
        """
        return _PopCounts(int(nQubits))


    @property
    def Amplitudes(self) -> np.ndarray:
        """ 
        Gets the amplitude array (not a copy).
        """
        return self._fAmplitudes


    @property
    def Dimension(self) -> int:
        """ 
        Gets the number of amplitudes (2^N).
        """
        return self._fAmplitudes.shape[0]


    @property
    def NumQubits(self) -> int:
        """ 
        Gets the number of qubits.
        """
        return self._fNumQubits


    def Copy(self) -> 'SSStateVector':
        """
        Returns an independent copy of this state.
        """
        return SSStateVector(self._fNumQubits, self._fAmplitudes, copy=True)


    def Tensor(self) -> np.ndarray:
        """
        Returns a (2,) * N view of the amplitudes; qubit j lives on axis N - j.
        """
        return self._fAmplitudes.reshape((2,) * self._fNumQubits)


    def Axis(self, qubit:int) -> int:
        """
        Returns the tensor axis of a qubit.

        Raises:
            SSArgumentOutOfRangeException:
                The qubit index is outside of 1..N.
        """
        if (int(qubit) != qubit) or (qubit < 1) or (qubit > self._fNumQubits):
            raise SSArgumentOutOfRangeException("qubit", "Qubit index must be in 1..{0}, got {1}.".format(self._fNumQubits, qubit))
        return self._fNumQubits - int(qubit)


    def Apply1Q(self, qubit:int, u:np.ndarray) -> 'SSStateVector':
        """
        Applies a single-qubit unitary to a qubit.

        Args:
            qubit (int):
                Qubit index (1..N).
            u (np.ndarray):
                2x2 matrix in the {|0>, |1>} basis.

        Returns:
            This instance (updated in place).

        Raises:
            SSArgumentOutOfRangeException:
                The qubit index is out of range, or u is not 2x2.
        """
        axis:int = self.Axis(qubit)
        u = np.asarray(u, dtype=complex)
        if (u.shape != (2, 2)):
            raise SSArgumentOutOfRangeException("u", "Expected a 2x2 matrix, got shape {0}.".format(u.shape))

        psi = self.Tensor()
        out = np.tensordot(u, psi, axes=([1], [axis]))
        self._fAmplitudes = np.ascontiguousarray(np.moveaxis(out, 0, axis)).reshape(-1)
        return self


    def Apply2Q(self, qubitA:int, qubitB:int, u:np.ndarray) -> 'SSStateVector':
        """
        Applies a two-qubit unitary to a pair of qubits.

        Args:
            qubitA (int):
                Qubit index (1..N) carrying the first ket of the gate basis.
            qubitB (int):
                Qubit index (1..N) carrying the second ket of the gate basis.
            u (np.ndarray):
                4x4 matrix in the {|00>, |01>, |10>, |11>} basis, where the
                matrix index is 2a + b for bit a of qubitA and bit b of qubitB.

        Returns:
            This instance (updated in place).

        Raises:
            SSArgumentOutOfRangeException:
                The qubit indexes are out of range or equal, or u is not 4x4.

        Any ordered pair is accepted, including the periodic wrap pair (N, 1).
        """
        axisA:int = self.Axis(qubitA)
        axisB:int = self.Axis(qubitB)
        if (axisA == axisB):
            raise SSArgumentOutOfRangeException("qubitB", "Two-qubit gate needs two distinct qubits, got {0} twice.".format(qubitA))
        u = np.asarray(u, dtype=complex)
        if (u.shape != (4, 4)):
            raise SSArgumentOutOfRangeException("u", "Expected a 4x4 matrix, got shape {0}.".format(u.shape))

        psi = self.Tensor()
        out = np.tensordot(u.reshape(2, 2, 2, 2), psi, axes=([2, 3], [axisA, axisB]))
        self._fAmplitudes = np.ascontiguousarray(np.moveaxis(out, [0, 1], [axisA, axisB])).reshape(-1)
        return self


    def ApplyDiagonal(self, phases:np.ndarray) -> 'SSStateVector':
        """
        Multiplies every amplitude by the matching element of a diagonal (length 2^N).
        """
        self._fAmplitudes *= phases
        return self


    def ApplyAll1Q(self, u:np.ndarray) -> 'SSStateVector':
        """
        Applies the same single-qubit unitary to every qubit.
        """
        for qubit in range(1, self._fNumQubits + 1):
            self.Apply1Q(qubit, u)
        return self


    def Inner(self, other:'SSStateVector') -> complex:
        """
        Returns <self|other>, conjugating this state.

        Raises:
            SSArgumentOutOfRangeException:
                The states have a different number of qubits.
        """
        if (other is None):
            raise SSArgumentNullException("other")
        if (other.NumQubits != self._fNumQubits):
            raise SSArgumentOutOfRangeException("other", "State sizes differ ({0} vs {1} qubits).".format(self._fNumQubits, other.NumQubits))
        return complex(np.vdot(self._fAmplitudes, other.Amplitudes))


    def Norm(self) -> float:
        """
        Returns the Euclidean norm of the amplitudes.
        """
        return float(np.linalg.norm(self._fAmplitudes))


    def Normalize(self) -> 'SSStateVector':
        """
        Rescales the amplitudes to unit norm.
        """
        norm:float = self.Norm()
        if (norm == 0.0):
            raise SSArgumentOutOfRangeException("state", "Cannot normalize the zero vector.")
        self._fAmplitudes /= norm
        return self


    def Probabilities(self) -> np.ndarray:
        """
        Returns the Born-rule probabilities of the computational basis states.
        """
        probs = np.abs(self._fAmplitudes) ** 2
        return probs / probs.sum()


    def ToDictionary(self) -> dict:
        """
        Returns the json record {"n_qubits": N, "amplitudes": [[re, im], ...]}.
        """
        return {
            "n_qubits": self._fNumQubits,
            "amplitudes": np.stack([self._fAmplitudes.real, self._fAmplitudes.imag], axis=1).tolist(),
        }


    @staticmethod
    def FromDictionary(record:dict) -> 'SSStateVector':
        """
        Creates a state from a json record produced by ToDictionary.

        Raises:
            SSConfigurationException:
                The record is missing a field or has the wrong layout.
        """
        try:
            nQubits:int = int(record["n_qubits"])
            pairs = np.asarray(record["amplitudes"], dtype=float)
        except (KeyError, TypeError, ValueError) as ex:
            raise SSConfigurationException("Invalid state record: {0}".format(ex)) from ex
        if (pairs.ndim != 2) or (pairs.shape[1] != 2):
            raise SSConfigurationException("Invalid state record: amplitudes must be [re, im] pairs.")
        return SSStateVector(nQubits, pairs[:, 0] + 1j * pairs[:, 1], copy=False)


    def SaveToFile(self, fileName:str, provenance:dict=None) -> None:
        """
        Writes the state to a json file (lossless: floats are written with full precision).

        Args:
            fileName (str):
                Path of the json file.
            provenance (dict):
                Extra keys (config hash, seed) stored next to the state record.
                LoadFromFile ignores them.
        """
        if (fileName is None):
            raise SSArgumentNullException("fileName")
        record:dict = dict(provenance or {})
        record.update(self.ToDictionary())
        with open(fileName, "w", encoding="utf-8") as writer:
            json.dump(record, writer)


    @staticmethod
    def LoadFromFile(fileName:str) -> 'SSStateVector':
        """
        Reads a state from a json file written by SaveToFile.

        Raises:
            SSConfigurationException:
                The file does not exist or is not a valid state record.
        """
        if (fileName is None):
            raise SSArgumentNullException("fileName")
        try:
            with open(fileName, "r", encoding="utf-8") as reader:
                record = json.load(reader)
        except (OSError, json.JSONDecodeError) as ex:
            raise SSConfigurationException("Could not load state: {0}".format(ex), fileName) from ex
        return SSStateVector.FromDictionary(record)
