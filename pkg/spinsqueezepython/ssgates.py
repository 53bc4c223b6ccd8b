"""
Module: ssgates.py

Single- and two-qubit gate constructors.

All matrices are written in the basis convention used throughout the library:
|0> is the eigenstate of sigma^z with eigenvalue -1, so that

    sigma^x = [[0, 1], [1, 0]]
    sigma^y = [[0, i], [-i, 0]]
    sigma^z = [[-1, 0], [0, 1]]

which keeps the Pauli algebra [sigma^x, sigma^y] = 2i sigma^z intact and gives
<J_z> = -N/2 for |0...0>.  Two-qubit matrices use the basis
{|00>, |01>, |10>, |11>}, with the first ket belonging to the first qubit
argument of SSStateVector.Apply2Q.
"""

# external package imports.
import numpy as np

# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSGates:
    """
    Gate constructors (static methods only).

    Threadsafety:
        All members of this class are thread-safe; every call returns a new array.
    """

    IDENTITY2:np.ndarray = np.eye(2, dtype=complex)
    """ 2x2 identity. """

    PAULI_X:np.ndarray = np.array([[0, 1], [1, 0]], dtype=complex)
    """ sigma^x in the library basis. """

    PAULI_Y:np.ndarray = np.array([[0, 1j], [-1j, 0]], dtype=complex)
    """ sigma^y in the library basis. """

    PAULI_Z:np.ndarray = np.array([[-1, 0], [0, 1]], dtype=complex)
    """ sigma^z in the library basis (|0> has eigenvalue -1). """

    SWAP:np.ndarray = np.array([[1, 0, 0, 0],
                                [0, 0, 1, 0],
                                [0, 1, 0, 0],
                                [0, 0, 0, 1]], dtype=complex)
    """ Two-qubit swap. """

    CNOT:np.ndarray = np.array([[1, 0, 0, 0],
                                [0, 1, 0, 0],
                                [0, 0, 0, 1],
                                [0, 0, 1, 0]], dtype=complex)
    """ Controlled-not with the first qubit as control. """


    @staticmethod
    def RotationZ(omega:float) -> np.ndarray:
        """
        Returns exp(-i sigma^z omega) = diag(exp(i omega), exp(-i omega)).
        """
        return np.array([[np.exp(1j * omega), 0], [0, np.exp(-1j * omega)]], dtype=complex)


    @staticmethod
    def RotationX(omega:float) -> np.ndarray:
        """
        Returns exp(-i sigma^x omega).
        """
        c:float = np.cos(omega)
        s:float = np.sin(omega)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


    @staticmethod
    def RotationZXZ(omega1:float, omega2:float, omega3:float) -> np.ndarray:
        """
        Returns the general single-qubit rotation
        exp(-i sigma^z omega1) exp(-i sigma^x omega2) exp(-i sigma^z omega3).

        Args:
            omega1 (float):
                Angle of the outer (last applied) Z rotation, in radians.
            omega2 (float):
                Angle of the X rotation, in radians.
            omega3 (float):
                Angle of the inner (first applied) Z rotation, in radians.

        Returns:
            A 2x2 unitary matrix.
        """
        return SSGates.RotationZ(omega1) @ SSGates.RotationX(omega2) @ SSGates.RotationZ(omega3)


    @staticmethod
    def Fsim(theta:float, phi:float) -> np.ndarray:
        """
        Returns the FSIM(theta, phi) gate.

        Args:
            theta (float):
                Swap angle, in radians.
            phi (float):
                Controlled-phase angle, in radians.

        Returns:
            A 4x4 unitary matrix: 1 on |00>, exp(-i phi) on |11>, and the central
            block [[cos(theta), -i sin(theta)], [-i sin(theta), cos(theta)]].
        """
        c:float = np.cos(theta)
        s:float = np.sin(theta)
        return np.array([[1, 0, 0, 0],
                         [0, c, -1j * s, 0],
                         [0, -1j * s, c, 0],
                         [0, 0, 0, np.exp(-1j * phi)]], dtype=complex)


    @staticmethod
    def AxisRotationToZ(direction:np.ndarray) -> np.ndarray:
        """
        Returns a single-qubit unitary U with U (n.sigma) U^dagger = sigma^z.

        Args:
            direction (np.ndarray):
                Unit 3-vector n.

        Returns:
            A 2x2 unitary matrix whose rows are the (conjugated) eigenvectors of
            n.sigma for the eigenvalues -1 and +1, in that order.

        After rotating every qubit with U, a computational basis measurement of
        bit value b on a qubit corresponds to the eigenvalue 2b - 1 of n.sigma.
        """
        n = np.asarray(direction, dtype=float)
        nsigma:np.ndarray = n[0] * SSGates.PAULI_X + n[1] * SSGates.PAULI_Y + n[2] * SSGates.PAULI_Z
        evals, evecs = np.linalg.eigh(nsigma)    # ascending: -1, +1.
        return evecs.conj().T


    @staticmethod
    def IsUnitary(u:np.ndarray, tolerance:float=1e-12) -> bool:
        """
        Tests if a square matrix is unitary within a tolerance.
        """
        u = np.asarray(u)
        if (u.ndim != 2) or (u.shape[0] != u.shape[1]):
            return False
        return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tolerance)


    @staticmethod
    def CheckUnitary(u:np.ndarray, paramName:str, shape:int, tolerance:float=1e-10) -> np.ndarray:
        """
        Validates a gate matrix and returns it as a complex array.

        Raises:
            SSArgumentOutOfRangeException:
                The matrix does not have the expected shape or is not unitary.
        """
        arr = np.asarray(u, dtype=complex)
        if (arr.shape != (shape, shape)):
            raise SSArgumentOutOfRangeException(paramName, "Expected a {0}x{0} matrix, got shape {1}.".format(shape, arr.shape))
        if (not SSGates.IsUnitary(arr, tolerance)):
            raise SSArgumentOutOfRangeException(paramName, "Matrix is not unitary.")
        return arr


    @staticmethod
    def Kron(*matrices) -> np.ndarray:
        """
        Returns the Kronecker product of the supplied matrices, left to right.
        """
        result = np.array([[1.0 + 0.0j]])
        for m in matrices:
            result = np.kron(result, m)
        return result


    @staticmethod
    def DenseSingle(nQubits:int, qubit:int, u:np.ndarray) -> np.ndarray:
        """
        Returns the dense 2^N x 2^N matrix of a single-qubit gate on the given qubit
        (qubit j acts on bit j-1 of the basis index).  Intended for small N only.
        """
        factors = [SSGates.IDENTITY2] * nQubits
        factors[nQubits - qubit] = np.asarray(u, dtype=complex)    # most significant bit first.
        return SSGates.Kron(*factors)


    @staticmethod
    def DenseTwo(nQubits:int, qubitA:int, qubitB:int, u:np.ndarray) -> np.ndarray:
        """
        Returns the dense 2^N x 2^N matrix of a two-qubit gate, where the first
        ket of the gate basis belongs to qubitA.  Intended for small N only.
        """
        dim:int = 2 ** nQubits
        u = np.asarray(u, dtype=complex)
        dense = np.zeros((dim, dim), dtype=complex)
        bitA:int = qubitA - 1
        bitB:int = qubitB - 1
        for col in range(dim):
            a:int = (col >> bitA) & 1
            b:int = (col >> bitB) & 1
            rest:int = col & ~((1 << bitA) | (1 << bitB))
            for a2 in range(2):
                for b2 in range(2):
                    row:int = rest | (a2 << bitA) | (b2 << bitB)
                    dense[row, col] += u[2 * a2 + b2, 2 * a + b]
        return dense
