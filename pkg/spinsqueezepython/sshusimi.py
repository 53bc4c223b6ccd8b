"""
Module: sshusimi.py

Husimi Q function Q(Theta, Phi) = |<Theta, Phi|psi>|^2 over spin coherent states
|Theta, Phi> = prod_j (cos(Theta/2)|0>_j + sin(Theta/2) e^(-i Phi)|1>_j).
"""

# external package imports.
import numpy as np

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .sshusimigrid import SSHusimiGrid
from .ssstatevector import SSStateVector

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSHusimi:
    """
    Husimi Q grids (static methods only).

    Threadsafety:
        All members are pure.
    """

    @staticmethod
    def SymmetricSums(state:SSStateVector) -> np.ndarray:
        """
        Returns s_k, the sum of the amplitudes of all basis states with k qubits in |1>.
        """
        n:int = state.NumQubits
        popcounts = SSStateVector.PopCounts(n)
        amplitudes = state.Amplitudes
        return np.bincount(popcounts, weights=amplitudes.real, minlength=n + 1) \
            + 1j * np.bincount(popcounts, weights=amplitudes.imag, minlength=n + 1)


    @staticmethod
    def Husimi(state:SSStateVector, nTheta:int=91, nPhi:int=180) -> SSHusimiGrid:
        """
        Computes the Husimi Q function of a state on a regular grid.

        Args:
            state (SSStateVector):
                State to visualize.
            nTheta (int):
                Number of polar angles, uniform on [0, pi] (>= 2).
            nPhi (int):
                Number of azimuthal angles, uniform on [0, 2 pi) (>= 2).

        Returns:
            The SSHusimiGrid; values lie in [0, 1] for a normalized state.

        Raises:
            SSArgumentOutOfRangeException:
                A grid size is below 2.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        if (nTheta is None) or (nTheta < 2):
            raise SSArgumentOutOfRangeException("nTheta", "At least 2 polar angles are required, got {0}.".format(nTheta))
        if (nPhi is None) or (nPhi < 2):
            raise SSArgumentOutOfRangeException("nPhi", "At least 2 azimuthal angles are required, got {0}.".format(nPhi))

        n:int = state.NumQubits
        thetas = np.linspace(0.0, np.pi, int(nTheta))
        phis = np.linspace(0.0, 2.0 * np.pi, int(nPhi), endpoint=False)
        k = np.arange(n + 1)

        # <Theta, Phi|psi> = sum_k cos^(N-k)(Theta/2) sin^k(Theta/2) e^(i Phi k) s_k.
        radial = np.power.outer(np.cos(thetas / 2.0), n - k) * np.power.outer(np.sin(thetas / 2.0), k)
        weighted = radial * SSHusimi.SymmetricSums(state)[np.newaxis, :]
        phases = np.exp(1j * np.outer(k, phis))
        values = np.abs(weighted @ phases) ** 2
        return SSHusimiGrid(thetas, phis, values)
