"""
Module: ssentanglementpower.py

Entanglement power of two-qubit gates: the average linear entropy
E = 1 - Tr(rho_1^2) a gate produces from uniformly random product inputs.
"""

# external package imports.
import numpy as np

# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssgates import SSGates

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSEntanglementPower:
    """
    Entanglement power estimates (static methods only).

    Threadsafety:
        All members are pure given their seeds.
    """

    @staticmethod
    def LinearEntropy(psi:np.ndarray) -> np.ndarray:
        """
        Returns 1 - Tr(rho_1^2) of two-qubit states.

        Args:
            psi (np.ndarray):
                One state (shape (4,)) or a batch (shape (n, 4)); index 2a + b, with a
                the first qubit.

        Returns:
            A scalar or an array of linear entropies.
        """
        psi = np.asarray(psi, dtype=complex)
        m = psi.reshape(psi.shape[:-1] + (2, 2))
        rho = m @ np.conj(np.swapaxes(m, -1, -2))
        purity = np.sum(np.abs(rho) ** 2, axis=(-2, -1))
        return 1.0 - purity


    @staticmethod
    def RandomQubitStates(nSamples:int, rng:np.random.Generator) -> np.ndarray:
        """
        Returns nSamples Bloch-sphere-uniform single-qubit states, shape (n, 2).
        """
        z = rng.standard_normal((int(nSamples), 2)) + 1j * rng.standard_normal((int(nSamples), 2))
        return z / np.linalg.norm(z, axis=1, keepdims=True)


    @staticmethod
    def MonteCarlo(u:np.ndarray, nSamples:int=100000, seed=0) -> tuple:
        """
        Estimates the entanglement power of a two-qubit gate.

        Args:
            u (np.ndarray):
                4x4 unitary.
            nSamples (int):
                Number of random product inputs (>= 2).
            seed (object):
                Seed or numpy Generator.

        Returns:
            A (mean, standard error) tuple.

        Raises:
            SSArgumentOutOfRangeException:
                The gate is not a 4x4 unitary, or fewer than 2 samples were requested.
        """
        u = SSGates.CheckUnitary(u, "u", 4)
        if (nSamples is None) or (nSamples < 2):
            raise SSArgumentOutOfRangeException("nSamples", "At least 2 samples are required, got {0}.".format(nSamples))
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        first = SSEntanglementPower.RandomQubitStates(nSamples, rng)
        second = SSEntanglementPower.RandomQubitStates(nSamples, rng)
        inputs = np.einsum("na,nb->nab", first, second).reshape(int(nSamples), 4)
        entropies = SSEntanglementPower.LinearEntropy(inputs @ u.T)
        return float(np.mean(entropies)), float(np.std(entropies, ddof=1) / np.sqrt(nSamples))


    @staticmethod
    def Formula(theta:float, phi:float) -> float:
        """
        Returns the closed-form FSIM entanglement power as commonly printed,
        -cos(2 theta)(cos(2 theta) + cos(phi)) / 18 + 1/6.

        This expression gives 1/18 at the identity (theta = phi = 0), where the
        Monte Carlo estimate is 0; use Report to see both side by side.
        """
        c:float = np.cos(2.0 * theta)
        return float(-c * (c + np.cos(phi)) / 18.0 + 1.0 / 6.0)


    @staticmethod
    def Report(theta:float, phi:float, nSamples:int=100000, seed=0) -> dict:
        """
        Returns the closed-form value and the Monte Carlo estimate of FSIM(theta, phi).

        Returns:
            A dictionary {theta, phi, formula, mc_mean, mc_stderr, discrepancy,
            discrepancy_sigma}, with discrepancy = formula - mc_mean.
        """
        mean, stderr = SSEntanglementPower.MonteCarlo(SSGates.Fsim(theta, phi), nSamples, seed)
        formula:float = SSEntanglementPower.Formula(theta, phi)
        discrepancy:float = formula - mean
        return {
            "theta": float(theta),
            "phi": float(phi),
            "formula": formula,
            "mc_mean": mean,
            "mc_stderr": stderr,
            "discrepancy": discrepancy,
            "discrepancy_sigma": abs(discrepancy) / stderr if (stderr > 0) else float("inf"),
        }
