# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import unittest

import numpy as np
from scipy.linalg import expm
from scipy.stats import unitary_group

# our package imports.
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.ssgates import SSGates
from spinsqueezepython.ssstatevector import SSStateVector

# import classes used for test scenarios.
from testClassDefinitions import SSTestHelper, SSTempFolderTestCase


class Test_Gates(unittest.TestCase):
    """
    Test SSGates constructors.
    """

    def test_FsimMatchesGenerator(self):
        """
        FSIM(theta, phi) equals exp(-i theta (XX + YY) / 2) followed by the |11> phase.
        """
        theta, phi = 0.731, -1.214
        xxyy = np.kron(SSGates.PAULI_X, SSGates.PAULI_X) + np.kron(SSGates.PAULI_Y, SSGates.PAULI_Y)
        expected = expm(-1j * theta * xxyy / 2.0) @ np.diag([1, 1, 1, np.exp(-1j * phi)])
        np.testing.assert_allclose(SSGates.Fsim(theta, phi), expected, atol=1e-12)


    def test_PauliCommutation(self):
        """
        [sigma^x, sigma^y] = 2i sigma^z in the library basis.
        """
        x, y, z = SSGates.PAULI_X, SSGates.PAULI_Y, SSGates.PAULI_Z
        np.testing.assert_allclose(x @ y - y @ x, 2j * z, atol=1e-15)


    def test_RotationsAreUnitary(self):
        self.assertTrue(SSGates.IsUnitary(SSGates.RotationZXZ(0.3, -1.1, 2.4)))
        self.assertTrue(SSGates.IsUnitary(SSGates.Fsim(1.3, 0.2)))
        np.testing.assert_allclose(SSGates.RotationZ(0.4), expm(-1j * 0.4 * SSGates.PAULI_Z), atol=1e-12)
        np.testing.assert_allclose(SSGates.RotationX(0.4), expm(-1j * 0.4 * SSGates.PAULI_X), atol=1e-12)


    def test_AxisRotationToZ(self):
        """
        The readout rotation maps n.sigma onto sigma^z.
        """
        n = np.array([0.3, -0.5, 0.8])
        n /= np.linalg.norm(n)
        u = SSGates.AxisRotationToZ(n)
        nsigma = n[0] * SSGates.PAULI_X + n[1] * SSGates.PAULI_Y + n[2] * SSGates.PAULI_Z
        np.testing.assert_allclose(u @ nsigma @ u.conj().T, SSGates.PAULI_Z, atol=1e-12)


    def test_CheckUnitaryRejects(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSGates.CheckUnitary(np.ones((4, 4)), "u", 4)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSGates.CheckUnitary(np.eye(2), "u", 4)


class Test_StateVector(SSTempFolderTestCase):
    """
    Test SSStateVector gate application and persistence.
    """

    def test_ZeroStateAndProduct(self):
        zero = SSStateVector.ZeroState(3)
        self.assertEqual(zero.Dimension, 8)
        self.assertEqual(zero.Amplitudes[0], 1.0)

        # qubit 2 in |1> sets bit 1.
        product = SSStateVector.ProductState([[1, 0], [0, 1], [1, 0]])
        self.assertAlmostEqual(abs(product.Amplitudes[2]), 1.0, places=15)


    def test_Apply1QMatchesDense(self):
        """
        In-place single-qubit gates agree with the dense Kronecker matrices.
        """
        n:int = 4
        state = SSTestHelper.RandomState(n, 11)
        u = unitary_group.rvs(2, random_state=3)
        for qubit in range(1, n + 1):
            expected = SSGates.DenseSingle(n, qubit, u) @ state.Amplitudes
            actual = state.Copy().Apply1Q(qubit, u).Amplitudes
            np.testing.assert_allclose(actual, expected, atol=1e-12)


    def test_Apply2QMatchesDense(self):
        """
        Two-qubit gates on ordered (and wrapped) pairs agree with the dense matrices.
        """
        n:int = 4
        state = SSTestHelper.RandomState(n, 12)
        u = unitary_group.rvs(4, random_state=5)
        for qa, qb in ((1, 2), (2, 1), (1, 3), (4, 1), (4, 2)):
            expected = SSGates.DenseTwo(n, qa, qb, u) @ state.Amplitudes
            actual = state.Copy().Apply2Q(qa, qb, u).Amplitudes
            np.testing.assert_allclose(actual, expected, atol=1e-12)


    def test_Apply2QRejectsSameQubit(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSStateVector.ZeroState(3).Apply2Q(2, 2, np.eye(4))


    def test_QubitCountLimits(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSStateVector.ZeroState(0)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSStateVector.ZeroState(25)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSStateVector(2, np.ones(3))


    def test_NormalizeAndProbabilities(self):
        state = SSStateVector(2, np.array([1.0, 1.0j, 0.0, 1.0]))
        state.Normalize()
        self.assertAlmostEqual(state.Norm(), 1.0, places=14)
        np.testing.assert_allclose(state.Probabilities(), [1 / 3, 1 / 3, 0.0, 1 / 3], atol=1e-14)


    def test_SaveAndLoad(self):
        state = SSTestHelper.RandomState(5, 21)
        fileName:str = self.TempPath("state.json")
        state.SaveToFile(fileName)
        loaded = SSStateVector.LoadFromFile(fileName)
        self.assertEqual(loaded.NumQubits, 5)
        np.testing.assert_array_equal(loaded.Amplitudes, state.Amplitudes)


if __name__ == '__main__':
    unittest.main()
