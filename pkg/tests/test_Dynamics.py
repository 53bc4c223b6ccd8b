# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import unittest

import numpy as np
from scipy.linalg import expm

# our package imports.
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.ssdynamics import SSDynamics
from spinsqueezepython.ssevolutionconfig import SSEvolutionConfig
from spinsqueezepython.ssgates import SSGates
from spinsqueezepython.ssnumericalexception import SSNumericalException
from spinsqueezepython.ssstatevector import SSStateVector

# import classes used for test scenarios.
from testClassDefinitions import SSTestHelper


class Test_Dynamics(unittest.TestCase):
    """
    Test the analog entangler propagators.
    """

    def test_HamiltonianAction(self):
        n:int = 5
        state = SSTestHelper.RandomState(n, 2)
        H = SSDynamics.DenseXYHamiltonian(n)
        np.testing.assert_allclose(H, H.conj().T, atol=1e-15)
        np.testing.assert_allclose(SSDynamics.ApplyXYHamiltonian(state.Amplitudes, n), H @ state.Amplitudes, atol=1e-12)


    def test_HamiltonianConservesExcitations(self):
        """
        The hopping term commutes with the total magnetization.
        """
        n:int = 4
        H = SSDynamics.DenseXYHamiltonian(n)
        _, _, jz = SSTestHelper.DenseCollective(n)
        np.testing.assert_allclose(H @ jz - jz @ H, 0.0, atol=1e-12)


    def test_KrylovMatchesExpm(self):
        """
        The Krylov propagator agrees with the dense matrix exponential.
        """
        n:int = 8
        H = SSDynamics.DenseXYHamiltonian(n)
        for t in (0.37, -1.2, 3.0):
            state = SSTestHelper.RandomState(n, 5)
            expected = expm(-1j * t * H) @ state.Amplitudes
            SSDynamics.ApplyXYEvolution(state, t)
            np.testing.assert_allclose(state.Amplitudes, expected, rtol=0.0, atol=1e-9)
            self.assertAlmostEqual(state.Norm(), 1.0, delta=1e-10)


    def test_EvolutionComposes(self):
        """
        Evolving for t1 and then t2 equals one evolution for t1 + t2.
        """
        first = SSTestHelper.RandomState(6, 11)
        second = first.Copy()
        SSDynamics.ApplyXYEvolution(first, 0.4)
        SSDynamics.ApplyXYEvolution(first, 0.9)
        SSDynamics.ApplyXYEvolution(second, 1.3)
        np.testing.assert_allclose(first.Amplitudes, second.Amplitudes, rtol=0.0, atol=1e-9)


    def test_EvolutionConservesMagnetization(self):
        n:int = 6
        _, _, jz = SSTestHelper.DenseCollective(n)
        state = SSTestHelper.RandomState(n, 12)
        before = np.real(np.vdot(state.Amplitudes, jz @ state.Amplitudes))
        SSDynamics.ApplyXYEvolution(state, 1.7)
        after = np.real(np.vdot(state.Amplitudes, jz @ state.Amplitudes))
        self.assertAlmostEqual(after, before, delta=1e-9)


    def test_AllZeroStateIsStationary(self):
        """
        The hopping terms annihilate |0...0>, so it is an eigenstate with eigenvalue 0.
        """
        state = SSStateVector.ZeroState(6)
        self.assertEqual(np.linalg.norm(SSDynamics.ApplyXYHamiltonian(state.Amplitudes, 6)), 0.0)
        SSDynamics.ApplyXYEvolution(state, 2.5)
        np.testing.assert_allclose(state.Amplitudes, SSStateVector.ZeroState(6).Amplitudes, rtol=0.0, atol=1e-12)


    def test_BasisBytes(self):
        self.assertEqual(SSDynamics.BasisBytes(24), 30 * 2 ** 24 * 16)
        self.assertEqual(SSDynamics.BasisBytes(4), 16 * 16 * 16)
        self.assertEqual(SSDynamics.BasisBytes(10, SSEvolutionConfig(krylovDim=8)), 8 * 1024 * 16)


    def test_ZeroTimeIsIdentity(self):
        state = SSTestHelper.RandomState(4, 6)
        before = state.Amplitudes.copy()
        SSDynamics.ApplyXYEvolution(state, 0.0)
        SSDynamics.ApplyZZEvolution(state, 0.0)
        np.testing.assert_array_equal(state.Amplitudes, before)


    def test_IsingMatchesExpm(self):
        n:int = 4
        zz = np.kron(SSGates.PAULI_Z, SSGates.PAULI_Z)
        H = sum(SSGates.DenseTwo(n, q, q % n + 1, zz) for q in range(1, n + 1))
        state = SSTestHelper.RandomState(n, 7)
        expected = expm(-1j * 0.8 * H) @ state.Amplitudes
        SSDynamics.ApplyZZEvolution(state, 0.8)
        np.testing.assert_allclose(state.Amplitudes, expected, atol=1e-12)


    def test_SubstepLimitRaises(self):
        """
        An unreachable tolerance with a single substep reports the failure with diagnostics.
        """
        state = SSTestHelper.RandomState(6, 8)
        cfg = SSEvolutionConfig(4, 1e-14, 1)
        with self.assertRaises(SSNumericalException) as context:
            SSDynamics.ApplyXYEvolution(state, 10.0, cfg)
        self.assertIn("substeps", context.exception.Diagnostics)


    def test_EvolutionConfigValidation(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSEvolutionConfig(krylovDim=3)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSEvolutionConfig(tolerance=0.0)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSEvolutionConfig(maxSubsteps=0)


if __name__ == '__main__':
    unittest.main()
