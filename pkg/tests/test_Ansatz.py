# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import unittest

import numpy as np
from scipy.linalg import expm

# our package imports.
from spinsqueezepython.ssansatz import SSAnsatz
from spinsqueezepython.ssansatzfamily import SSAnsatzFamily
from spinsqueezepython.ssansatzspec import SSAnsatzSpec
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.ssboundary import SSBoundary
from spinsqueezepython.ssdynamics import SSDynamics
from spinsqueezepython.ssgates import SSGates

# import classes used for test scenarios.
from testClassDefinitions import SSTestHelper


def _RandomParameters(spec:SSAnsatzSpec, seed:int) -> np.ndarray:
    return np.random.default_rng(seed).uniform(-np.pi, np.pi, spec.ParamCount)


class Test_AnsatzSpec(unittest.TestCase):
    """
    Test SSAnsatzSpec validation and parameter counts.
    """

    def test_ParamCounts(self):
        expected:dict = {
            SSAnsatzFamily.ALA_SHARED: 30,
            SSAnsatzFamily.ALA_GLOBAL: 16,
            SSAnsatzFamily.ALA_SITE_DEPENDENT: 114,
            SSAnsatzFamily.ALA_LAYER_ENTANGLERS: 36,
            SSAnsatzFamily.ANALOG_HEA: 18,
            SSAnsatzFamily.ANALOG_HEA_ISING: 20,
        }
        for family, count in expected.items():
            spec = SSAnsatzSpec(family, SSBoundary.PBC, 8, 2)
            self.assertEqual(spec.ParamCount, count, family.name)
            self.assertEqual(len(SSAnsatz.ParameterLayout(spec)), count, family.name)


    def test_InvalidSpecs(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatzSpec("ALA_SHARED", "PBC", 7, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatzSpec("ALA_SHARED", "PBC", 26, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatzSpec("ALA_SHARED", "PBC", 8, 0)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatzSpec("ANALOG_HEA", "OBC", 8, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatzSpec("NOT_A_FAMILY", "PBC", 8, 1)


    def test_DictionaryDefaultsToPeriodic(self):
        spec = SSAnsatzSpec.FromDictionary({"family": "ala_global", "n_qubits": 6, "depth": 3})
        self.assertEqual(spec, SSAnsatzSpec(SSAnsatzFamily.ALA_GLOBAL, SSBoundary.PBC, 6, 3))
        self.assertEqual(spec.ToDictionary()["boundary"], "PBC")
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatzSpec.FromDictionary({"family": "ALA_GLOBAL", "depth": 3})


class Test_Ansatz(unittest.TestCase):
    """
    Test the circuit families.
    """

    def test_SharedLayout(self):
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.PBC, 10, 1)
        labels = [d.Label for d in SSAnsatz.ParameterLayout(spec)]
        self.assertEqual(len(labels), 18)
        self.assertEqual(labels[0], "init[0].odd.omega1")
        self.assertEqual(labels[3], "init[0].even.omega2")
        self.assertEqual(labels[4], "entangler[0].all.theta")
        self.assertEqual(labels[5], "entangler[0].all.phi")
        self.assertEqual(labels[6], "rotation[1].odd.omega1")
        self.assertEqual(labels[17], "rotation[2].even.omega3")
        self.assertEqual(SSAnsatz.EntanglerIndices(spec), [4, 5])


    def test_EntanglerPairs(self):
        self.assertEqual(SSAnsatz.EntanglerPairs(6, 1, SSBoundary.PBC), [(1, 2), (3, 4), (5, 6)])
        self.assertEqual(SSAnsatz.EntanglerPairs(6, 2, SSBoundary.PBC), [(2, 3), (4, 5), (6, 1)])
        self.assertEqual(SSAnsatz.EntanglerPairs(6, 2, SSBoundary.OBC), [(2, 3), (4, 5)])


    def test_BondIndex(self):
        self.assertEqual(SSAnsatz.BondIndex((3, 4), 6), 3)
        self.assertEqual(SSAnsatz.BondIndex((6, 1), 6), 6)
        for pair in ((4, 3), (6, 7), (2, 4), (0, 1)):
            with self.assertRaises(SSArgumentOutOfRangeException):
                SSAnsatz.BondIndex(pair, 6)


    def test_BuildStateMatchesDenseCircuit(self):
        """
        The shared family with open boundaries agrees with a dense matrix product.
        """
        n:int = 4
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.OBC, n, 1)
        x = _RandomParameters(spec, 42)

        def layer(odd:np.ndarray, even:np.ndarray) -> np.ndarray:
            dense = np.eye(2 ** n, dtype=complex)
            for q in range(1, n + 1):
                dense = SSGates.DenseSingle(n, q, odd if (q % 2 == 1) else even) @ dense
            return dense

        fsim = SSGates.Fsim(x[4], x[5])
        psi = np.zeros(2 ** n, dtype=complex)
        psi[0] = 1.0
        psi = layer(SSGates.RotationZXZ(x[0], x[1], 0.0), SSGates.RotationZXZ(x[2], x[3], 0.0)) @ psi
        psi = SSGates.DenseTwo(n, 1, 2, fsim) @ psi
        psi = SSGates.DenseTwo(n, 3, 4, fsim) @ psi
        psi = layer(SSGates.RotationZXZ(*x[6:9]), SSGates.RotationZXZ(*x[9:12])) @ psi
        psi = SSGates.DenseTwo(n, 2, 3, fsim) @ psi
        psi = layer(SSGates.RotationZXZ(*x[12:15]), SSGates.RotationZXZ(*x[15:18])) @ psi

        state = SSAnsatz.BuildState(spec, x)
        np.testing.assert_allclose(state.Amplitudes, psi, atol=1e-12)
        self.assertAlmostEqual(state.Norm(), 1.0, places=12)


    def test_AnalogCircuitsMatchDenseEvolution(self):
        """
        Each analog layer applies the Ising phase, then the XY evolution, then the rotations,
        with the (N, 1) bond in both Hamiltonians.
        """
        n:int = 4
        zz = np.kron(SSGates.PAULI_Z, SSGates.PAULI_Z)
        ising = sum(SSGates.DenseTwo(n, q, q % n + 1, zz) for q in range(1, n + 1))
        hopping = SSDynamics.DenseXYHamiltonian(n)

        def layer(odd:np.ndarray, even:np.ndarray) -> np.ndarray:
            dense = np.eye(2 ** n, dtype=complex)
            for q in range(1, n + 1):
                dense = SSGates.DenseSingle(n, q, odd if (q % 2 == 1) else even) @ dense
            return dense

        for seed, family in enumerate((SSAnsatzFamily.ANALOG_HEA, SSAnsatzFamily.ANALOG_HEA_ISING)):
            spec = SSAnsatzSpec(family, SSBoundary.PBC, n, 1)
            x = _RandomParameters(spec, 50 + seed)
            psi = np.zeros(2 ** n, dtype=complex)
            psi[0] = 1.0
            psi = layer(SSGates.RotationZXZ(x[0], x[1], 0.0), SSGates.RotationZXZ(x[2], x[3], 0.0)) @ psi
            if (family == SSAnsatzFamily.ANALOG_HEA_ISING):
                psi = expm(-1j * x[11] * ising) @ psi
            psi = expm(-1j * x[10] * hopping) @ psi
            psi = layer(SSGates.RotationZXZ(*x[4:7]), SSGates.RotationZXZ(*x[7:10])) @ psi

            state = SSAnsatz.BuildState(spec, x)
            np.testing.assert_allclose(state.Amplitudes, psi, rtol=0.0, atol=1e-9, err_msg=family.name)
            self.assertAlmostEqual(abs(np.vdot(psi, state.Amplitudes)) ** 2, 1.0, delta=1e-9, msg=family.name)


    def test_RotationAnglesArePeriodic(self):
        """
        Shifting any single-qubit angle by a full turn leaves the state unchanged.
        """
        for family in (SSAnsatzFamily.ALA_SHARED, SSAnsatzFamily.ANALOG_HEA):
            spec = SSAnsatzSpec(family, SSBoundary.PBC, 4, 2)
            x = _RandomParameters(spec, 60)
            expected = SSAnsatz.BuildState(spec, x).Amplitudes
            for d in SSAnsatz.ParameterLayout(spec):
                if d.Block not in ("init", "rotation"):
                    continue
                for shift in (2.0 * np.pi, -2.0 * np.pi):
                    y = x.copy()
                    y[d.Index] += shift
                    np.testing.assert_allclose(SSAnsatz.BuildState(spec, y).Amplitudes, expected,
                                               rtol=0.0, atol=1e-9, err_msg=d.Label)


    def test_IsingWithoutCouplingIsPlainAnalog(self):
        n:int = 4
        p:int = 2
        plain = SSAnsatzSpec(SSAnsatzFamily.ANALOG_HEA, SSBoundary.PBC, n, p)
        ising = plain.With(family=SSAnsatzFamily.ANALOG_HEA_ISING)
        x = _RandomParameters(plain, 61)
        y = np.zeros(ising.ParamCount)
        y[:4 + 6 * p] = x[:4 + 6 * p]
        y[4 + 6 * p::2] = x[4 + 6 * p:]
        np.testing.assert_allclose(SSAnsatz.BuildState(ising, y).Amplitudes, SSAnsatz.BuildState(plain, x).Amplitudes,
                                   rtol=0.0, atol=1e-12)


    def test_TranslationSymmetry(self):
        """
        Under periodic boundaries the shared family commutes with a shift by two sites.
        """
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.PBC, 6, 2)
        state = SSAnsatz.BuildState(spec, _RandomParameters(spec, 3))
        shifted = SSAnsatz.TranslateState(state, 2)
        np.testing.assert_allclose(shifted.Amplitudes, state.Amplitudes, atol=1e-12)


    def test_EmbeddingsPreserveState(self):
        """
        Restricted parameter vectors embedded into a general family build the same state.
        """
        pairs = (
            (SSAnsatzFamily.ALA_GLOBAL, SSAnsatzFamily.ALA_SHARED),
            (SSAnsatzFamily.ALA_GLOBAL, SSAnsatzFamily.ALA_SITE_DEPENDENT),
            (SSAnsatzFamily.ALA_SHARED, SSAnsatzFamily.ALA_SITE_DEPENDENT),
            (SSAnsatzFamily.ALA_SHARED, SSAnsatzFamily.ALA_LAYER_ENTANGLERS),
            (SSAnsatzFamily.ANALOG_HEA, SSAnsatzFamily.ANALOG_HEA_ISING),
        )
        for seed, (src, dst) in enumerate(pairs):
            fromSpec = SSAnsatzSpec(src, SSBoundary.PBC, 4, 2)
            toSpec = fromSpec.With(family=dst)
            x = _RandomParameters(fromSpec, seed)
            y = SSAnsatz.EmbedParameters(fromSpec, x, toSpec)
            self.assertEqual(y.shape[0], toSpec.ParamCount)
            fidelity = SSTestHelper.Fidelity(SSAnsatz.BuildState(fromSpec, x), SSAnsatz.BuildState(toSpec, y))
            self.assertAlmostEqual(fidelity, 1.0, places=9, msg="{0} -> {1}".format(src.name, dst.name))


    def test_UnsupportedEmbedding(self):
        fromSpec = SSAnsatzSpec(SSAnsatzFamily.ALA_SITE_DEPENDENT, SSBoundary.PBC, 4, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatz.EmbedParameters(fromSpec, np.zeros(fromSpec.ParamCount), fromSpec.With(family=SSAnsatzFamily.ALA_GLOBAL))


    def test_BondGatesReplaceFsim(self):
        """
        Per-bond gates equal to the shared FSIM gate reproduce the plain circuit.
        """
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.PBC, 6, 1)
        x = _RandomParameters(spec, 9)
        bondGates = [SSGates.Fsim(x[4], x[5])] * spec.NumQubits
        np.testing.assert_allclose(SSAnsatz.BuildState(spec, x, bondGates).Amplitudes,
                                   SSAnsatz.BuildState(spec, x).Amplitudes, atol=1e-12)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatz.BuildState(spec, x, bondGates[:3])


    def test_ParameterLengthChecked(self):
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_GLOBAL, SSBoundary.PBC, 4, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSAnsatz.BuildState(spec, np.zeros(spec.ParamCount + 1))


if __name__ == '__main__':
    unittest.main()
