# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import unittest

import numpy as np
from scipy.integrate import trapezoid

# our package imports.
from spinsqueezepython.ssansatzfamily import SSAnsatzFamily
from spinsqueezepython.ssansatzspec import SSAnsatzSpec
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.ssaxis import SSAxis
from spinsqueezepython.ssboundary import SSBoundary
from spinsqueezepython.sscoherenterror import SSCoherentError
from spinsqueezepython.sscoherentfsimparams import SSCoherentFsimParams
from spinsqueezepython.sscollectivespin import SSCollectiveSpin
from spinsqueezepython.ssentanglementpower import SSEntanglementPower
from spinsqueezepython.ssexpressibility import SSExpressibility
from spinsqueezepython.ssgates import SSGates
from spinsqueezepython.sshusimi import SSHusimi
from spinsqueezepython.ssnoisestudy import SSNoiseStudy
from spinsqueezepython.ssobjective import SSObjective
from spinsqueezepython.ssoptimizer import SSOptimizer
from spinsqueezepython.ssoptimizerconfig import SSOptimizerConfig
from spinsqueezepython.ssshotestimator import SSShotEstimator
from spinsqueezepython.sssqueezingkind import SSSqueezingKind
from spinsqueezepython.ssstatevector import SSStateVector
from spinsqueezepython.sstwisting import SSTwisting
from spinsqueezepython.sstwistmodel import SSTwistModel

# import classes used for test scenarios.
from testClassDefinitions import SSTestHelper


class Test_Expressibility(unittest.TestCase):
    """
    Test the Haar reference and the divergence estimate.
    """

    def test_HaarMassesSumToOne(self):
        for n in (1, 4, 12):
            masses = SSExpressibility.HaarBinMasses(n, 75)
            self.assertAlmostEqual(float(masses.sum()), 1.0, places=12)
            self.assertTrue(np.all(masses >= 0.0))


    def test_HaarSamplesHaveSmallDivergence(self):
        rng = np.random.default_rng(0)
        fidelities = SSExpressibility.HaarFidelities(3, 20000, rng)
        result = SSExpressibility.FromFidelities(fidelities, 3, 75, seed=0)
        self.assertLess(result.KlDivergence, 0.02)
        self.assertEqual(result.NumSamples, 20000)
        self.assertEqual(len(result.HistogramRows()), 75)


    def test_ConstantFidelityIsInexpressive(self):
        """
        A circuit that always returns the same state puts every sample in the top bin.
        """
        result = SSExpressibility.FromFidelities(np.ones(1000), 2, 20)
        self.assertGreater(result.KlDivergence, 1.0)


    def test_Validation(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSExpressibility.FromFidelities([], 2)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSExpressibility.FromFidelities([0.5], 2, 5)
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_GLOBAL, SSBoundary.PBC, 2, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSExpressibility.Expressibility(spec, nSamples=999)


    def test_CircuitExpressibility(self):
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.PBC, 2, 1)
        first = SSExpressibility.Expressibility(spec, nSamples=1000, nBins=20, seed=3)
        second = SSExpressibility.Expressibility(spec, nSamples=1000, nBins=20, seed=3)
        self.assertEqual(first.KlDivergence, second.KlDivergence)
        self.assertGreaterEqual(first.KlDivergence, 0.0)
        self.assertEqual(first.NumSamples, 1000)


class Test_EntanglementPower(unittest.TestCase):
    """
    Test the Monte Carlo entanglement power.
    """

    def test_ReferenceGates(self):
        mean, _ = SSEntanglementPower.MonteCarlo(np.eye(4), 2000, seed=1)
        self.assertAlmostEqual(mean, 0.0, places=12)
        mean, _ = SSEntanglementPower.MonteCarlo(SSGates.SWAP, 2000, seed=1)
        self.assertAlmostEqual(mean, 0.0, places=12)
        mean, stderr = SSEntanglementPower.MonteCarlo(SSGates.CNOT, 40000, seed=2)
        self.assertLess(abs(mean - 2.0 / 9.0), 4.0 * stderr)


    def test_LinearEntropy(self):
        bell = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
        self.assertAlmostEqual(float(SSEntanglementPower.LinearEntropy(bell)), 0.5, places=14)
        self.assertAlmostEqual(float(SSEntanglementPower.LinearEntropy(np.array([1.0, 0, 0, 0]))), 0.0, places=14)


    def test_FormulaAndReport(self):
        self.assertAlmostEqual(SSEntanglementPower.Formula(0.0, 0.0), 1.0 / 18.0, places=15)
        report = SSEntanglementPower.Report(0.0, 0.0, 2000, seed=0)
        self.assertAlmostEqual(report["mc_mean"], 0.0, places=12)
        self.assertAlmostEqual(report["discrepancy"], 1.0 / 18.0, places=12)


    def test_Validation(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSEntanglementPower.MonteCarlo(np.ones((4, 4)), 100)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSEntanglementPower.MonteCarlo(np.eye(4), 1)


class Test_CoherentError(unittest.TestCase):
    """
    Test FSIM gates with coherent errors.
    """

    def test_ErrorFreeGate(self):
        params = SSCoherentFsimParams(0.4, 1.3)
        np.testing.assert_allclose(SSCoherentError.CoherentFsim(params), SSGates.Fsim(0.4, 1.3), atol=1e-15)
        self.assertAlmostEqual(SSCoherentError.ErrorMetric(SSGates.Fsim(0.4, 1.3), SSGates.Fsim(0.4, 1.3)), 0.0, places=14)


    def test_GlobalPhaseIgnored(self):
        u = SSGates.Fsim(0.9, -0.2)
        self.assertAlmostEqual(SSCoherentError.ErrorMetric(np.exp(0.7j) * u, u), 0.0, places=14)


    def test_SampledGatesHitTarget(self):
        params = SSCoherentError.SampleErrorGates(0.5, 0.3, 0.01, 4, seed=1)
        self.assertEqual(len(params), 4)
        target = SSGates.Fsim(0.5, 0.3)
        for p in params:
            self.assertAlmostEqual(p.AchievedR, 0.01, places=10)
            self.assertAlmostEqual(SSCoherentError.ErrorMetric(SSCoherentError.CoherentFsim(p), target), 0.01, places=10)
        again = SSCoherentError.SampleErrorGates(0.5, 0.3, 0.01, 4, seed=1)
        self.assertEqual([p.AsTuple() for p in params], [p.AsTuple() for p in again])


    def test_Validation(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSCoherentError.SampleErrorGates(0.5, 0.3, 0.5, 1)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSCoherentError.SampleErrorGates(0.5, 0.3, 0.01, -1)


class Test_Husimi(unittest.TestCase):
    """
    Test the Husimi Q function.
    """

    def test_CoherentStatePeak(self):
        grid = SSHusimi.Husimi(SSStateVector.ZeroState(5), 19, 36)
        self.assertAlmostEqual(grid.MaxValue, 1.0, places=12)
        self.assertEqual(grid.ArgMax()[0], 0.0)
        self.assertEqual(grid.Values.shape, (19, 36))
        self.assertEqual(len(grid.Rows()), 19 * 36)


    def test_Normalization(self):
        """
        (N + 1) / (4 pi) times the sphere integral of Q is one for symmetric states.
        """
        n:int = 6
        state = SSTwisting.TwistState(SSTwistModel.OAT, n, 0.3).ToStateVector()
        grid = SSHusimi.Husimi(state, 361, 60)
        integral = 2.0 * np.pi * trapezoid(grid.Values.mean(axis=1) * np.sin(grid.Thetas), grid.Thetas)
        self.assertAlmostEqual(integral * (n + 1) / (4.0 * np.pi), 1.0, places=4)
        self.assertTrue(np.all(grid.Values <= 1.0 + 1e-12))


    def test_Validation(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSHusimi.Husimi(SSStateVector.ZeroState(2), 1, 10)


class Test_ShotEstimator(unittest.TestCase):
    """
    Test squeezing estimates from simulated readouts.
    """

    def test_ExactMomentsReproduceLinearReport(self):
        state = SSTestHelper.RandomState(4, 50)
        axes = SSAxis.LinearAxes()
        moments = SSShotEstimator.ExactAxisMoments(state, axes, 2)
        estimate = SSShotEstimator.SqueezingFromAxisMoments(moments, axes, 4, SSSqueezingKind.LINEAR)
        exact = SSCollectiveSpin.Squeezing(state, SSSqueezingKind.LINEAR)
        np.testing.assert_allclose(estimate.Xi2, exact.Xi2, rtol=1e-9)


    def test_ExactMomentsReproduceNonlinearReport(self):
        state = SSTestHelper.RandomState(4, 51)
        axes = SSAxis.NonlinearAxes()
        moments = SSShotEstimator.ExactAxisMoments(state, axes, 4)
        estimate = SSShotEstimator.SqueezingFromAxisMoments(moments, axes, 4, SSSqueezingKind.NONLINEAR)
        exact = SSCollectiveSpin.Squeezing(state, SSSqueezingKind.NONLINEAR)
        np.testing.assert_allclose(estimate.Xi2, exact.Xi2, rtol=1e-6)


    def test_SampledEstimate(self):
        state = SSTwisting.TwistState(SSTwistModel.OAT, 6, 0.3).ToStateVector()
        exact = SSCollectiveSpin.Squeezing(state).Xi2
        report = SSShotEstimator.EstimateSqueezing(state, SSSqueezingKind.LINEAR, 20000, seed=9, bootstrapResamples=20)
        self.assertAlmostEqual(report.Xi2, exact, delta=0.1)
        self.assertTrue(np.isfinite(report.StandardError))
        again = SSShotEstimator.EstimateSqueezing(state, SSSqueezingKind.LINEAR, 20000, seed=9)
        self.assertEqual(report.Xi2, again.Xi2)


    def test_MinimumShots(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSShotEstimator.EstimateSqueezing(SSStateVector.ZeroState(2), SSSqueezingKind.LINEAR, 99, seed=0)


class Test_NoiseStudy(unittest.TestCase):
    """
    Test the coherent-error sweep.
    """

    def test_SmallSweep(self):
        cfg = SSOptimizerConfig(restarts=1, maxIterations=20, seed=6)
        sweep = SSNoiseStudy.NoiseSweep(4, 1, [0.0, 0.02], 1, cfg, families=["ALA_SHARED"], thetaOpt=0.5, phiOpt=0.3)
        self.assertEqual(sweep["r"], [0.0, 0.02])
        self.assertEqual(len(sweep["rows"]), 2)
        self.assertEqual(len(sweep["medians"]["ALA_SHARED"]), 2)
        self.assertEqual(sorted(sweep["gates"].keys()), [0, 1])
        self.assertEqual(len(sweep["gates"][1][0]), 4)
        self.assertEqual(sweep["gates"][0][0][0]["delta_plus"], 0.0)
        self.assertEqual(sweep["boundary"], "PBC")


    def test_OpenBoundarySweep(self):
        """
        An open-boundary sweep re-optimizes open-boundary circuits with the sampled bond gates.
        """
        cfg = SSOptimizerConfig(restarts=1, maxIterations=20, seed=4)
        sweep = SSNoiseStudy.NoiseSweep(4, 1, [0.01], 1, cfg, families=["ALA_SHARED"], thetaOpt=0.5, phiOpt=0.3,
                                        boundary=SSBoundary.OBC)
        self.assertEqual(sweep["boundary"], "OBC")

        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.OBC, 4, 1)
        params = SSCoherentError.SampleErrorGates(0.5, 0.3, 0.01, 4, seed=[cfg.Seed, 0, 0])
        objective = SSObjective(spec, SSSqueezingKind.LINEAR, SSObjective.FrozenEntanglers(spec, 0.5, 0.3),
                                SSCoherentError.BondGates(params))
        expected = SSOptimizer.MultiStart(objective, cfg).Best.FOpt
        self.assertAlmostEqual(sweep["rows"][0]["xi2_opt"], expected, places=12)


    def test_AnalogFamiliesRejected(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSNoiseStudy.NoiseSweep(4, 1, [0.0], 1, SSOptimizerConfig(restarts=1), families=["ANALOG_HEA"], thetaOpt=0.5, phiOpt=0.3)


if __name__ == '__main__':
    unittest.main()
