# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import unittest

import numpy as np
from scipy.optimize import rosen, rosen_der

# our package imports.
from spinsqueezepython.ssansatz import SSAnsatz
from spinsqueezepython.ssansatzfamily import SSAnsatzFamily
from spinsqueezepython.ssansatzspec import SSAnsatzSpec
from spinsqueezepython.ssargumentnullexception import SSArgumentNullException
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.ssboundary import SSBoundary
from spinsqueezepython.sscollectivespin import SSCollectiveSpin
from spinsqueezepython.ssnumericalexception import SSNumericalException
from spinsqueezepython.ssobjective import SSObjective
from spinsqueezepython.ssoptimizer import SSOptimizer
from spinsqueezepython.ssoptimizerconfig import SSOptimizerConfig
from spinsqueezepython.sssqueezingkind import SSSqueezingKind
from spinsqueezepython.ssterminationreason import SSTerminationReason
from spinsqueezepython.ssunsupportedconfigurationexception import SSUnsupportedConfigurationException


_CENTER = np.array([0.5, -1.0, 2.0])


def _Quadratic(x:np.ndarray) -> float:
    return float(np.sum((x - _CENTER) ** 2))


def _Bumpy(x:np.ndarray) -> float:
    return float(np.sum(1.0 - np.cos(2.0 * x)) + 0.05 * np.sum(x ** 2))


class Test_Optimizer(unittest.TestCase):
    """
    Test the BFGS driver and the multi-start loop.
    """

    def test_FdGradient(self):
        x = np.array([1.0, 2.0, -0.5])
        gradient = SSOptimizer.FdGradient(_Quadratic, x, 1e-7)
        np.testing.assert_allclose(gradient, 2.0 * (x - _CENTER), atol=1e-5)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSOptimizer.FdGradient(_Quadratic, x, 0.0)


    def test_FdGradientReportsNonFinite(self):
        f = lambda x: float("inf") if (x[1] > 0.5) else 0.0
        with self.assertRaises(SSNumericalException) as context:
            SSOptimizer.FdGradient(f, np.array([0.0, 0.5 - 1e-12]), 1e-6)
        self.assertEqual(context.exception.Diagnostics["index"], 1)


    def test_BfgsQuadratic(self):
        trace = SSOptimizer.BfgsMinimize(_Quadratic, np.zeros(3))
        np.testing.assert_allclose(trace.XOpt, _CENTER, atol=1e-5)
        self.assertEqual(trace.Reason, SSTerminationReason.GRADIENT_TOLERANCE)
        self.assertEqual(trace.Rows[0][0], 0)
        self.assertAlmostEqual(trace.Rows[0][1], _Quadratic(np.zeros(3)), places=12)
        self.assertGreater(trace.Evaluations, 0)


    def test_BfgsRosenbrock(self):
        """
        The strong Wolfe line search handles the curved valley with an exact gradient.
        """
        trace = SSOptimizer.BfgsMinimize(rosen, np.array([-1.2, 1.0]), gradient=rosen_der)
        np.testing.assert_allclose(trace.XOpt, [1.0, 1.0], atol=1e-4)
        values = [row[1] for row in trace.Rows]
        self.assertTrue(all(b <= a for a, b in zip(values, values[1:])))


    def test_IterationCap(self):
        cfg = SSOptimizerConfig(maxIterations=2)
        trace = SSOptimizer.BfgsMinimize(rosen, np.array([-1.2, 1.0]), cfg, rosen_der)
        self.assertEqual(trace.Reason, SSTerminationReason.MAX_ITERATIONS)
        self.assertLessEqual(trace.Iterations, 2)


    def test_NonFiniteStartRaises(self):
        with self.assertRaises(SSNumericalException):
            SSOptimizer.BfgsMinimize(lambda x: float("nan"), np.zeros(2))


    def test_InitialPointIsReproducible(self):
        cfg = SSOptimizerConfig(seed=17, initRange=0.5)
        a = SSOptimizer.InitialPoint(cfg, 3, 10)
        b = SSOptimizer.InitialPoint(cfg, 3, 10)
        np.testing.assert_array_equal(a, b)
        self.assertTrue(np.all(np.abs(a) <= 0.5))
        self.assertFalse(np.array_equal(a, SSOptimizer.InitialPoint(cfg, 4, 10)))


    def test_MultiStartIndependentOfThreads(self):
        """
        The winner does not depend on how restarts are scheduled.
        """
        serial = SSOptimizer.MultiStart(_Bumpy, SSOptimizerConfig(restarts=6, seed=5), nParams=4)
        threaded = SSOptimizer.MultiStart(_Bumpy, SSOptimizerConfig(restarts=6, seed=5, threads=3), nParams=4)
        self.assertEqual(serial.Best.RestartIndex, threaded.Best.RestartIndex)
        self.assertEqual(serial.Best.FOpt, threaded.Best.FOpt)
        np.testing.assert_array_equal(serial.Best.XOpt, threaded.Best.XOpt)
        self.assertEqual([t.RestartIndex for t in threaded.Traces], list(range(6)))
        self.assertEqual(serial.Best.FOpt, min(serial.ObjectiveValues()))


    def test_MultiStartNeedsParameterCount(self):
        with self.assertRaises(SSArgumentNullException):
            SSOptimizer.MultiStart(_Quadratic, SSOptimizerConfig(restarts=1))


    def test_ConfigValidation(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSOptimizerConfig(fdEpsilon=0.0)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSOptimizerConfig(restarts=0)
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSOptimizerConfig(wolfeC1=0.9, wolfeC2=0.1)
        cfg = SSOptimizerConfig.FromDictionary({"restarts": 7, "max_iterations": 20}, seed=3)
        self.assertEqual((cfg.Restarts, cfg.MaxIterations, cfg.Seed), (7, 20, 3))


class Test_Objective(unittest.TestCase):
    """
    Test the squeezing objective of a circuit family.
    """

    def test_ValueMatchesSqueezing(self):
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_GLOBAL, SSBoundary.PBC, 4, 1)
        objective = SSObjective(spec, SSSqueezingKind.LINEAR)
        x = np.random.default_rng(1).uniform(-np.pi, np.pi, spec.ParamCount)
        expected = SSCollectiveSpin.Squeezing(SSAnsatz.BuildState(spec, x)).Xi2
        self.assertEqual(objective(x), expected)
        self.assertEqual(objective(x), objective(x))
        self.assertEqual(objective.EvaluationCount, 3)


    def test_FrozenEntanglers(self):
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, SSBoundary.PBC, 4, 1)
        objective = SSObjective(spec, frozen=SSObjective.FrozenEntanglers(spec, 0.7, 1.1))
        self.assertEqual(objective.FreeCount, spec.ParamCount - 2)
        full = objective.FullVector(np.zeros(objective.FreeCount))
        self.assertEqual((full[4], full[5]), (0.7, 1.1))
        np.testing.assert_array_equal(objective.FreeVector(full), np.zeros(objective.FreeCount))
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSObjective(spec, frozen={spec.ParamCount: 0.0})
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSObjective.FrozenEntanglers(SSAnsatzSpec(SSAnsatzFamily.ANALOG_HEA, SSBoundary.PBC, 4, 1), 0.1, 0.2)


    def test_TableAngles(self):
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSObjective.TableAngles(99, 10)


    def test_SmallOptimizationSqueezes(self):
        """
        A short optimization of a four-qubit circuit reaches a squeezed state.
        """
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_GLOBAL, SSBoundary.PBC, 4, 1)
        objective = SSObjective(spec)
        result = SSOptimizer.MultiStart(objective, SSOptimizerConfig(restarts=3, maxIterations=60, seed=2))
        self.assertEqual(result.NumQubits, 4)
        self.assertEqual(len(result.Traces), 3)
        self.assertLess(result.Best.FOpt, 1.0)


    def test_WarmStartChain(self):
        cfg = SSOptimizerConfig(restarts=2, maxIterations=30, seed=4)
        results = SSOptimizer.WarmStartChain(SSAnsatzFamily.ALA_GLOBAL, 1, [4, 6], cfg)
        self.assertEqual([r.NumQubits for r in results], [4, 6])
        self.assertEqual(results[1].Traces[0].RestartIndex, -1)
        np.testing.assert_array_equal(results[1].Traces[0].X0, results[0].Best.XOpt)


    def test_WarmStartChainValidation(self):
        with self.assertRaises(SSUnsupportedConfigurationException):
            SSOptimizer.WarmStartChain(SSAnsatzFamily.ALA_SITE_DEPENDENT, 1, [4, 6])
        with self.assertRaises(SSArgumentOutOfRangeException):
            SSOptimizer.WarmStartChain(SSAnsatzFamily.ALA_SHARED, 1, [4, 8])


    def test_DepthSweepWithReference(self):
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_GLOBAL, SSBoundary.PBC, 4, 1)
        sweep = SSOptimizer.DepthSweep(spec, [1], SSOptimizerConfig(restarts=2, maxIterations=30), reference=10.0)
        self.assertEqual(sweep["reference"], 10.0)
        self.assertEqual(sweep["p_star"], 1)
        self.assertEqual(sweep["rows"][0]["depth"], 1)
        self.assertAlmostEqual(sweep["rows"][0]["ratio"], sweep["rows"][0]["xi2_opt"] / 10.0, places=15)


if __name__ == '__main__':
    unittest.main()
