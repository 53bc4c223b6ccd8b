"""
Module: ssshotestimator.py

Estimation of the squeezing parameter from simulated single-shot collective readouts.

Linear operator set: six axes x, y, z, xy, yz, zx.  Means and second moments
come from the x, y, z readouts; covariances from the diagonal axes using
cov(Ja, Jb) = <Jab^2> - (<Ja^2> + <Jb^2>)/2 - <Ja><Jb>, Jab = (Ja + Jb)/sqrt(2);
the commutator matrix follows from C_xy = <Jz>, C_yz = <Jx>, C_zx = <Jy>.

Nonlinear operator set: nineteen axes; moments of order 1..4 are combined by
SSMomentAlgebra into every expectation the 9 x 9 matrices need.
"""

# external package imports.
import logging

import numpy as np
from smartinspectpython.siauto import SIAuto, SISession

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssaxis import SSAxis
from .sscollectivespin import SSCollectiveSpin
from .ssconst import MIN_SHOTS_PER_AXIS
from .ssmomentalgebra import SSMomentAlgebra
from .sssqueezingkind import SSSqueezingKind
from .sssqueezingreport import SSSqueezingReport
from .ssstatevector import SSStateVector

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


@export
class SSShotEstimator:
    """
    Shot-based squeezing estimation (static methods only).

    Readouts of an axis are kept as a histogram over the number of "up"
    results k = 0..N, since every outcome is m = c (k - N/2).

    Threadsafety:
        All members are pure given their seeds and are thread-safe.
    """

    @staticmethod
    def AxesFor(kind:SSSqueezingKind) -> list:
        """
        Returns the readout axes needed by an operator set.
        """
        kind = SSSqueezingKind.Parse(kind)
        return SSAxis.LinearAxes() if (kind == SSSqueezingKind.LINEAR) else SSAxis.NonlinearAxes()


    @staticmethod
    def SampleCounts(state:SSStateVector, axes:list, shotsPerAxis:int, seed) -> np.ndarray:
        """
        Samples every axis and returns an (A, N + 1) array of outcome histograms.

        Axis a is sampled with the generator stream derived from (seed, a).
        """
        counts = np.zeros((len(axes), state.NumQubits + 1), dtype=np.int64)
        for a, axis in enumerate(axes):
            outcomes = SSCollectiveSpin.SampleAxis(state, axis, shotsPerAxis, np.random.default_rng([int(seed), a]))
            k = np.rint(outcomes / axis.Scale + 0.5 * state.NumQubits).astype(np.int64)
            counts[a] = np.bincount(k, minlength=state.NumQubits + 1)
        return counts


    @staticmethod
    def AxisMoments(counts:np.ndarray, nQubits:int, maxOrder:int) -> dict:
        """
        Returns {k: array of <(n_a . J)^k>} for k = 1..maxOrder from outcome histograms
        (the axis scales are divided out).
        """
        values = np.arange(nQubits + 1) - 0.5 * nQubits
        totals = counts.sum(axis=1).astype(float)
        return {k: (counts @ values ** k) / totals for k in range(1, maxOrder + 1)}


    @staticmethod
    def LinearMatrices(moments:dict) -> tuple:
        """
        Returns (means, V, C) of the linear operator set from the moments of the
        six axes x, y, z, xy, yz, zx (in that order).
        """
        first = moments[1]
        second = moments[2]
        means = np.array(first[:3], dtype=float)
        V = np.diag(second[:3] - means ** 2)
        for diagIndex, (a, b) in zip((3, 4, 5), ((0, 1), (1, 2), (2, 0))):
            cov:float = second[diagIndex] - 0.5 * (second[a] + second[b]) - means[a] * means[b]
            V[a, b] = cov
            V[b, a] = cov
        C = np.zeros((3, 3))
        C[0, 1], C[1, 0] = means[2], -means[2]
        C[1, 2], C[2, 1] = means[0], -means[0]
        C[2, 0], C[0, 2] = means[1], -means[1]
        return means, V, C


    @staticmethod
    def SqueezingFromCounts(counts:np.ndarray, axes:list, nQubits:int, kind:SSSqueezingKind,
                            fullGenerators:bool=False) -> SSSqueezingReport:
        """
        Builds an estimated squeezing report from per-axis outcome histograms.
        """
        kind = SSSqueezingKind.Parse(kind)
        maxOrder:int = 2 if (kind == SSSqueezingKind.LINEAR) else 4
        return SSShotEstimator.SqueezingFromAxisMoments(
            SSShotEstimator.AxisMoments(counts, nQubits, maxOrder), axes, nQubits, kind, fullGenerators)


    @staticmethod
    def SqueezingFromAxisMoments(moments:dict, axes:list, nQubits:int, kind:SSSqueezingKind,
                                 fullGenerators:bool=False) -> SSSqueezingReport:
        """
        Builds a squeezing report from per-axis moments <(n_a . J)^k>.

        Args:
            moments (dict):
                Maps the order k to a length-A array of moments (axis scales divided out).
            axes (list):
                The A readout axes the moments belong to.
            nQubits (int):
                Number of qubits N.
            kind (SSSqueezingKind):
                Operator set.
            fullGenerators (bool):
                True to use every operator of the set as a generator.

        Exact moments reproduce the exact report; sampled moments give the estimate.
        """
        kind = SSSqueezingKind.Parse(kind)
        if (kind == SSSqueezingKind.LINEAR):
            means, V, C = SSShotEstimator.LinearMatrices(moments)
        else:
            directions = np.array([axis.Direction for axis in axes])
            symmetric:dict = SSMomentAlgebra.SymmetricMoments(directions, moments)
            means, gram = SSMomentAlgebra.GramFromMoments(symmetric, True)
            V, C = SSCollectiveSpin.CovarianceMatrices(means, gram)
        return SSCollectiveSpin.SqueezingFromMatrices(nQubits, kind, means, V, C, fullGenerators)


    @staticmethod
    def ExactAxisMoments(state:SSStateVector, axes:list, maxOrder:int) -> dict:
        """
        Returns the exact per-axis moments <(n_a . J)^k>, k = 1..maxOrder (infinite-shot limit).
        """
        result:dict = {k: np.zeros(len(axes)) for k in range(1, maxOrder + 1)}
        for a, axis in enumerate(axes):
            unit:SSAxis = SSAxis(axis.Direction, 1.0, axis.Name)
            for k in range(1, maxOrder + 1):
                result[k][a] = SSCollectiveSpin.Expectation(state, unit, k)
        return result


    @staticmethod
    def BootstrapStandardError(counts:np.ndarray, axes:list, nQubits:int, kind:SSSqueezingKind,
                               resamples:int, rng:np.random.Generator) -> float:
        """
        Returns the bootstrap standard error of the estimated xi^2.

        Every resample redraws each axis histogram from its own empirical
        distribution with the same number of shots; infinite estimates are skipped.
        """
        totals = counts.sum(axis=1)
        values:list = []
        for _ in range(resamples):
            boot = np.stack([rng.multinomial(totals[a], counts[a] / totals[a]) for a in range(counts.shape[0])])
            xi2:float = SSShotEstimator.SqueezingFromCounts(boot, axes, nQubits, kind).Xi2
            if (np.isfinite(xi2)):
                values.append(xi2)
        if (len(values) < 2):
            return float("nan")
        return float(np.std(values, ddof=1))


    @staticmethod
    def EstimateSqueezing(state:SSStateVector, kind:SSSqueezingKind, shotsPerAxis:int, seed:int,
                          bootstrapResamples:int=0) -> SSSqueezingReport:
        """
        Estimates the squeezing report of a state from simulated readouts.

        Args:
            state (SSStateVector):
                Normalized state.
            kind (SSSqueezingKind):
                LINEAR (6 axes) or NONLINEAR (19 axes).
            shotsPerAxis (int):
                Readouts per axis (>= 100).
            seed (int):
                Seed of the readout streams.
            bootstrapResamples (int):
                Number of bootstrap resamples for the standard error (0 to skip).

        Returns:
            The estimated SSSqueezingReport; StandardError is set when bootstrapping.

        Raises:
            SSArgumentOutOfRangeException:
                Fewer than 100 shots per axis were requested.

        A singular estimated V is handled by the same pseudo-inverse rule as the exact report.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        if (shotsPerAxis is None) or (shotsPerAxis < MIN_SHOTS_PER_AXIS):
            raise SSArgumentOutOfRangeException("shotsPerAxis", "At least {0} shots per axis are required.".format(MIN_SHOTS_PER_AXIS))
        SSCollectiveSpin.CheckNormalized(state)
        kind = SSSqueezingKind.Parse(kind)

        _logsi.LogVerbose("Estimating %s squeezing of a %d-qubit state from %d shots per axis.", kind.name, state.NumQubits, shotsPerAxis)

        axes:list = SSShotEstimator.AxesFor(kind)
        counts = SSShotEstimator.SampleCounts(state, axes, shotsPerAxis, seed)
        report:SSSqueezingReport = SSShotEstimator.SqueezingFromCounts(counts, axes, state.NumQubits, kind)

        if (bootstrapResamples > 0):
            rng = np.random.default_rng([int(seed), len(axes)])
            report.StandardError = SSShotEstimator.BootstrapStandardError(counts, axes, state.NumQubits, kind, bootstrapResamples, rng)

        _logsi.LogVerbose("Estimated xi^2 = %.6f (standard error %s).", report.Xi2, report.StandardError)
        return report
