"""
Module: ssexpressibility.py

Expressibility of a circuit family: the Kullback-Leibler divergence between the
distribution of fidelities F = |<psi(x1)|psi(x2)>|^2 of random parameter pairs
and the Haar-random fidelity distribution P(F) = (d - 1)(1 - F)^(d - 2), d = 2^N.
"""

# external package imports.
import logging

import numpy as np
from smartinspectpython.siauto import SIAuto, SILevel, SISession

# our package imports.
from .ssansatz import SSAnsatz
from .ssansatzspec import SSAnsatzSpec
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssconst import EXPRESSIBILITY_BINS_DEFAULT
from .ssevolutionconfig import SSEvolutionConfig
from .ssexpressibilityresult import SSExpressibilityResult
from .ssnumericalexception import SSNumericalException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


@export
class SSExpressibility:
    """
    Expressibility estimation (static methods only).

    Threadsafety:
        All members are pure given their seeds.
    """

    @staticmethod
    def HaarLogBinMasses(nQubits:int, nBins:int) -> np.ndarray:
        """
        Returns the natural log of the Haar probability of every fidelity bin,
        (1 - a)^(d - 1) - (1 - b)^(d - 1) for the bin [a, b].
        """
        d:float = 2.0 ** nQubits
        edges = np.linspace(0.0, 1.0, nBins + 1)
        with np.errstate(divide="ignore"):
            logTail = (d - 1.0) * np.log1p(-edges)    # log (1 - F)^(d - 1); -inf at F = 1.
            low, high = logTail[:-1], logTail[1:]
            return low + np.log(-np.expm1(high - low))


    @staticmethod
    def HaarBinMasses(nQubits:int, nBins:int) -> np.ndarray:
        """
        Returns the Haar probability of every fidelity bin (sums to 1).
        """
        return np.exp(SSExpressibility.HaarLogBinMasses(nQubits, nBins))


    @staticmethod
    def HaarFidelities(nQubits:int, nSamples:int, rng:np.random.Generator) -> np.ndarray:
        """
        Draws fidelities from the Haar distribution by inverse-cdf sampling, F = 1 - U^(1/(d - 1)).
        """
        d:float = 2.0 ** nQubits
        return -np.expm1(np.log(rng.uniform(size=int(nSamples))) / (d - 1.0))


    @staticmethod
    def FromFidelities(fidelities, nQubits:int, nBins:int=EXPRESSIBILITY_BINS_DEFAULT, seed=None) -> SSExpressibilityResult:
        """
        Computes the divergence of a set of fidelity samples from the Haar distribution.

        Args:
            fidelities (array-like):
                Fidelity samples in [0, 1].
            nQubits (int):
                Number of qubits N.
            nBins (int):
                Number of equal bins on [0, 1] (>= 10).
            seed (object):
                Seed recorded in the result.

        Returns:
            The SSExpressibilityResult; KL = sum P ln(P / P_Haar) over non-empty bins.

        Raises:
            SSArgumentOutOfRangeException:
                No samples or fewer than 10 bins.
            SSNumericalException:
                A non-empty bin has zero Haar probability.
        """
        if (fidelities is None):
            raise SSArgumentNullException("fidelities")
        fidelities = np.clip(np.asarray(fidelities, dtype=float).reshape(-1), 0.0, 1.0)
        if (fidelities.shape[0] == 0):
            raise SSArgumentOutOfRangeException("fidelities", "At least one fidelity sample is required.")
        if (nBins is None) or (nBins < 10):
            raise SSArgumentOutOfRangeException("nBins", "At least 10 bins are required, got {0}.".format(nBins))

        counts, _ = np.histogram(fidelities, bins=int(nBins), range=(0.0, 1.0))
        logHaar = SSExpressibility.HaarLogBinMasses(nQubits, int(nBins))
        occupied = counts > 0
        if np.any(np.isneginf(logHaar[occupied])):
            bins = np.flatnonzero(occupied & np.isneginf(logHaar)).tolist()
            raise SSNumericalException("Sampled fidelities fall in bins with zero Haar probability.", {"bins": bins, "n_qubits": nQubits})

        p = counts[occupied] / fidelities.shape[0]
        kl:float = float(np.sum(p * (np.log(p) - logHaar[occupied])))
        return SSExpressibilityResult(nQubits, max(kl, 0.0), counts, np.exp(logHaar), seed)


    @staticmethod
    def SampleFidelities(spec:SSAnsatzSpec, nSamples:int, rng:np.random.Generator, evolution:SSEvolutionConfig=None,
                         angleRange:float=np.pi) -> np.ndarray:
        """
        Returns fidelities |<psi(x1)|psi(x2)>|^2 of parameter pairs drawn uniformly from [-angleRange, angleRange].
        """
        fidelities = np.empty(int(nSamples))
        for i in range(int(nSamples)):
            x1 = rng.uniform(-angleRange, angleRange, spec.ParamCount)
            x2 = rng.uniform(-angleRange, angleRange, spec.ParamCount)
            overlap = SSAnsatz.BuildState(spec, x1, evolution=evolution).Inner(SSAnsatz.BuildState(spec, x2, evolution=evolution))
            fidelities[i] = abs(overlap) ** 2
        return fidelities


    @staticmethod
    def Expressibility(spec:SSAnsatzSpec, nSamples:int=20000, nBins:int=EXPRESSIBILITY_BINS_DEFAULT, seed:int=0,
                       evolution:SSEvolutionConfig=None) -> SSExpressibilityResult:
        """
        Estimates the expressibility of a circuit family.

        Args:
            spec (SSAnsatzSpec):
                Circuit family.
            nSamples (int):
                Number of parameter pairs (>= 1000).
            nBins (int):
                Number of fidelity bins (>= 10).
            seed (int):
                Seed of the parameter draws; angles and evolution times are both
                uniform in [-pi, pi].
            evolution (SSEvolutionConfig):
                Propagator settings for analog families.

        Returns:
            The SSExpressibilityResult; lower divergence means higher expressibility.

        Raises:
            SSArgumentOutOfRangeException:
                Fewer than 1000 samples or 10 bins.
            SSNumericalException:
                A sampled bin has zero Haar probability.
        """
        if (spec is None):
            raise SSArgumentNullException("spec")
        if (nSamples is None) or (nSamples < 1000):
            raise SSArgumentOutOfRangeException("nSamples", "At least 1000 samples are required, got {0}.".format(nSamples))

        _logsi.EnterMethod(SILevel.Debug)
        try:
            rng = np.random.default_rng(seed)
            fidelities = SSExpressibility.SampleFidelities(spec, nSamples, rng, evolution)
            result = SSExpressibility.FromFidelities(fidelities, spec.NumQubits, nBins, seed)
            _logsi.LogMessage("Expressibility of %s: KL=%.6f (%d samples, %d bins).", spec, result.KlDivergence, nSamples, nBins)
            return result
        finally:
            _logsi.LeaveMethod(SILevel.Debug)
