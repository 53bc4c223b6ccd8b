"""
Module: sstwisting.py

One-axis and two-axis twisting reference dynamics in the (N + 1)-dimensional
symmetric subspace, and the searches for their minimum squeezing parameter.
"""

# external package imports.
from functools import lru_cache
import logging

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize_scalar
from smartinspectpython.siauto import SIAuto, SILevel, SISession

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .sscollectivespin import SSCollectiveSpin
from .ssconst import NORM_TOLERANCE, TWIST_GRID_POINTS_DEFAULT, TWIST_TAU_MAX_DEFAULT, TWIST_TAU_RELATIVE_TOLERANCE
from .ssdickevector import SSDickeVector, _RaisingCoefficients
from .sssqueezingkind import SSSqueezingKind
from .sssqueezingreport import SSSqueezingReport
from .sstwistmodel import SSTwistModel
from .sstwistresult import SSTwistResult

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def _Spectrum(model:SSTwistModel, nQubits:int) -> tuple:
    evals, evecs = np.linalg.eigh(SSTwisting.Hamiltonian(model, nQubits))
    evals.setflags(write=False)
    evecs.setflags(write=False)
    return evals, evecs


@lru_cache(maxsize=64)
def _TatReference(nQubits:int, tauMax:float, gridPoints:int) -> float:
    return SSTwisting.MinimizeTwist(SSTwistModel.TAT, nQubits, SSSqueezingKind.LINEAR, tauMax, gridPoints).Xi2Min


@export
class SSTwisting:
    """
    Twisting Hamiltonians, trajectories and minimum searches (static methods only).

    Threadsafety:
        All members are pure; spectra are cached per (model, N).
    """

    @staticmethod
    def Hamiltonian(model:SSTwistModel, nQubits:int) -> np.ndarray:
        """
        Returns the (N + 1) x (N + 1) real matrix of H_OAT = Jz^2 or H_TAT = Jx^2 - Jy^2.

        H_TAT is built as (J+^2 + J-^2) / 2 from the ladder matrix elements
        sqrt(J(J + 1) - m(m + 1)).
        """
        model = SSTwistModel.Parse(model)
        if (nQubits is None) or (nQubits < 1):
            raise SSArgumentOutOfRangeException("nQubits", "Number of qubits must be >= 1, got {0}.".format(nQubits))
        if (model == SSTwistModel.OAT):
            m = np.arange(nQubits + 1) - nQubits / 2.0
            return np.diag(m * m)
        raising = np.diag(_RaisingCoefficients(nQubits), k=-1)
        square = raising @ raising
        return 0.5 * (square + square.T)


    @staticmethod
    def InitialState(model:SSTwistModel, nQubits:int) -> SSDickeVector:
        """
        Returns the initial state of a model: the product of |+> for OAT, |0...0> for TAT.
        """
        model = SSTwistModel.Parse(model)
        if (model == SSTwistModel.OAT):
            return SSDickeVector.CoherentX(nQubits)
        return SSDickeVector.Basis(nQubits, 0)


    @staticmethod
    def TwistState(model:SSTwistModel, nQubits:int, tau:float) -> SSDickeVector:
        """
        Returns exp(-i H tau) |psi_0> for a twisting model.

        Args:
            model (SSTwistModel):
                OAT or TAT.
            nQubits (int):
                Number of qubits N.
            tau (float):
                Evolution time.

        Returns:
            The evolved SSDickeVector.
        """
        model = SSTwistModel.Parse(model)
        psi0:SSDickeVector = SSTwisting.InitialState(model, nQubits)
        if (tau == 0):
            return psi0
        U = expm(-1j * float(tau) * SSTwisting.Hamiltonian(model, nQubits))
        return SSDickeVector(nQubits, U @ psi0.Coefficients)


    @staticmethod
    def _SpectralState(model:SSTwistModel, nQubits:int, coefficients0:np.ndarray, tau:float) -> SSDickeVector:
        evals, evecs = _Spectrum(model, nQubits)
        c = evecs @ (np.exp(-1j * tau * evals) * (evecs.T @ coefficients0))
        return SSDickeVector(nQubits, c)


    @staticmethod
    def DickeSqueezing(vector:SSDickeVector, kind:SSSqueezingKind=SSSqueezingKind.LINEAR, fullGenerators:bool=False) -> SSSqueezingReport:
        """
        Computes the squeezing report of a symmetric state from the J_z and J_+/- actions
        inside the Dicke subspace.

        Raises:
            SSArgumentOutOfRangeException:
                The vector is not normalized (norm deviation above 1e-8).
        """
        if (vector is None):
            raise SSArgumentNullException("vector")
        if (abs(vector.Norm() - 1.0) > NORM_TOLERANCE):
            raise SSArgumentOutOfRangeException("vector", "Dicke vector must be normalized (norm {0:.12f}).".format(vector.Norm()))
        kind = SSSqueezingKind.Parse(kind)
        n:int = vector.NumQubits
        c = vector.Coefficients
        W = SSCollectiveSpin.OperatorVectors(c, n, kind, applyFunc=lambda v, direction: SSDickeVector.ApplyVector(v, n, direction))
        means, gram = SSCollectiveSpin.MomentsFromVectors(c, W)
        V, C = SSCollectiveSpin.CovarianceMatrices(means, gram)
        return SSCollectiveSpin.SqueezingFromMatrices(n, kind, means, V, C, fullGenerators)


    @staticmethod
    def Trajectory(model:SSTwistModel, nQubits:int, kind:SSSqueezingKind, taus) -> np.ndarray:
        """
        Returns the squeezing parameter along a twisting trajectory at the given times.
        """
        model = SSTwistModel.Parse(model)
        kind = SSSqueezingKind.Parse(kind)
        c0 = SSTwisting.InitialState(model, nQubits).Coefficients
        return np.array([SSTwisting.DickeSqueezing(SSTwisting._SpectralState(model, nQubits, c0, float(tau)), kind).Xi2 for tau in taus])


    @staticmethod
    def MinimizeTwist(model:SSTwistModel, nQubits:int, kind:SSSqueezingKind=SSSqueezingKind.LINEAR,
                      tauMax:float=TWIST_TAU_MAX_DEFAULT, gridPoints:int=TWIST_GRID_POINTS_DEFAULT) -> SSTwistResult:
        """
        Finds the time of minimum squeezing parameter along a twisting trajectory.

        Args:
            model (SSTwistModel):
                OAT or TAT.
            nQubits (int):
                Number of qubits N.
            kind (SSSqueezingKind):
                Squeezing parameter to minimize.
            tauMax (float):
                Upper end of the scanned interval [0, tauMax].
            gridPoints (int):
                Number of grid times (>= 100).

        Returns:
            The SSTwistResult; AtBoundary is set when the grid minimum lies on tauMax.

        Raises:
            SSArgumentOutOfRangeException:
                gridPoints is below 100 or tauMax is not positive.

        The grid scan is followed by a golden-section refinement inside the two grid
        cells around the best grid point, to a relative time precision of 1e-6.
        """
        model = SSTwistModel.Parse(model)
        kind = SSSqueezingKind.Parse(kind)
        if (gridPoints is None) or (gridPoints < 100):
            raise SSArgumentOutOfRangeException("gridPoints", "At least 100 grid points are required, got {0}.".format(gridPoints))
        if (tauMax is None) or not (tauMax > 0):
            raise SSArgumentOutOfRangeException("tauMax", "tauMax must be positive, got {0}.".format(tauMax))

        _logsi.EnterMethod(SILevel.Debug)
        try:
            c0 = SSTwisting.InitialState(model, nQubits).Coefficients
            objective = lambda tau: SSTwisting.DickeSqueezing(SSTwisting._SpectralState(model, nQubits, c0, float(tau)), kind).Xi2

            taus = np.linspace(0.0, float(tauMax), int(gridPoints))
            xi2s = np.array([objective(tau) for tau in taus])
            best:int = int(np.argmin(xi2s))
            tauStar:float = float(taus[best])
            xi2Min:float = float(xi2s[best])
            atBoundary:bool = (best == len(taus) - 1)

            if (atBoundary):
                _logsi.LogWarning("%s N=%d: minimum at the end of the grid (tau_max=%g); the scanned interval is too short.", model.name, nQubits, tauMax)
            elif (best > 0):
                try:
                    refined = minimize_scalar(objective, bracket=(taus[best - 1], taus[best], taus[best + 1]),
                                              method="golden", tol=TWIST_TAU_RELATIVE_TOLERANCE)
                    if (refined.fun < xi2Min):
                        tauStar, xi2Min = float(refined.x), float(refined.fun)
                except ValueError as ex:
                    # flat neighbourhood: the grid value stands.
                    _logsi.LogVerbose("%s N=%d: golden refinement skipped (%s).", model.name, nQubits, ex)

            _logsi.LogMessage("%s N=%d %s: tau*=%.8f xi2_min=%.8f", model.name, nQubits, kind.name, tauStar, xi2Min)
            return SSTwistResult(model, nQubits, kind, tauStar, xi2Min, taus, xi2s, tauMax, atBoundary)

        finally:
            _logsi.LeaveMethod(SILevel.Debug)


    @staticmethod
    def TatReference(nQubits:int, tauMax:float=TWIST_TAU_MAX_DEFAULT, gridPoints:int=TWIST_GRID_POINTS_DEFAULT) -> float:
        """
        Returns the minimum linear squeezing parameter of two-axis twisting for N qubits (cached).
        """
        return _TatReference(int(nQubits), float(tauMax), int(gridPoints))


    @staticmethod
    def TwistMinimumTable(nQubitsList, kind:SSSqueezingKind=SSSqueezingKind.LINEAR,
                          tauMax:float=TWIST_TAU_MAX_DEFAULT, gridPoints:int=TWIST_GRID_POINTS_DEFAULT) -> list:
        """
        Returns the OAT and TAT minima versus N.

        Returns:
            A list of dictionaries {n_qubits, tau_oat, xi2_oat, tau_tat, xi2_tat, limit},
            where limit is the fundamental bound 2 / (N + 2).
        """
        rows:list = []
        for n in nQubitsList:
            oat:SSTwistResult = SSTwisting.MinimizeTwist(SSTwistModel.OAT, n, kind, tauMax, gridPoints)
            tat:SSTwistResult = SSTwisting.MinimizeTwist(SSTwistModel.TAT, n, kind, tauMax, gridPoints)
            rows.append({
                "n_qubits": int(n),
                "tau_oat": oat.TauStar,
                "xi2_oat": oat.Xi2Min,
                "tau_tat": tat.TauStar,
                "xi2_tat": tat.Xi2Min,
                "limit": SSCollectiveSpin.FundamentalLimit(n),
            })
        return rows
