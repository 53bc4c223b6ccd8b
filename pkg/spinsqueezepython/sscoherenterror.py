"""
Module: sscoherenterror.py

FSIM gates with coherent errors, the gate error metric r = 1 - |Tr(U^dagger V)|^2 / 16,
and the sampling of error gates with a prescribed r.
"""

# external package imports.
import logging

import numpy as np
from scipy.optimize import bisect
from smartinspectpython.siauto import SIAuto, SISession

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .sscoherentfsimparams import SSCoherentFsimParams
from .ssconst import ERROR_GATE_MAX_RETRIES, ERROR_GATE_MAX_SCALE
from .ssgates import SSGates
from .ssnumericalexception import SSNumericalException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


_SCALE_SCAN_POINTS:int = 64


@export
class SSCoherentError:
    """
    Coherent FSIM error modeling (static methods only).

    Threadsafety:
        All members are pure given their seeds.
    """

    @staticmethod
    def CoherentFsim(params:SSCoherentFsimParams) -> np.ndarray:
        """
        Returns the 4x4 matrix of an FSIM gate with coherent errors.

        The matrix is 1 on |00>; the central block holds
        u22 = e^(i(D+ + D-)) cos(theta*), u23 = -i e^(i(D+ - D-off)) sin(theta*),
        u32 = -i e^(i(D+ + D-off)) sin(theta*), u33 = e^(i(D+ - D-)) cos(theta*);
        and u44 = e^(i(2 D+ - phi*)) on |11>.
        """
        if (params is None):
            raise SSArgumentNullException("params")
        c:float = np.cos(params.ThetaStar)
        s:float = np.sin(params.ThetaStar)
        dp, dm, doff = params.DeltaPlus, params.DeltaMinus, params.DeltaMinusOff
        u = np.zeros((4, 4), dtype=complex)
        u[0, 0] = 1.0
        u[1, 1] = np.exp(1j * (dp + dm)) * c
        u[1, 2] = -1j * np.exp(1j * (dp - doff)) * s
        u[2, 1] = -1j * np.exp(1j * (dp + doff)) * s
        u[2, 2] = np.exp(1j * (dp - dm)) * c
        u[3, 3] = np.exp(1j * (2.0 * dp - params.PhiStar))
        return u


    @staticmethod
    def ErrorMetric(uExp:np.ndarray, uTarget:np.ndarray) -> float:
        """
        Returns r = 1 - |Tr(uExp^dagger uTarget)|^2 / 16; a global phase does not change r.

        Raises:
            SSArgumentOutOfRangeException:
                A matrix is not a 4x4 unitary.
        """
        uExp = SSGates.CheckUnitary(uExp, "uExp", 4)
        uTarget = SSGates.CheckUnitary(uTarget, "uTarget", 4)
        overlap = np.trace(uExp.conj().T @ uTarget)
        return float(1.0 - abs(overlap) ** 2 / 16.0)


    @staticmethod
    def _Offset(thetaOpt:float, phiOpt:float, direction:np.ndarray, scale:float) -> SSCoherentFsimParams:
        d = scale * direction
        return SSCoherentFsimParams(thetaOpt + d[0], phiOpt + d[1], d[2], d[3], d[4])


    @staticmethod
    def SampleErrorGate(thetaOpt:float, phiOpt:float, targetR:float, rng:np.random.Generator) -> SSCoherentFsimParams:
        """
        Draws one FSIM gate with coherent errors whose error metric against
        FSIM(thetaOpt, phiOpt) equals targetR.

        An isotropic direction in (d theta, d phi, D+, D-, D-off) is scaled by the
        first root of r(scale) = targetR in (0, pi], located by a scan and bisection.

        Raises:
            SSNumericalException:
                No direction reached targetR within the retry limit.
        """
        target = SSGates.Fsim(thetaOpt, phiOpt)
        if (targetR == 0):
            return SSCoherentFsimParams(thetaOpt, phiOpt, 0.0, 0.0, 0.0, 0.0)

        def excess(scale:float, direction:np.ndarray) -> float:
            gate = SSCoherentError.CoherentFsim(SSCoherentError._Offset(thetaOpt, phiOpt, direction, scale))
            return SSCoherentError.ErrorMetric(gate, target) - targetR

        scales = np.linspace(0.0, ERROR_GATE_MAX_SCALE, _SCALE_SCAN_POINTS + 1)
        for attempt in range(ERROR_GATE_MAX_RETRIES):
            direction = rng.standard_normal(5)
            direction /= np.linalg.norm(direction)
            for low, high in zip(scales[:-1], scales[1:]):
                if (excess(high, direction) >= 0.0):
                    scale:float = bisect(excess, low, high, args=(direction,), xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
                    params = SSCoherentError._Offset(thetaOpt, phiOpt, direction, scale)
                    achieved:float = SSCoherentError.ErrorMetric(SSCoherentError.CoherentFsim(params), target)
                    return SSCoherentFsimParams(*params.AsTuple(), achievedR=achieved)
            _logsi.LogWarning("Error direction %d never reached r=%g within scale %g; drawing a new one.", attempt, targetR, ERROR_GATE_MAX_SCALE)

        raise SSNumericalException("Could not sample an error gate with r={0}.".format(targetR),
                                   {"target_r": targetR, "retries": ERROR_GATE_MAX_RETRIES})


    @staticmethod
    def SampleErrorGates(thetaOpt:float, phiOpt:float, targetR:float, nGates:int, seed=0) -> list:
        """
        Draws independent FSIM gates with coherent errors, all with error metric targetR.

        Args:
            thetaOpt (float):
                Target swap angle.
            phiOpt (float):
                Target controlled-phase angle.
            targetR (float):
                Error metric of every gate, 0 <= r < 0.5.
            nGates (int):
                Number of gates.
            seed (object):
                Seed (int or sequence) or numpy Generator.

        Returns:
            A list of SSCoherentFsimParams with AchievedR set.

        Raises:
            SSArgumentOutOfRangeException:
                targetR is outside [0, 0.5) or nGates is negative.
        """
        if (targetR is None) or not (0.0 <= targetR < 0.5):
            raise SSArgumentOutOfRangeException("targetR", "Target error must lie in [0, 0.5), got {0}.".format(targetR))
        if (nGates is None) or (nGates < 0):
            raise SSArgumentOutOfRangeException("nGates", "Number of gates must be >= 0, got {0}.".format(nGates))
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        return [SSCoherentError.SampleErrorGate(thetaOpt, phiOpt, targetR, rng) for _ in range(int(nGates))]


    @staticmethod
    def BondGates(params:list) -> list:
        """
        Returns the 4x4 matrices of a list of coherent FSIM parameters, for use as per-bond gates.
        """
        return [SSCoherentError.CoherentFsim(p) for p in params]
