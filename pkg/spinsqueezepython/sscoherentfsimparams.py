# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSCoherentFsimParams:
    """
    Parameters of an FSIM gate with coherent errors: the actual swap and phase
    angles and the three additional phases.

    Threadsafety:
        Instances are immutable and thread-safe.
    """

    def __init__(self, thetaStar:float, phiStar:float, deltaPlus:float=0.0, deltaMinus:float=0.0,
                 deltaMinusOff:float=0.0, achievedR:float=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            thetaStar (float):
                Actual swap angle.
            phiStar (float):
                Actual controlled-phase angle.
            deltaPlus (float):
                Common phase Delta+.
            deltaMinus (float):
                Diagonal phase difference Delta-.
            deltaMinusOff (float):
                Off-diagonal phase difference Delta-,off.
            achievedR (float):
                Error metric of the gate against its target, if known.
        """
        self._fThetaStar:float = float(thetaStar)
        self._fPhiStar:float = float(phiStar)
        self._fDeltaPlus:float = float(deltaPlus)
        self._fDeltaMinus:float = float(deltaMinus)
        self._fDeltaMinusOff:float = float(deltaMinusOff)
        self._fAchievedR:float = None if (achievedR is None) else float(achievedR)


    def __repr__(self) -> str:
        return "SSCoherentFsimParams(theta*={0:.6f}, phi*={1:.6f}, d+={2:.6f}, d-={3:.6f}, d-off={4:.6f}, r={5})".format(
            self._fThetaStar, self._fPhiStar, self._fDeltaPlus, self._fDeltaMinus, self._fDeltaMinusOff, self._fAchievedR)


    def __eq__(self, other) -> bool:
        if not isinstance(other, SSCoherentFsimParams):
            return NotImplemented
        return self.AsTuple() == other.AsTuple()


    def __hash__(self) -> int:
        return hash(self.AsTuple())


    @property
    def AchievedR(self) -> float:
        """ Gets the error metric against the target gate, or None. """
        return self._fAchievedR

    @property
    def DeltaMinus(self) -> float:
        """ Gets Delta-. """
        return self._fDeltaMinus

    @property
    def DeltaMinusOff(self) -> float:
        """ Gets Delta-,off. """
        return self._fDeltaMinusOff

    @property
    def DeltaPlus(self) -> float:
        """ Gets Delta+. """
        return self._fDeltaPlus

    @property
    def PhiStar(self) -> float:
        """ Gets the actual controlled-phase angle. """
        return self._fPhiStar

    @property
    def ThetaStar(self) -> float:
        """ Gets the actual swap angle. """
        return self._fThetaStar


    def AsTuple(self) -> tuple:
        """
        Returns (theta*, phi*, Delta+, Delta-, Delta-,off).
        """
        return (self._fThetaStar, self._fPhiStar, self._fDeltaPlus, self._fDeltaMinus, self._fDeltaMinusOff)


    def ToDictionary(self) -> dict:
        """
        Returns the json record of the parameters.
        """
        return {
            "theta_star": self._fThetaStar,
            "phi_star": self._fPhiStar,
            "delta_plus": self._fDeltaPlus,
            "delta_minus": self._fDeltaMinus,
            "delta_minus_off": self._fDeltaMinusOff,
            "achieved_r": self._fAchievedR,
        }


    @staticmethod
    def FromDictionary(record:dict) -> 'SSCoherentFsimParams':
        """
        Creates parameters from a json record; missing phases default to 0.

        Raises:
            SSArgumentOutOfRangeException:
                theta_star or phi_star is missing.
        """
        for key in ("theta_star", "phi_star"):
            if (key not in record):
                raise SSArgumentOutOfRangeException(key, "Coherent FSIM record is missing the \"{0}\" field.".format(key))
        return SSCoherentFsimParams(record["theta_star"], record["phi_star"], record.get("delta_plus", 0.0),
                                    record.get("delta_minus", 0.0), record.get("delta_minus_off", 0.0), record.get("achieved_r"))
