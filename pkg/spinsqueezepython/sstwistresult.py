# external package imports.
import numpy as np

# our package imports.
from .sssqueezingkind import SSSqueezingKind
from .sstwistmodel import SSTwistModel

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSTwistResult:
    """
    Outcome of a minimum squeezing search along a twisting trajectory.

    Threadsafety:
        Instances are treated as immutable values.
    """

    def __init__(self, model:SSTwistModel, nQubits:int, kind:SSSqueezingKind, tauStar:float, xi2Min:float,
                 taus:np.ndarray, xi2s:np.ndarray, tauMax:float, atBoundary:bool) -> None:
        """
        Initializes a new instance of the class.

        Args:
            model (SSTwistModel):
                Twisting Hamiltonian.
            nQubits (int):
                Number of qubits N.
            kind (SSSqueezingKind):
                Squeezing parameter that was minimized.
            tauStar (float):
                Refined time of the minimum.
            xi2Min (float):
                Squeezing parameter at tauStar.
            taus (np.ndarray):
                Grid times of the trace.
            xi2s (np.ndarray):
                Squeezing parameter at every grid time.
            tauMax (float):
                Upper end of the scanned interval.
            atBoundary (bool):
                True if the grid minimum sits on tauMax (interval too short).
        """
        self._fModel:SSTwistModel = model
        self._fNumQubits:int = int(nQubits)
        self._fKind:SSSqueezingKind = kind
        self._fTauStar:float = float(tauStar)
        self._fXi2Min:float = float(xi2Min)
        self._fTaus:np.ndarray = np.asarray(taus, dtype=float)
        self._fXi2s:np.ndarray = np.asarray(xi2s, dtype=float)
        self._fTauMax:float = float(tauMax)
        self._fAtBoundary:bool = bool(atBoundary)


    def __repr__(self) -> str:
        return "SSTwistResult({0}, N={1}, {2}, tau*={3:.6f}, xi2={4:.6f})".format(
            self._fModel.name, self._fNumQubits, self._fKind.name, self._fTauStar, self._fXi2Min)


    @property
    def AtBoundary(self) -> bool:
        """ Gets whether the minimum was found on the upper end of the grid. """
        return self._fAtBoundary

    @property
    def Kind(self) -> SSSqueezingKind:
        """ Gets the squeezing parameter kind. """
        return self._fKind

    @property
    def Model(self) -> SSTwistModel:
        """ Gets the twisting model. """
        return self._fModel

    @property
    def NumQubits(self) -> int:
        """ Gets the number of qubits N. """
        return self._fNumQubits

    @property
    def TauMax(self) -> float:
        """ Gets the upper end of the scanned interval. """
        return self._fTauMax

    @property
    def TauStar(self) -> float:
        """ Gets the time of the minimum. """
        return self._fTauStar

    @property
    def Taus(self) -> np.ndarray:
        """ Gets the grid times. """
        return self._fTaus

    @property
    def Xi2Min(self) -> float:
        """ Gets the minimum squeezing parameter. """
        return self._fXi2Min

    @property
    def Xi2s(self) -> np.ndarray:
        """ Gets the squeezing parameter on the grid. """
        return self._fXi2s


    def TraceRows(self) -> list:
        """
        Returns the trace as (tau, xi2) rows for csv output.
        """
        return [(float(t), float(x)) for t, x in zip(self._fTaus, self._fXi2s)]


    def ToDictionary(self, includeTrace:bool=False) -> dict:
        """
        Returns a json-friendly dictionary of the result; the trace is optional.
        """
        result:dict = {
            "model": self._fModel.name,
            "n_qubits": self._fNumQubits,
            "kind": self._fKind.name,
            "tau_star": self._fTauStar,
            "xi2_min": JsonHelper.ToJsonValue(self._fXi2Min),
            "tau_max": self._fTauMax,
            "grid_points": int(self._fTaus.shape[0]),
            "at_boundary": self._fAtBoundary,
        }
        if (includeTrace):
            result["trace"] = {"tau": JsonHelper.ToJsonValue(self._fTaus), "xi2": JsonHelper.ToJsonValue(self._fXi2s)}
        return result
