# external package imports.
import numpy as np

# our package imports.
from .ssterminationreason import SSTerminationReason

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSOptimizationTrace:
    """
    Record of one BFGS run: per-iteration (iteration, objective, gradient infinity norm)
    rows, the final point and value, and why the run stopped.

    Threadsafety:
        Instances are filled by a single run and are read-only afterwards.
    """

    def __init__(self, x0:np.ndarray) -> None:
        """
        Initializes a new instance of the class.

        Args:
            x0 (np.ndarray):
                Starting point of the run.
        """
        self._fX0:np.ndarray = np.array(x0, dtype=float)
        self._fRows:list = []
        self._fXOpt:np.ndarray = self._fX0.copy()
        self._fFOpt:float = float("inf")
        self._fReason:SSTerminationReason = SSTerminationReason.MAX_ITERATIONS
        self._fRestartIndex:int = 0
        self._fEvaluations:int = 0


    def __repr__(self) -> str:
        return "SSOptimizationTrace(restart={0}, f_opt={1:.10g}, iterations={2}, reason={3})".format(
            self._fRestartIndex, self._fFOpt, self.Iterations, self._fReason.name)


    @property
    def Evaluations(self) -> int:
        """ Gets or sets the number of objective evaluations the run used. """
        return self._fEvaluations

    @Evaluations.setter
    def Evaluations(self, value:int) -> None:
        self._fEvaluations = int(value)


    @property
    def FOpt(self) -> float:
        """ Gets the best objective value found. """
        return self._fFOpt


    @property
    def Iterations(self) -> int:
        """ Gets the number of completed BFGS iterations. """
        return max(len(self._fRows) - 1, 0)


    @property
    def Reason(self) -> SSTerminationReason:
        """ Gets or sets the termination reason. """
        return self._fReason

    @Reason.setter
    def Reason(self, value:SSTerminationReason) -> None:
        self._fReason = value


    @property
    def RestartIndex(self) -> int:
        """ 
        Gets or sets the restart index that produced this run (-1 for a warm start).
        """
        return self._fRestartIndex

    @RestartIndex.setter
    def RestartIndex(self, value:int) -> None:
        self._fRestartIndex = int(value)


    @property
    def Rows(self) -> list:
        """ Gets the (iteration, objective, gradient infinity norm) rows. """
        return self._fRows


    @property
    def X0(self) -> np.ndarray:
        """ Gets the starting point. """
        return self._fX0


    @property
    def XOpt(self) -> np.ndarray:
        """ Gets the best point found. """
        return self._fXOpt


    def Record(self, x:np.ndarray, f:float, gradient:np.ndarray) -> None:
        """
        Appends an iteration row and makes x the current best point.
        """
        self._fRows.append((len(self._fRows), float(f), float(np.max(np.abs(gradient))) if (gradient.size > 0) else 0.0))
        self._fXOpt = np.array(x, dtype=float)
        self._fFOpt = float(f)


    def ToDictionary(self, includeRows:bool=True) -> dict:
        """
        Returns a json-friendly dictionary of the run.
        """
        result:dict = {
            "restart_index": self._fRestartIndex,
            "f_opt": JsonHelper.ToJsonValue(self._fFOpt),
            "x_opt": JsonHelper.ToJsonValue(self._fXOpt),
            "x0": JsonHelper.ToJsonValue(self._fX0),
            "iterations": self.Iterations,
            "evaluations": self._fEvaluations,
            "termination": self._fReason.name,
        }
        if (includeRows):
            result["trace"] = [list(row) for row in self._fRows]
        return result
