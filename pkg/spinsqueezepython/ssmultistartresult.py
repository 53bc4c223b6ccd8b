# our package imports.
from .ssoptimizationtrace import SSOptimizationTrace

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSMultiStartResult:
    """
    All runs of a multi-start optimization and the winning run.

    Threadsafety:
        Instances are treated as immutable values.
    """

    def __init__(self, traces:list, nQubits:int=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            traces (list):
                SSOptimizationTrace of every run, in restart order.
            nQubits (int):
                Number of qubits of the optimized circuit, if any.

        The winner is the run with the lowest objective; ties go to the earliest run.
        """
        self._fTraces:list = list(traces)
        self._fNumQubits:int = nQubits
        best:SSOptimizationTrace = None
        for trace in self._fTraces:
            if (best is None) or (trace.FOpt < best.FOpt):
                best = trace
        self._fBest:SSOptimizationTrace = best


    def __repr__(self) -> str:
        return "SSMultiStartResult(runs={0}, best={1})".format(len(self._fTraces), self._fBest)


    @property
    def Best(self) -> SSOptimizationTrace:
        """ Gets the winning run. """
        return self._fBest

    @property
    def NumQubits(self) -> int:
        """ Gets the number of qubits of the optimized circuit (None for plain functions). """
        return self._fNumQubits

    @property
    def Traces(self) -> list:
        """ Gets every run in restart order. """
        return self._fTraces


    def ObjectiveValues(self) -> list:
        """ Returns the final objective value of every run. """
        return [t.FOpt for t in self._fTraces]


    def ToDictionary(self, includeRows:bool=False) -> dict:
        """
        Returns a json-friendly dictionary: the winner with its trace, and a summary of every run.
        """
        return {
            "n_qubits": self._fNumQubits,
            "best": self._fBest.ToDictionary(includeRows=True),
            "runs": [t.ToDictionary(includeRows=includeRows) for t in self._fTraces],
        }
