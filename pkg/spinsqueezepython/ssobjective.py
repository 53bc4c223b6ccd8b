# external package imports.
import threading

import numpy as np

# our package imports.
from .ssansatz import SSAnsatz
from .ssansatzspec import SSAnsatzSpec
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .sscollectivespin import SSCollectiveSpin
from .ssconst import FSIM_OPTIMIZED_ANGLES
from .ssevolutionconfig import SSEvolutionConfig
from .sssqueezingkind import SSSqueezingKind
from .sssqueezingreport import SSSqueezingReport
from .ssstatevector import SSStateVector

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSObjective:
    """
    Squeezing parameter of a circuit family as a function of its free parameters.

    Parameters listed in the frozen map keep their value; the callable takes the
    remaining parameters in layout order.  Evaluations are exact (no sampling),
    so two calls at the same point return the same value.

    Threadsafety:
        Calls may run concurrently; the evaluation counter is lock protected.
    """

    def __init__(self, spec:SSAnsatzSpec, kind:SSSqueezingKind=SSSqueezingKind.LINEAR, frozen:dict=None,
                 bondGates:list=None, evolution:SSEvolutionConfig=None, fullGenerators:bool=False) -> None:
        """
        Initializes a new instance of the class.

        Args:
            spec (SSAnsatzSpec):
                Circuit family.
            kind (SSSqueezingKind):
                LINEAR or NONLINEAR squeezing parameter.
            frozen (dict):
                Map of parameter index to fixed value.
            bondGates (list):
                Optional per-bond two-qubit gates replacing the FSIM gates.
            evolution (SSEvolutionConfig):
                Propagator settings for analog families.
            fullGenerators (bool):
                False (default, configuration key objective.full_generators) restricts the
                generators to Jx, Jy, Jz, so the nonlinear squeezing matrix is 3 x 3.
                True builds it over every operator of the set (d x d).

        Raises:
            SSArgumentOutOfRangeException:
                A frozen index is outside the parameter vector.
        """
        if (spec is None):
            raise SSArgumentNullException("spec")
        frozen = dict(frozen or {})
        for index in frozen:
            if (int(index) != index) or (index < 0) or (index >= spec.ParamCount):
                raise SSArgumentOutOfRangeException("frozen", "Frozen index {0} is outside 0..{1}.".format(index, spec.ParamCount - 1))

        self._fSpec:SSAnsatzSpec = spec
        self._fKind:SSSqueezingKind = SSSqueezingKind.Parse(kind)
        self._fFrozen:dict = {int(k): float(v) for k, v in frozen.items()}
        self._fBondGates:list = bondGates
        self._fEvolution:SSEvolutionConfig = evolution
        self._fFullGenerators:bool = bool(fullGenerators)
        self._fFreeIndices:np.ndarray = np.array([i for i in range(spec.ParamCount) if (i not in self._fFrozen)], dtype=int)
        self._fEvaluationCount:int = 0
        self._fLock = threading.Lock()


    def __call__(self, xFree) -> float:
        return self.Report(xFree).Xi2


    def __repr__(self) -> str:
        return "SSObjective({0}, {1}, free={2})".format(self._fSpec, self._fKind.name, self.FreeCount)


    @property
    def BondGates(self) -> list:
        """ Gets the per-bond gates, or None. """
        return self._fBondGates

    @property
    def EvaluationCount(self) -> int:
        """ Gets the number of evaluations so far. """
        return self._fEvaluationCount

    @property
    def Evolution(self) -> SSEvolutionConfig:
        """ Gets the propagator settings. """
        return self._fEvolution

    @property
    def FreeCount(self) -> int:
        """ Gets the number of free parameters. """
        return int(self._fFreeIndices.shape[0])

    @property
    def FreeIndices(self) -> np.ndarray:
        """ Gets the layout indexes of the free parameters. """
        return self._fFreeIndices

    @property
    def Frozen(self) -> dict:
        """ Gets a copy of the frozen parameter map. """
        return dict(self._fFrozen)

    @property
    def Kind(self) -> SSSqueezingKind:
        """ Gets the squeezing parameter kind. """
        return self._fKind

    @property
    def Spec(self) -> SSAnsatzSpec:
        """ Gets the circuit family. """
        return self._fSpec


    def FullVector(self, xFree) -> np.ndarray:
        """
        Returns the full parameter vector for the given free parameters.
        """
        xFree = np.asarray(xFree, dtype=float).reshape(-1)
        if (xFree.shape[0] != self.FreeCount):
            raise SSArgumentOutOfRangeException("xFree", "Expected {0} free parameters, got {1}.".format(self.FreeCount, xFree.shape[0]))
        x = np.empty(self._fSpec.ParamCount)
        x[self._fFreeIndices] = xFree
        for index, value in self._fFrozen.items():
            x[index] = value
        return x


    def FreeVector(self, x) -> np.ndarray:
        """
        Returns the free parameters of a full parameter vector.
        """
        x = SSAnsatz.CheckParameters(self._fSpec, x)
        return x[self._fFreeIndices].copy()


    def State(self, xFree) -> SSStateVector:
        """
        Returns the circuit state for the given free parameters.
        """
        return SSAnsatz.BuildState(self._fSpec, self.FullVector(xFree), self._fBondGates, self._fEvolution)


    def Report(self, xFree) -> SSSqueezingReport:
        """
        Returns the full squeezing report for the given free parameters.
        """
        report = SSCollectiveSpin.Squeezing(self.State(xFree), self._fKind, self._fFullGenerators)
        with self._fLock:
            self._fEvaluationCount += 1
        return report


    @staticmethod
    def FrozenEntanglers(spec:SSAnsatzSpec, theta:float, phi:float) -> dict:
        """
        Returns the frozen map fixing every FSIM (theta, phi) pair of a spec.

        Raises:
            SSArgumentOutOfRangeException:
                The family has no FSIM parameters (analog families).
        """
        layout = SSAnsatz.ParameterLayout(spec)
        frozen:dict = {d.Index: (theta if (d.Name == "theta") else phi) for d in layout if (d.Block == "entangler")}
        if (len(frozen) == 0):
            raise SSArgumentOutOfRangeException("spec", "{0} has no FSIM parameters to freeze.".format(spec.Family.name))
        return frozen


    @staticmethod
    def TableAngles(depth:int, nQubits:int) -> tuple:
        """
        Returns the tabulated optimized FSIM angles (theta, phi) of the shared family
        with periodic boundaries.

        Raises:
            SSArgumentOutOfRangeException:
                No angles are tabulated for this depth and number of qubits.
        """
        try:
            return FSIM_OPTIMIZED_ANGLES[int(depth)][int(nQubits)]
        except KeyError:
            raise SSArgumentOutOfRangeException("depth", "No tabulated FSIM angles for p={0}, N={1}.".format(depth, nQubits)) from None
