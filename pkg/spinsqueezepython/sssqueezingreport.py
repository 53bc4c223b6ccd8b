# external package imports.
import numpy as np

# our package imports.
from .sssqueezingkind import SSSqueezingKind

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSSqueezingReport:
    """
    Result of a squeezing evaluation: the squeezing parameter, the largest
    eigenvalue of the squeezing matrix, and the matrices it was built from.

    The covariance matrix V and the commutator matrix C are d x d, with d = 3
    (linear operator set) or d = 9 (nonlinear operator set).  The squeezing
    matrix M is 3 x 3 when built over the linear generators (the default), or
    d x d when built over the full operator set.

    Threadsafety:
        Instances are treated as immutable values.
    """

    def __init__(self, nQubits:int, kind:SSSqueezingKind, xi2:float, lambdaMax:float,
                 means:np.ndarray, V:np.ndarray, C:np.ndarray, M:np.ndarray, pseudoRank:int) -> None:
        """
        Initializes a new instance of the class.
        """
        self._fNumQubits:int = int(nQubits)
        self._fKind:SSSqueezingKind = kind
        self._fXi2:float = float(xi2)
        self._fLambdaMax:float = float(lambdaMax)
        self._fMeans:np.ndarray = means
        self._fV:np.ndarray = V
        self._fC:np.ndarray = C
        self._fM:np.ndarray = M
        self._fPseudoRank:int = int(pseudoRank)
        self._fStandardError:float = None


    def __repr__(self) -> str:
        return "SSSqueezingReport(kind={0}, N={1}, xi2={2:.8f}, lambdaMax={3:.8f}, rank={4})".format(
            self._fKind.name, self._fNumQubits, self._fXi2, self._fLambdaMax, self._fPseudoRank)


    @property
    def C(self) -> np.ndarray:
        """ 
        Gets the commutator matrix C_ij = -i <[S_i, S_j]> (antisymmetric).
        """
        return self._fC


    @property
    def Dimension(self) -> int:
        """ 
        Gets the number of operators d in the operator set.
        """
        return self._fV.shape[0]


    @property
    def InverseXi2(self) -> float:
        """ 
        Gets 1 / xi^2 = lambda_max / N (0 when xi^2 is infinite).
        """
        return self._fLambdaMax / self._fNumQubits


    @property
    def IsInfinite(self) -> bool:
        """ 
        Gets whether the squeezing parameter is infinite (lambda_max = 0).
        """
        return bool(np.isinf(self._fXi2))


    @property
    def Kind(self) -> SSSqueezingKind:
        """ 
        Gets the operator set the report was built from.
        """
        return self._fKind


    @property
    def LambdaMax(self) -> float:
        """ 
        Gets the largest eigenvalue of the squeezing matrix M.
        """
        return self._fLambdaMax


    @property
    def M(self) -> np.ndarray:
        """ 
        Gets the squeezing matrix M = C^T V^+ C (symmetric, positive semi-definite).
        """
        return self._fM


    @property
    def Means(self) -> np.ndarray:
        """ 
        Gets the expectation values <S_i>.
        """
        return self._fMeans


    @property
    def NumQubits(self) -> int:
        """ 
        Gets the number of qubits N.
        """
        return self._fNumQubits


    @property
    def PseudoRank(self) -> int:
        """ 
        Gets the rank of V used by the pseudo-inverse.
        """
        return self._fPseudoRank


    @property
    def StandardError(self) -> float:
        """ 
        Gets the bootstrap standard error of xi^2 (shot-estimated reports only; otherwise None).
        """
        return self._fStandardError

    @StandardError.setter
    def StandardError(self, value:float) -> None:
        """ 
        Sets the bootstrap standard error of xi^2.
        """
        self._fStandardError = None if (value is None) else float(value)


    @property
    def V(self) -> np.ndarray:
        """ 
        Gets the symmetrized covariance matrix V_ij = <{S_i, S_j}>/2 - <S_i><S_j>.
        """
        return self._fV


    @property
    def Xi2(self) -> float:
        """ 
        Gets the squeezing parameter xi^2 = N / lambda_max (inf when lambda_max = 0).
        """
        return self._fXi2


    def ToDictionary(self) -> dict:
        """
        Returns a json-friendly record of the report (matrices row-major).
        """
        return JsonHelper.ToJsonValue({
            "kind": self._fKind.name,
            "n_qubits": self._fNumQubits,
            "xi2": self._fXi2,
            "lambda_max": self._fLambdaMax,
            "pseudo_rank": self._fPseudoRank,
            "standard_error": self._fStandardError,
            "means": self._fMeans,
            "V": self._fV,
            "C": self._fC,
            "M": self._fM,
        })
