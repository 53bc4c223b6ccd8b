# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssconst import KRYLOV_DIM_DEFAULT, KRYLOV_MAX_SUBSTEPS_DEFAULT, KRYLOV_TOLERANCE_DEFAULT

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSEvolutionConfig:
    """
    Settings of the Krylov (Lanczos) propagator used for the XY evolution.

    Threadsafety:
        Instances are immutable and thread-safe.
    """

    def __init__(self, krylovDim:int=KRYLOV_DIM_DEFAULT, tolerance:float=KRYLOV_TOLERANCE_DEFAULT,
                 maxSubsteps:int=KRYLOV_MAX_SUBSTEPS_DEFAULT) -> None:
        """
        Initializes a new instance of the class.

        Args:
            krylovDim (int):
                Krylov subspace dimension (>= 4).
            tolerance (float):
                Error tolerance of a full evolution (> 0).
            maxSubsteps (int):
                Maximum number of accepted time substeps (>= 1).

        Raises:
            SSArgumentOutOfRangeException:
                A value is outside its allowed range.
        """
        if (krylovDim is None) or (int(krylovDim) != krylovDim) or (krylovDim < 4):
            raise SSArgumentOutOfRangeException("krylovDim", "Krylov dimension must be an integer >= 4.")
        if (tolerance is None) or (not (tolerance > 0.0)):
            raise SSArgumentOutOfRangeException("tolerance", "Tolerance must be positive.")
        if (maxSubsteps is None) or (int(maxSubsteps) != maxSubsteps) or (maxSubsteps < 1):
            raise SSArgumentOutOfRangeException("maxSubsteps", "Maximum substeps must be an integer >= 1.")

        self._fKrylovDim:int = int(krylovDim)
        self._fTolerance:float = float(tolerance)
        self._fMaxSubsteps:int = int(maxSubsteps)


    def __repr__(self) -> str:
        return "SSEvolutionConfig(krylovDim={0}, tolerance={1:g}, maxSubsteps={2})".format(self._fKrylovDim, self._fTolerance, self._fMaxSubsteps)


    @property
    def KrylovDim(self) -> int:
        """ Gets the Krylov subspace dimension. """
        return self._fKrylovDim


    @property
    def MaxSubsteps(self) -> int:
        """ Gets the maximum number of accepted time substeps. """
        return self._fMaxSubsteps


    @property
    def Tolerance(self) -> float:
        """ Gets the error tolerance of a full evolution. """
        return self._fTolerance


    def ToDictionary(self) -> dict:
        """
        Returns the json record {krylov_dim, tolerance, max_substeps}.
        """
        return {
            "krylov_dim": self._fKrylovDim,
            "tolerance": self._fTolerance,
            "max_substeps": self._fMaxSubsteps,
        }


    @staticmethod
    def FromDictionary(record:dict) -> 'SSEvolutionConfig':
        """
        Creates a config from a json record; missing fields take their defaults.
        """
        record = record or {}
        return SSEvolutionConfig(
            record.get("krylov_dim", KRYLOV_DIM_DEFAULT),
            record.get("tolerance", KRYLOV_TOLERANCE_DEFAULT),
            record.get("max_substeps", KRYLOV_MAX_SUBSTEPS_DEFAULT))
