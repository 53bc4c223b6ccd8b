# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssconst import (FD_EPSILON_DEFAULT, GRAD_TOLERANCE_DEFAULT, INIT_RANGE_DEFAULT, MAX_ITERATIONS_DEFAULT,
                      RESTARTS_DEFAULT, WOLFE_C1_DEFAULT, WOLFE_C2_DEFAULT)

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSOptimizerConfig:
    """
    Settings of the BFGS optimizer, its random restarts and warm starts.

    Threadsafety:
        Instances are immutable and thread-safe.
    """

    def __init__(self, fdEpsilon:float=FD_EPSILON_DEFAULT, maxIterations:int=MAX_ITERATIONS_DEFAULT,
                 gradTolerance:float=GRAD_TOLERANCE_DEFAULT, restarts:int=RESTARTS_DEFAULT,
                 initRange:float=INIT_RANGE_DEFAULT, seed:int=0, wolfeC1:float=WOLFE_C1_DEFAULT,
                 wolfeC2:float=WOLFE_C2_DEFAULT, threads:int=1, warmStartRestarts:int=0) -> None:
        """
        Initializes a new instance of the class.

        Args:
            fdEpsilon (float):
                Forward finite-difference step (> 0).
            maxIterations (int):
                BFGS iteration cap (>= 1).
            gradTolerance (float):
                Infinity-norm gradient tolerance (>= 0).
            restarts (int):
                Number of random starts (>= 1).
            initRange (float):
                Initial parameters are drawn uniformly from [-initRange, initRange] (> 0).
            seed (int):
                Base seed; restart i draws from the stream (seed, i).
            wolfeC1 (float):
                Sufficient-decrease constant, 0 < c1 < c2.
            wolfeC2 (float):
                Curvature constant, c1 < c2 < 1.
            threads (int):
                Number of restarts run concurrently (>= 1); 1 is the determinism reference.
            warmStartRestarts (int):
                Fresh random starts run in addition to every warm start of a chain (>= 0).

        Raises:
            SSArgumentOutOfRangeException:
                A value is outside its allowed range.
        """
        if (fdEpsilon is None) or not (fdEpsilon > 0):
            raise SSArgumentOutOfRangeException("fdEpsilon", "Finite-difference step must be positive, got {0}.".format(fdEpsilon))
        if (maxIterations is None) or (int(maxIterations) != maxIterations) or (maxIterations < 1):
            raise SSArgumentOutOfRangeException("maxIterations", "Iteration cap must be an integer >= 1, got {0}.".format(maxIterations))
        if (gradTolerance is None) or not (gradTolerance >= 0):
            raise SSArgumentOutOfRangeException("gradTolerance", "Gradient tolerance must be >= 0, got {0}.".format(gradTolerance))
        if (restarts is None) or (int(restarts) != restarts) or (restarts < 1):
            raise SSArgumentOutOfRangeException("restarts", "Restarts must be an integer >= 1, got {0}.".format(restarts))
        if (initRange is None) or not (initRange > 0):
            raise SSArgumentOutOfRangeException("initRange", "Initial range must be positive, got {0}.".format(initRange))
        if (seed is None) or (int(seed) != seed) or (seed < 0):
            raise SSArgumentOutOfRangeException("seed", "Seed must be a non-negative integer, got {0}.".format(seed))
        if (wolfeC1 is None) or (wolfeC2 is None) or not (0 < wolfeC1 < wolfeC2 < 1):
            raise SSArgumentOutOfRangeException("wolfeC1", "Wolfe constants must satisfy 0 < c1 < c2 < 1, got ({0}, {1}).".format(wolfeC1, wolfeC2))
        if (threads is None) or (int(threads) != threads) or (threads < 1):
            raise SSArgumentOutOfRangeException("threads", "Threads must be an integer >= 1, got {0}.".format(threads))
        if (warmStartRestarts is None) or (int(warmStartRestarts) != warmStartRestarts) or (warmStartRestarts < 0):
            raise SSArgumentOutOfRangeException("warmStartRestarts", "Warm start restarts must be an integer >= 0, got {0}.".format(warmStartRestarts))

        self._fFdEpsilon:float = float(fdEpsilon)
        self._fMaxIterations:int = int(maxIterations)
        self._fGradTolerance:float = float(gradTolerance)
        self._fRestarts:int = int(restarts)
        self._fInitRange:float = float(initRange)
        self._fSeed:int = int(seed)
        self._fWolfeC1:float = float(wolfeC1)
        self._fWolfeC2:float = float(wolfeC2)
        self._fThreads:int = int(threads)
        self._fWarmStartRestarts:int = int(warmStartRestarts)


    def __repr__(self) -> str:
        return "SSOptimizerConfig({0})".format(", ".join("{0}={1}".format(k, v) for k, v in self.ToDictionary().items()))


    @property
    def FdEpsilon(self) -> float:
        """ Gets the forward finite-difference step. """
        return self._fFdEpsilon

    @property
    def GradTolerance(self) -> float:
        """ Gets the infinity-norm gradient tolerance. """
        return self._fGradTolerance

    @property
    def InitRange(self) -> float:
        """ Gets the half width of the uniform initial parameter distribution. """
        return self._fInitRange

    @property
    def MaxIterations(self) -> int:
        """ Gets the BFGS iteration cap. """
        return self._fMaxIterations

    @property
    def Restarts(self) -> int:
        """ Gets the number of random starts. """
        return self._fRestarts

    @property
    def Seed(self) -> int:
        """ Gets the base seed. """
        return self._fSeed

    @property
    def Threads(self) -> int:
        """ Gets the number of restarts run concurrently. """
        return self._fThreads

    @property
    def WarmStartRestarts(self) -> int:
        """ Gets the number of fresh random starts added to every warm start. """
        return self._fWarmStartRestarts

    @property
    def WolfeC1(self) -> float:
        """ Gets the sufficient-decrease constant. """
        return self._fWolfeC1

    @property
    def WolfeC2(self) -> float:
        """ Gets the curvature constant. """
        return self._fWolfeC2


    def With(self, **changes) -> 'SSOptimizerConfig':
        """
        Returns a copy with some settings replaced (keyword names as in the constructor).
        """
        values:dict = {
            "fdEpsilon": self._fFdEpsilon,
            "maxIterations": self._fMaxIterations,
            "gradTolerance": self._fGradTolerance,
            "restarts": self._fRestarts,
            "initRange": self._fInitRange,
            "seed": self._fSeed,
            "wolfeC1": self._fWolfeC1,
            "wolfeC2": self._fWolfeC2,
            "threads": self._fThreads,
            "warmStartRestarts": self._fWarmStartRestarts,
        }
        for key in changes:
            if (key not in values):
                raise SSArgumentOutOfRangeException(key, "Unknown optimizer setting \"{0}\".".format(key))
        values.update(changes)
        return SSOptimizerConfig(**values)


    def ToDictionary(self) -> dict:
        """
        Returns the json record of the settings.
        """
        return {
            "fd_epsilon": self._fFdEpsilon,
            "max_iterations": self._fMaxIterations,
            "grad_tolerance": self._fGradTolerance,
            "restarts": self._fRestarts,
            "init_range": self._fInitRange,
            "seed": self._fSeed,
            "wolfe_c1": self._fWolfeC1,
            "wolfe_c2": self._fWolfeC2,
            "threads": self._fThreads,
            "warm_start_restarts": self._fWarmStartRestarts,
        }


    @staticmethod
    def FromDictionary(record:dict, seed:int=None) -> 'SSOptimizerConfig':
        """
        Creates a config from a json record; missing fields take their defaults.

        Args:
            record (dict):
                Json record with the keys produced by ToDictionary.
            seed (int):
                Optional seed overriding the record.
        """
        record = record or {}
        return SSOptimizerConfig(
            fdEpsilon=record.get("fd_epsilon", FD_EPSILON_DEFAULT),
            maxIterations=record.get("max_iterations", MAX_ITERATIONS_DEFAULT),
            gradTolerance=record.get("grad_tolerance", GRAD_TOLERANCE_DEFAULT),
            restarts=record.get("restarts", RESTARTS_DEFAULT),
            initRange=record.get("init_range", INIT_RANGE_DEFAULT),
            seed=record.get("seed", 0) if (seed is None) else seed,
            wolfeC1=record.get("wolfe_c1", WOLFE_C1_DEFAULT),
            wolfeC2=record.get("wolfe_c2", WOLFE_C2_DEFAULT),
            threads=record.get("threads", 1),
            warmStartRestarts=record.get("warm_start_restarts", 0))
