# external package imports.
import numpy as np

# our package imports.
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSAxis:
    """
    Measurement axis c * (n . J), with n a unit 3-vector and c >= 1 a real scale.

    Threadsafety:
        Instances are immutable and thread-safe.
    """

    def __init__(self, direction, scale:float=1.0, name:str=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            direction (array-like):
                Unit 3-vector n.
            scale (float):
                Scale c >= 1.
            name (str):
                Display name of the axis (e.g. "xy").

        Raises:
            SSArgumentOutOfRangeException:
                The direction is not a unit 3-vector, or the scale is below 1.
        """
        n = np.array(direction, dtype=float).reshape(-1)
        if (n.shape[0] != 3):
            raise SSArgumentOutOfRangeException("direction", "Axis direction must have 3 components.")
        if (abs(np.linalg.norm(n) - 1.0) > 1e-12):
            raise SSArgumentOutOfRangeException("direction", "Axis direction must be a unit vector (norm {0}).".format(np.linalg.norm(n)))
        if (not np.isfinite(scale)) or (scale < 1.0):
            raise SSArgumentOutOfRangeException("scale", "Axis scale must be >= 1, got {0}.".format(scale))

        n.setflags(write=False)
        self._fDirection:np.ndarray = n
        self._fScale:float = float(scale)
        self._fName:str = name if name else "({0:.4f},{1:.4f},{2:.4f})".format(*n)


    def __repr__(self) -> str:
        return "SSAxis({0}, scale={1:.6f})".format(self._fName, self._fScale)


    @property
    def Direction(self) -> np.ndarray:
        """ 
        Gets the unit direction n (read-only array).
        """
        return self._fDirection


    @property
    def Name(self) -> str:
        """ 
        Gets the display name of the axis.
        """
        return self._fName


    @property
    def Scale(self) -> float:
        """ 
        Gets the scale c.
        """
        return self._fScale


    @staticmethod
    def FromCombination(coefficients, name:str=None) -> 'SSAxis':
        """
        Creates the axis of the operator a Jx + b Jy + c Jz.

        Args:
            coefficients (array-like):
                The coefficients (a, b, c); their norm becomes the scale.
            name (str):
                Display name of the axis.

        For example (1, sqrt(3), 0) / sqrt(2) gives direction (1, sqrt(3), 0) / 2 and scale sqrt(2).
        """
        v = np.asarray(coefficients, dtype=float)
        norm:float = float(np.linalg.norm(v))
        if (norm == 0.0):
            raise SSArgumentOutOfRangeException("coefficients", "Axis coefficients cannot all be zero.")
        return SSAxis(v / norm, norm, name)


    @staticmethod
    def X() -> 'SSAxis':
        """ Returns the Jx axis. """
        return SSAxis((1.0, 0.0, 0.0), 1.0, "x")


    @staticmethod
    def Y() -> 'SSAxis':
        """ Returns the Jy axis. """
        return SSAxis((0.0, 1.0, 0.0), 1.0, "y")


    @staticmethod
    def Z() -> 'SSAxis':
        """ Returns the Jz axis. """
        return SSAxis((0.0, 0.0, 1.0), 1.0, "z")


    @staticmethod
    def LinearAxes() -> list:
        """
        Returns the six readout axes needed for the linear squeezing parameter:
        x, y, z, xy, yz, zx, with Jab = (Ja + Jb) / sqrt(2).
        """
        r2:float = np.sqrt(2.0)
        return [
            SSAxis.X(),
            SSAxis.Y(),
            SSAxis.Z(),
            SSAxis.FromCombination((1 / r2, 1 / r2, 0), "xy"),
            SSAxis.FromCombination((0, 1 / r2, 1 / r2), "yz"),
            SSAxis.FromCombination((1 / r2, 0, 1 / r2), "zx"),
        ]


    @staticmethod
    def NonlinearAxes() -> list:
        """
        Returns the nineteen readout axes needed for the nonlinear squeezing parameter.

        The set holds x, y, z; the diagonal axes (Ja +/- Jb) / sqrt(2);
        the axes (Ja +/- sqrt(3) Jb) / sqrt(2); and the four body diagonals
        (+/-Jx +/- Jy +/- Jz) / sqrt(3) with one sign pattern per octant pair.
        """
        r2:float = np.sqrt(2.0)
        r3:float = np.sqrt(3.0)
        axes:list = SSAxis.LinearAxes()
        axes += [
            SSAxis.FromCombination((1 / r2, -1 / r2, 0), "x-y"),
            SSAxis.FromCombination((0, 1 / r2, -1 / r2), "y-z"),
            SSAxis.FromCombination((-1 / r2, 0, 1 / r2), "z-x"),
            SSAxis.FromCombination((1 / r2, r3 / r2, 0), "xy'"),
            SSAxis.FromCombination((0, 1 / r2, r3 / r2), "yz'"),
            SSAxis.FromCombination((r3 / r2, 0, 1 / r2), "zx'"),
            SSAxis.FromCombination((1 / r2, -r3 / r2, 0), "x-y'"),
            SSAxis.FromCombination((0, 1 / r2, -r3 / r2), "y-z'"),
            SSAxis.FromCombination((-r3 / r2, 0, 1 / r2), "z-x'"),
            SSAxis.FromCombination((1 / r3, 1 / r3, 1 / r3), "xyz"),
            SSAxis.FromCombination((-1 / r3, 1 / r3, 1 / r3), "-xyz"),
            SSAxis.FromCombination((1 / r3, -1 / r3, 1 / r3), "x-yz"),
            SSAxis.FromCombination((1 / r3, 1 / r3, -1 / r3), "xy-z"),
        ]
        return axes
