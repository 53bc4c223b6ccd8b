# external package imports.
import numpy as np

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSHusimiGrid:
    """
    Husimi Q values on a (Theta, Phi) grid; rows follow Theta, columns follow Phi.

    Threadsafety:
        Instances are treated as immutable values.
    """

    def __init__(self, thetas:np.ndarray, phis:np.ndarray, values:np.ndarray) -> None:
        self._fThetas:np.ndarray = np.asarray(thetas, dtype=float)
        self._fPhis:np.ndarray = np.asarray(phis, dtype=float)
        self._fValues:np.ndarray = np.asarray(values, dtype=float)


    def __repr__(self) -> str:
        return "SSHusimiGrid({0}x{1}, max={2:.6f})".format(self._fThetas.shape[0], self._fPhis.shape[0], self.MaxValue)


    @property
    def MaxValue(self) -> float:
        """ Gets the largest Q value. """
        return float(self._fValues.max())

    @property
    def Phis(self) -> np.ndarray:
        """ Gets the azimuthal angles, uniform on [0, 2 pi). """
        return self._fPhis

    @property
    def Thetas(self) -> np.ndarray:
        """ Gets the polar angles, uniform on [0, pi]. """
        return self._fThetas

    @property
    def Values(self) -> np.ndarray:
        """ Gets the Q values, shape (thetas, phis). """
        return self._fValues


    def ArgMax(self) -> tuple:
        """
        Returns the (Theta, Phi) grid point of the largest Q value.
        """
        i, j = np.unravel_index(int(np.argmax(self._fValues)), self._fValues.shape)
        return float(self._fThetas[i]), float(self._fPhis[j])


    def Rows(self) -> list:
        """
        Returns (theta, phi, q) rows for csv output.
        """
        return [(float(t), float(p), float(self._fValues[i, j]))
                for i, t in enumerate(self._fThetas) for j, p in enumerate(self._fPhis)]


    def ToDictionary(self) -> dict:
        """
        Returns a json-friendly dictionary of the grid.
        """
        return {
            "theta": JsonHelper.ToJsonValue(self._fThetas),
            "phi": JsonHelper.ToJsonValue(self._fPhis),
            "q": JsonHelper.ToJsonValue(self._fValues),
        }
