# external package imports.
import math

# our package imports.
# none

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSWitnessReport:
    """
    Entanglement-depth witness derived from the nonlinear squeezing parameter.

    A value of 1 / xi_NL^2 above an integer k signals (k + 1)-partite entanglement;
    DepthLowerBound is the smallest integer k with 1 / xi_NL^2 <= k.
    """

    SLACK:float = 1e-9
    """ Values within this slack of an integer are rounded down to it. """

    def __init__(self, invXi2Nl:float, qfiOverN:float=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            invXi2Nl (float):
                1 / xi_NL^2.
            qfiOverN (float):
                Quantum Fisher information bound divided by N, or None if not computed.
        """
        self._fInvXi2Nl:float = float(invXi2Nl)
        self._fQfiOverN:float = None if (qfiOverN is None) else float(qfiOverN)
        self._fDepthLowerBound:int = max(1, int(math.ceil(self._fInvXi2Nl - SSWitnessReport.SLACK)))


    def __repr__(self) -> str:
        return "SSWitnessReport(invXi2Nl={0:.6f}, qfiOverN={1}, depth>={2})".format(
            self._fInvXi2Nl, self._fQfiOverN, self._fDepthLowerBound)


    @property
    def DepthLowerBound(self) -> int:
        """ 
        Gets the smallest integer k with 1 / xi_NL^2 <= k.
        """
        return self._fDepthLowerBound


    @property
    def InvXi2Nl(self) -> float:
        """ 
        Gets 1 / xi_NL^2.
        """
        return self._fInvXi2Nl


    @property
    def QfiOverN(self) -> float:
        """ 
        Gets the quantum Fisher information bound divided by N.
        """
        return self._fQfiOverN


    def ToDictionary(self) -> dict:
        """
        Returns a json-friendly record of the report.
        """
        return {
            "inv_xi2_nl": self._fInvXi2Nl,
            "qfi_over_n": self._fQfiOverN,
            "depth_lower_bound": self._fDepthLowerBound,
        }
