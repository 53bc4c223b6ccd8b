# our package imports.
from .ssenumcomparable import SSEnumComparable

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSSqueezingKind(SSEnumComparable):
    """
    Operator set used to build the squeezing matrices.
    """

    LINEAR = 0
    """
    Linear collective spin operators (Jx, Jy, Jz).
    """

    NONLINEAR = 1
    """
    Linear operators plus the second-order operators
    (Jx^2, Jy^2, Jz^2, Jxy^2, Jyz^2, Jzx^2), with Jab = (Ja + Jb) / sqrt(2).
    """


    @property
    def OperatorCount(self) -> int:
        """
        Gets the number of operators in the set (3 or 9).
        """
        return 3 if (self.value == 0) else 9
