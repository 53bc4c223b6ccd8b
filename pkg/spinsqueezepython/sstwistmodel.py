# our package imports.
from .ssenumcomparable import SSEnumComparable

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSTwistModel(SSEnumComparable):
    """
    Reference twisting Hamiltonians.
    """

    OAT = 0
    """
    One-axis twisting, H = Jz^2, started from the product of |+> states.
    """

    TAT = 1
    """
    Two-axis twisting, H = Jx^2 - Jy^2, started from |0...0>.
    """
