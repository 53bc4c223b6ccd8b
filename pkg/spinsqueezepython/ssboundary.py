# our package imports.
from .ssenumcomparable import SSEnumComparable

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSBoundary(SSEnumComparable):
    """
    Boundary condition of the qubit chain.
    """

    PBC = 0
    """
    Periodic boundary: qubits N and 1 are coupled by the second entangler layer.
    """

    OBC = 1
    """
    Open boundary: the gate on the pair (N, 1) is omitted.
    """
