# our package imports.
from .ssenumcomparable import SSEnumComparable

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSTerminationReason(SSEnumComparable):
    """
    Why a BFGS run stopped.
    """

    GRADIENT_TOLERANCE = 0
    """
    The infinity norm of the gradient fell below the tolerance.
    """

    MAX_ITERATIONS = 1
    """
    The iteration cap was reached.
    """

    LINE_SEARCH_FAILURE = 2
    """
    No step satisfying the strong Wolfe conditions was found; the best point so far is returned.
    """
