# external package imports.
# none

# our package imports.
from .ssconfigurationexception import SSConfigurationException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSUnsupportedConfigurationException(SSConfigurationException):
    """
    Used to report a configuration that is well formed but requests a
    combination the library does not support, such as a
    warm-start chain over a circuit family whose parameter count depends
    on the number of qubits.
    """
    pass
