# external package imports.
# none

# our package imports.
from .spinsqueezeexception import SpinSqueezeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSNumericalException(SpinSqueezeException):
    """
    Used to report numerical failures: propagators that do not converge,
    objectives that return non-finite values, samplers that cannot reach 
    their target, and degenerate histograms.  The command-line interface
    maps it to exit code 3.
    """

    def __init__(self, message:str, diagnostics:dict=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            message (str):
                The exception message.
            diagnostics (dict):
                Values describing the failure (step sizes, error estimates,
                parameter indices, ...).
        """
        super().__init__(message)

        # initialize instance.
        self._fDiagnostics:dict = dict(diagnostics) if diagnostics else {}


    @property
    def Diagnostics(self) -> dict:
        """ 
        Gets the values describing the failure.
        """
        return self._fDiagnostics


    def __str__(self) -> str:
        if (self._fDiagnostics):
            details:str = ", ".join("{0}={1}".format(k, v) for k, v in self._fDiagnostics.items())
            return "{0} ({1})".format(self.Message, details)
        return self.Message
