# external package imports.
# none

# our package imports.
from .spinsqueezeexception import SpinSqueezeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSArgumentOutOfRangeException(SpinSqueezeException):
    """
    The exception that is thrown when the value of an argument is outside the 
    allowable range of values as defined by the invoked method.

    Raised for capacity errors (number of qubits), qubit index errors, 
    array shape and length mismatches, and invalid argument combinations.
    """

    def __init__(self, paramName:str, detail:str=None) -> None:
        """
        Initializes a new instance of the class with the name of the parameter that causes this exception.

        Args:
            paramName (str):
                Name of the offending parameter.
            detail (str):
                Optional description of the allowed range.
        """
        message:str = "The \"{0}\" parameter is outside the allowable range of values as defined by the invoked method.".format(paramName)
        if (detail):
            message = message + " " + detail
        super().__init__(message)

        # initialize instance.
        self.__paramName = paramName
        self.__detail = detail


    @property
    def Detail(self) -> str:
        """ 
        Gets the description of the allowed range, if one was supplied.
        """
        return self.__detail


    @property
    def paramName(self) -> str:
        """ 
        Gets the name of the parameter that causes this exception.
        """
        return self.__paramName

    
    def __str__(self) -> str:
        """ 
        Gets the error message and the parameter name.
        """
        return "ArgumentOutOfRangeException: " + self.Message
