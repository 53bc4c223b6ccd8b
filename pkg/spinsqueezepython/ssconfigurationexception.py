# external package imports.
# none

# our package imports.
from .spinsqueezeexception import SpinSqueezeException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSConfigurationException(SpinSqueezeException):
    """
    Used to report errors concerning experiment configurations.

    This exception is raised when an experiment configuration file cannot 
    be found or parsed, or when its contents violate the configuration schema
    (unknown keys, values of the wrong type, values outside their range).
    The command-line interface maps it to exit code 2.
    """

    def __init__(self, message:str, fileName:str=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            message (str):
                The exception message.
            fileName (str):
                The name of the configuration file that caused the error, 
                or None if the configuration did not come from a file.
        """
        super().__init__(message)

        # initialize instance.
        self._fFileName:str = fileName


    @property
    def FileName(self) -> str:
        """ 
        Gets the name of the configuration file that caused this error.
        """
        return self._fFileName
    
    @FileName.setter
    def FileName(self, value:str) -> None:
        """ 
        Sets the name of the configuration file that caused this error.
        """
        self._fFileName = value


    def __str__(self) -> str:
        if (self._fFileName):
            return "{0} (file \"{1}\")".format(self.Message, self._fFileName)
        return self.Message
