# external package imports.
# none

# our package imports.
# none

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SpinSqueezeException(Exception):
    """
    Used to report any kind of error raised by the Spin Squeeze library.

    This is the base class for all exceptions of the library.  It can be
    useful to have a look at its derived classes, SSConfigurationException
    and SSNumericalException, which provide additional information about
    the error besides the normal exception message.
    """
    def __init__(self, message, *args, **kwargs) -> None:
        """
        Initializes a new instance of the class.

        Args:
            message (object):
                The exception message.
        """

        # initialize base class.
        super(SpinSqueezeException, self).__init__(message, *args, **kwargs)
        self._fMessage:str = str(message)


    @property
    def Message(self) -> str:
        """ 
        Gets the error message.
        """
        return self._fMessage
