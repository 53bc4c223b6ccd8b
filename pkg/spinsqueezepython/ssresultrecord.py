# system imports.
import time

# our package imports.
from .ssconst import SCHEMA_VERSION, VERSION
from .ssfilehelper import SSFileHelper

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSResultRecord:
    """
    Result of a command: the configuration echo with its hash, the seed, the software
    version, the wall time and the command-specific payload.

    The payload depends only on the configuration and the seed; the wall time is
    kept outside of it.

    Threadsafety:
        This class is not guaranteed to be thread-safe.
    """

    def __init__(self, command:str, config:dict, configHash:str, seed:int) -> None:
        """
        Initializes a new instance of the class and starts its wall clock.

        Args:
            command (str):
                Command name ("optimize", "twist", "analyze.husimi", ...).
            config (dict):
                Validated configuration echo.
            configHash (str):
                Sha256 digest of the configuration.
            seed (int):
                Seed used by the command.
        """
        self._fCommand:str = command
        self._fConfig:dict = dict(config or {})
        self._fConfigHash:str = configHash
        self._fSeed:int = seed
        self._fPayload:dict = {}
        self._fStarted:float = time.perf_counter()
        self._fWallTime:float = None


    @property
    def Command(self) -> str:
        """ Gets the command name. """
        return self._fCommand

    @property
    def ConfigHash(self) -> str:
        """ Gets the configuration digest. """
        return self._fConfigHash

    @property
    def Payload(self) -> dict:
        """ Gets the command-specific payload; commands fill it in place. """
        return self._fPayload

    @property
    def Seed(self) -> int:
        """ Gets the seed. """
        return self._fSeed

    @property
    def WallTime(self) -> float:
        """ Gets the elapsed seconds between creation and Finish(), or None. """
        return self._fWallTime


    def Finish(self) -> 'SSResultRecord':
        """
        Stops the wall clock.
        """
        self._fWallTime = time.perf_counter() - self._fStarted
        return self


    def Provenance(self) -> dict:
        """
        Returns the provenance lines written at the top of every csv file.
        """
        return {"config_hash": self._fConfigHash, "seed": self._fSeed}


    def ToDictionary(self) -> dict:
        """
        Returns the json record of the result.
        """
        return {
            "schema_version": SCHEMA_VERSION,
            "software_version": VERSION,
            "command": self._fCommand,
            "config": JsonHelper.ToJsonValue(self._fConfig),
            "config_hash": self._fConfigHash,
            "seed": self._fSeed,
            "wall_time": self._fWallTime,
            "payload": JsonHelper.ToJsonValue(self._fPayload),
        }


    def WriteToFile(self, fileName:str) -> str:
        """
        Writes the record as json and returns the file name.
        """
        return SSFileHelper.WriteJson(fileName, self.ToDictionary())
