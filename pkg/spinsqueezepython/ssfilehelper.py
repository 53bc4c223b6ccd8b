# system imports.
import csv
import json
import os

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssconfigurationexception import SSConfigurationException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSFileHelper:
    """
    Writes result files: json records and csv tables that start with
    provenance comment lines.

    A csv file written by this class looks like:

        # config_hash=3f5a...
        # seed=7
        tau,xi2
        0.0,1.0
        ...

    Threadsafety:
        This class is not guaranteed to be thread-safe.
    """

    COMMENT_PREFIX:str = "# "

    @staticmethod
    def EnsureDirectory(path:str) -> str:
        """
        Creates a directory (and its parents) if it does not exist yet.

        Returns:
            The directory path.

        Raises:
            SSConfigurationException:
                The directory could not be created.
        """
        if (path is None):
            raise SSArgumentNullException("path")
        try:
            os.makedirs(path, exist_ok=True)
        except OSError as ex:
            raise SSConfigurationException("Output directory \"{0}\" could not be created: {1}".format(path, ex.strerror or ex)) from ex
        return path


    @staticmethod
    def WriteJson(fileName:str, record:object) -> str:
        """
        Writes a record as indented json (numpy values converted, keys sorted).

        Returns:
            The file name.
        """
        if (fileName is None):
            raise SSArgumentNullException("fileName")
        folder:str = os.path.dirname(fileName)
        if (folder):
            SSFileHelper.EnsureDirectory(folder)
        with open(fileName, "w", encoding="utf-8") as writer:
            json.dump(JsonHelper.ToJsonValue(record), writer, indent=2, sort_keys=True)
            writer.write("\n")
        return fileName


    @staticmethod
    def ReadJson(fileName:str) -> object:
        """
        Reads a json file.

        Raises:
            SSConfigurationException:
                The file is missing or is not valid json.
        """
        if (fileName is None):
            raise SSArgumentNullException("fileName")
        try:
            with open(fileName, "r", encoding="utf-8") as reader:
                return json.load(reader)
        except (OSError, json.JSONDecodeError) as ex:
            raise SSConfigurationException("File could not be read as json: {0}".format(ex), fileName) from ex


    @staticmethod
    def WriteCsv(fileName:str, header:list, rows:list, provenance:dict=None) -> str:
        """
        Writes a csv table preceded by "# key=value" provenance lines.

        Args:
            fileName (str):
                Output file name.
            header (list):
                Column names.
            rows (list):
                Row sequences.
            provenance (dict):
                Values written as comment lines, in order (config_hash and seed).

        Returns:
            The file name.
        """
        if (fileName is None):
            raise SSArgumentNullException("fileName")
        folder:str = os.path.dirname(fileName)
        if (folder):
            SSFileHelper.EnsureDirectory(folder)
        with open(fileName, "w", encoding="utf-8", newline="") as writer:
            for key, value in (provenance or {}).items():
                writer.write("{0}{1}={2}\n".format(SSFileHelper.COMMENT_PREFIX, key, value))
            table = csv.writer(writer)
            table.writerow(header)
            for row in rows:
                table.writerow([repr(v) if isinstance(v, float) else v for v in row])
        return fileName


    @staticmethod
    def ReadCsvProvenance(fileName:str) -> dict:
        """
        Returns the "# key=value" provenance lines at the top of a csv file.
        """
        result:dict = {}
        with open(fileName, "r", encoding="utf-8") as reader:
            for line in reader:
                if not line.startswith(SSFileHelper.COMMENT_PREFIX):
                    break
                key, _, value = line[len(SSFileHelper.COMMENT_PREFIX):].strip().partition("=")
                result[key] = value
        return result
