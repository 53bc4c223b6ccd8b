# external package imports.
import json
import threading

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssconfigurationexception import SSConfigurationException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSConfiguration:
    """
    Responsible for handling an experiment configuration and loading it from a
    json file.

    Nested json objects are flattened to lower-cased dotted keys, so that
    {"optimizer": {"restarts": 50}} is read with the key "optimizer.restarts".
    Single keys can be overridden with "key=value" pairs (see Parse).

    Threadsafety:
        Reads and writes are serialized with an internal lock.
    """

    def __init__(self) -> None:
        """
        Initializes a new instance of the class.
        """
        self._fItems:dict = {}
        self._fFileName:str = None
        self._fLock = threading.RLock()


    @property
    def Count(self) -> int:
        """
        Returns the number of key/value pairs of the configuration.
        """
        return len(self._fItems)


    @property
    def FileName(self) -> str:
        """
        Returns the file the configuration was loaded from, or None.
        """
        return self._fFileName


    @property
    def Keys(self) -> list:
        """
        Returns the sorted keys of the configuration.
        """
        with self._fLock:
            return sorted(self._fItems.keys())


    def Contains(self, key:str) -> bool:
        """
        Tests if the configuration contains a value for a given key.
        """
        if (key is None):
            raise SSArgumentNullException("key")
        return key.lower() in self._fItems


    def Clear(self) -> None:
        """
        Removes all key/value pairs of the configuration.
        """
        with self._fLock:
            self._fItems.clear()


    @staticmethod
    def _Flatten(prefix:str, value, into:dict) -> None:
        if isinstance(value, dict):
            if (len(value) == 0) and (prefix):
                into[prefix] = {}
            for k, v in value.items():
                key = str(k).strip().lower()
                SSConfiguration._Flatten(key if (not prefix) else prefix + "." + key, v, into)
        else:
            into[prefix] = value


    def LoadFromDictionary(self, values:dict) -> None:
        """
        Replaces the configuration with the (flattened) contents of a dictionary.

        Raises:
            SSConfigurationException:
                The value is not a dictionary.
        """
        if not isinstance(values, dict):
            raise SSConfigurationException("Configuration root must be a json object.", self._fFileName)
        flat:dict = {}
        SSConfiguration._Flatten("", values, flat)
        with self._fLock:
            self._fItems = flat


    def LoadFromFile(self, fileName:str) -> None:
        """
        Loads the configuration from a json file.

        Args:
            fileName (str):
                The name of the file to load the configuration from.

        Raises:
            SSArgumentNullException:
                The fileName argument is null.
            SSConfigurationException:
                The file does not exist or is not a valid json object.
        """
        if (fileName is None):
            raise SSArgumentNullException("fileName")
        self._fFileName = fileName
        try:
            with open(fileName, "r", encoding="utf-8") as reader:
                values = json.load(reader)
        except OSError as ex:
            raise SSConfigurationException("Configuration file could not be read: {0}".format(ex.strerror or ex), fileName) from ex
        except json.JSONDecodeError as ex:
            raise SSConfigurationException("Configuration file is not valid json: {0}".format(ex), fileName) from ex
        self.LoadFromDictionary(values)


    def Parse(self, pair:str) -> None:
        """
        Parses a "key=value" override and adds or replaces the value.

        Args:
            pair (str):
                String that contains a KEY=VALUE pair; the value is read as a json
                literal where possible (numbers, true/false, lists) and kept as a
                string otherwise.

        Raises:
            SSConfigurationException:
                The string has no "=" or an empty key.
        """
        if (pair is None):
            raise SSArgumentNullException("pair")
        index:int = pair.find("=")
        if (index <= 0):
            raise SSConfigurationException("Override \"{0}\" is not in KEY=VALUE format.".format(pair), self._fFileName)

        key:str = pair[0:index].strip().lower()
        text:str = pair[index + 1:].strip()
        try:
            value = json.loads(text)
        except json.JSONDecodeError:
            value = text

        with self._fLock:
            # an override replaces any nested keys below it.
            for existing in [k for k in self._fItems if k.startswith(key + ".")]:
                del self._fItems[existing]
            if isinstance(value, dict):
                SSConfiguration._Flatten(key, value, self._fItems)
            else:
                self._fItems[key] = value


    def _Get(self, key:str):
        if (key is None):
            raise SSArgumentNullException("key")
        with self._fLock:
            return self._fItems.get(key.lower())


    def ReadBoolean(self, key:str, defaultValue:bool) -> bool:
        """
        Returns a boolean value of an element for a given key.

        The strings "true", "1" and "yes" are read as true; missing keys return defaultValue.

        Raises:
            SSConfigurationException:
                The value is not a boolean.
        """
        value = self._Get(key)
        if (value is None):
            return defaultValue
        if isinstance(value, bool):
            return value
        if isinstance(value, str):
            return value.strip().lower() in ("true", "1", "yes")
        raise SSConfigurationException("Key \"{0}\" must be a boolean, got {1!r}.".format(key, value), self._fFileName)


    def ReadFloat(self, key:str, defaultValue:float) -> float:
        """
        Returns a float value of an element for a given key; missing keys return defaultValue.

        Raises:
            SSConfigurationException:
                The value is not a number.
        """
        value = self._Get(key)
        if (value is None):
            return defaultValue
        if isinstance(value, bool):
            raise SSConfigurationException("Key \"{0}\" must be a number, got {1!r}.".format(key, value), self._fFileName)
        try:
            return JsonHelper.FromJsonFloat(value)
        except (TypeError, ValueError):
            raise SSConfigurationException("Key \"{0}\" must be a number, got {1!r}.".format(key, value), self._fFileName) from None


    def ReadInteger(self, key:str, defaultValue:int) -> int:
        """
        Returns an integer value of an element for a given key; missing keys return defaultValue.

        Raises:
            SSConfigurationException:
                The value is not an integer.
        """
        value = self._Get(key)
        if (value is None):
            return defaultValue
        if isinstance(value, bool) or not isinstance(value, (int, float)) or (int(value) != value):
            raise SSConfigurationException("Key \"{0}\" must be an integer, got {1!r}.".format(key, value), self._fFileName)
        return int(value)


    def ReadList(self, key:str, defaultValue:list) -> list:
        """
        Returns a list value of an element for a given key; a scalar is wrapped in a list.
        """
        value = self._Get(key)
        if (value is None):
            return defaultValue
        return list(value) if isinstance(value, (list, tuple)) else [value]


    def ReadString(self, key:str, defaultValue:str) -> str:
        """
        Returns a string value of an element for a given key; missing or empty values
        return defaultValue.
        """
        value = self._Get(key)
        if (value is None) or (value == ""):
            return defaultValue
        return str(value)


    def ReadSection(self, prefix:str) -> dict:
        """
        Returns the keys below a prefix as a nested dictionary (prefix removed).
        """
        if (prefix is None):
            raise SSArgumentNullException("prefix")
        prefix = prefix.lower() + "."
        result:dict = {}
        with self._fLock:
            for key, value in self._fItems.items():
                if key.startswith(prefix):
                    node = result
                    parts = key[len(prefix):].split(".")
                    for part in parts[:-1]:
                        node = node.setdefault(part, {})
                    node[parts[-1]] = value
        return result


    def Validate(self, schema:dict) -> None:
        """
        Checks every key against a schema.

        Args:
            schema (dict):
                Map of allowed dotted keys to their expected type (or tuple of types,
                or None for any type).  A key ending with ".*" allows every key below
                that prefix.

        Raises:
            SSConfigurationException:
                A key is not in the schema, or a value has the wrong type.
        """
        if (schema is None):
            raise SSArgumentNullException("schema")
        prefixes = [k[:-1] for k in schema if k.endswith(".*")]
        with self._fLock:
            for key, value in self._fItems.items():
                if any(key.startswith(p) for p in prefixes):
                    continue
                if (key not in schema):
                    raise SSConfigurationException("Unknown configuration key \"{0}\".".format(key), self._fFileName)
                expected = schema[key]
                if (expected is None) or (value is None):
                    continue
                types = expected if isinstance(expected, tuple) else (expected,)
                if (float in types):
                    types = types + (int,)
                if isinstance(value, bool) and (bool not in types):
                    ok = False
                else:
                    ok = isinstance(value, types) or ((float in types) and value in ("inf", "-inf"))
                if not ok:
                    raise SSConfigurationException("Configuration key \"{0}\" has an invalid value {1!r}.".format(key, value), self._fFileName)


    def ToDictionary(self) -> dict:
        """
        Returns a copy of the flattened key/value pairs.
        """
        with self._fLock:
            return dict(self._fItems)


    def ConfigHash(self) -> str:
        """
        Returns the sha256 hex digest of the canonical json of the configuration.
        """
        return JsonHelper.Sha256(self.ToDictionary())


    def ReadKey(self, index:int) -> str:
        """
        Returns the key at an index of the sorted key list.

        Raises:
            SSArgumentOutOfRangeException:
                The index is not a valid index of the configuration.
        """
        keys = self.Keys
        if (index is None) or (index < 0) or (index >= len(keys)):
            raise SSArgumentOutOfRangeException("index")
        return keys[index]
