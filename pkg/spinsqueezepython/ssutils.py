# external package imports.
import hashlib
import json
import sys

import numpy as np

# our package imports.
# none

def export(fn):
    """
    Define the decorator used to modify a module's "__all__" variable.
    This avoids us having to manually modify a module's "__all__" variable when adding new classes.
    """
    mod = sys.modules[fn.__module__]
    if hasattr(mod, '__all__'):
        mod.__all__.append(fn.__name__)
    else:
        mod.__all__ = [fn.__name__]

    return fn


class JsonHelper:
    """
    Helper class used for converting numerical results to and from json-friendly values.
    """

    @staticmethod
    def ToJsonValue(value:object) -> object:
        """
        Converts a value (possibly containing numpy arrays or scalars) to a
        value that can be serialized by the json module.

        Args:
            value (object):
                Value to convert.

        Returns:
            A json-serializable representation of the value.

        Complex values are converted to [re, im] pairs; non-finite floats
        are converted to the strings "inf", "-inf" and "nan" so that the
        produced json is strictly valid.
        """
        if isinstance(value, np.ndarray):
            return JsonHelper.ToJsonValue(value.tolist())
        if isinstance(value, dict):
            return {str(k): JsonHelper.ToJsonValue(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [JsonHelper.ToJsonValue(v) for v in value]
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (complex, np.complexfloating)):
            return [JsonHelper.ToJsonValue(float(value.real)), JsonHelper.ToJsonValue(float(value.imag))]
        if isinstance(value, (float, np.floating)):
            value = float(value)
            if np.isnan(value):
                return "nan"
            if np.isinf(value):
                return "inf" if value > 0 else "-inf"
            return value
        if hasattr(value, "ToDictionary"):
            return JsonHelper.ToJsonValue(value.ToDictionary())
        if hasattr(value, "name") and hasattr(value, "value"):
            return value.name    # enum member.
        return value


    @staticmethod
    def FromJsonFloat(value:object) -> float:
        """
        Converts a json value produced by ToJsonValue back to a float.

        Args:
            value (object):
                A number, or one of the strings "inf", "-inf", "nan".

        Returns:
            The float value.
        """
        return float(value)    # float() also accepts "inf", "-inf" and "nan".


    @staticmethod
    def CanonicalJson(value:object) -> str:
        """
        Returns the canonical json text of a value (sorted keys, no whitespace).
        """
        return json.dumps(JsonHelper.ToJsonValue(value), sort_keys=True, separators=(",", ":"))


    @staticmethod
    def Sha256(value:object) -> str:
        """
        Returns the sha256 hex digest of the canonical json text of a value.
        """
        return hashlib.sha256(JsonHelper.CanonicalJson(value).encode("utf-8")).hexdigest()
