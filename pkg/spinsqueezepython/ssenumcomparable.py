# system imports.
from enum import Enum
import numbers


class SSEnumComparable(Enum):
    """
    Class used to compare Enum objects without having to specify ".value" on
    the end of the enum name, and to parse enum members from configuration text.
    """

    def __eq__(self, other):
        """
        Compares if the other object is equal to the current object.

        Args:
            other (object):
                Object to compare with this object.

        Members compare equal to members of the same enum, to their integer
        value, and (case-insensitive) to their name.
        """
        if (other is None):
            return False

        if isinstance(other, Enum):
            return (type(self) is type(other)) and (self.value == other.value)
        if isinstance(other, numbers.Real):
            return self.value == other
        if isinstance(other, str):
            return self.name.upper() == other.strip().upper()

        return NotImplemented


    def __hash__(self):
        return hash(self.name)


    @classmethod
    def Parse(cls, value:object, defaultValue=None):
        """
        Converts a name or integer value to an enum member.

        Args:
            value (object):
                Enum member, member name (case-insensitive) or member value.
            defaultValue (object):
                Value returned when the value cannot be converted; if None,
                a ValueError is raised instead.

        Returns:
            The enum member.

        Raises:
            ValueError:
                The value does not name a member and no default was supplied.
        """
        if isinstance(value, cls):
            return value

        for member in cls:
            if isinstance(value, str) and (member.name.upper() == value.strip().upper()):
                return member
            if isinstance(value, numbers.Integral) and (not isinstance(value, bool)) and (member.value == value):
                return member

        if defaultValue is not None:
            return defaultValue

        raise ValueError("\"{0}\" is not a valid {1} value; expected one of: {2}".format(
            value, cls.__name__, ", ".join(m.name for m in cls)))
