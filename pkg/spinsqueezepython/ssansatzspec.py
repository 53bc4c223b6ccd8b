# our package imports.
from .ssansatzfamily import SSAnsatzFamily
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssboundary import SSBoundary
from .ssconst import MAX_QUBITS

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSAnsatzSpec:
    """
    Circuit family descriptor: family, boundary condition, number of qubits and depth.

    Threadsafety:
        Instances are immutable and thread-safe.
    """

    def __init__(self, family:SSAnsatzFamily, boundary:SSBoundary, nQubits:int, depth:int) -> None:
        """
        Initializes a new instance of the class.

        Args:
            family (SSAnsatzFamily):
                Circuit family (member, name or value).
            boundary (SSBoundary):
                Boundary condition (member, name or value).
            nQubits (int):
                Even number of qubits, 2..24.
            depth (int):
                Number of layers p >= 1.

        Raises:
            SSArgumentOutOfRangeException:
                The number of qubits is odd or out of range, the depth is below 1,
                or an analog family was combined with open boundaries.
        """
        try:
            self._fFamily:SSAnsatzFamily = SSAnsatzFamily.Parse(family)
        except ValueError as ex:
            raise SSArgumentOutOfRangeException("family", str(ex)) from ex
        try:
            self._fBoundary:SSBoundary = SSBoundary.Parse(boundary)
        except ValueError as ex:
            raise SSArgumentOutOfRangeException("boundary", str(ex)) from ex

        if (nQubits is None) or (int(nQubits) != nQubits) or (nQubits < 2) or (nQubits > MAX_QUBITS) or (nQubits % 2 != 0):
            raise SSArgumentOutOfRangeException("nQubits", "Number of qubits must be even and in 2..{0}, got {1}.".format(MAX_QUBITS, nQubits))
        if (depth is None) or (int(depth) != depth) or (depth < 1):
            raise SSArgumentOutOfRangeException("depth", "Depth must be an integer >= 1, got {0}.".format(depth))
        if (self._fFamily.IsAnalog) and (self._fBoundary == SSBoundary.OBC):
            raise SSArgumentOutOfRangeException("boundary", "Analog families are defined on the ring; open boundaries are not supported for {0}.".format(self._fFamily.name))

        self._fNumQubits:int = int(nQubits)
        self._fDepth:int = int(depth)


    def __repr__(self) -> str:
        return "SSAnsatzSpec({0}, {1}, N={2}, p={3})".format(self._fFamily.name, self._fBoundary.name, self._fNumQubits, self._fDepth)


    def __eq__(self, other) -> bool:
        if not isinstance(other, SSAnsatzSpec):
            return NotImplemented
        return (self._fFamily == other.Family) and (self._fBoundary == other.Boundary) \
            and (self._fNumQubits == other.NumQubits) and (self._fDepth == other.Depth)


    def __hash__(self) -> int:
        return hash((self._fFamily.name, self._fBoundary.name, self._fNumQubits, self._fDepth))


    @property
    def Boundary(self) -> SSBoundary:
        """ Gets the boundary condition. """
        return self._fBoundary


    @property
    def Depth(self) -> int:
        """ Gets the number of layers p. """
        return self._fDepth


    @property
    def Family(self) -> SSAnsatzFamily:
        """ Gets the circuit family. """
        return self._fFamily


    @property
    def NumQubits(self) -> int:
        """ Gets the number of qubits N. """
        return self._fNumQubits


    @property
    def ParamCount(self) -> int:
        """
        Gets the length of the parameter vector this spec induces.
        """
        p:int = self._fDepth
        n:int = self._fNumQubits
        family = self._fFamily
        if (family == SSAnsatzFamily.ALA_SHARED):
            return 12 * p + 6
        if (family == SSAnsatzFamily.ALA_GLOBAL):
            return 6 * p + 4
        if (family == SSAnsatzFamily.ALA_SITE_DEPENDENT):
            return 2 * n + 6 * n * p + 2
        if (family == SSAnsatzFamily.ALA_LAYER_ENTANGLERS):
            return 12 * p + 4 + 4 * p
        if (family == SSAnsatzFamily.ANALOG_HEA):
            return 7 * p + 4
        return 8 * p + 4


    def With(self, family:SSAnsatzFamily=None, boundary:SSBoundary=None, nQubits:int=None, depth:int=None) -> 'SSAnsatzSpec':
        """
        Returns a copy of this spec with some fields replaced.
        """
        return SSAnsatzSpec(
            self._fFamily if (family is None) else family,
            self._fBoundary if (boundary is None) else boundary,
            self._fNumQubits if (nQubits is None) else nQubits,
            self._fDepth if (depth is None) else depth)


    def ToDictionary(self) -> dict:
        """
        Returns the json record {family, boundary, n_qubits, depth}.
        """
        return {
            "family": self._fFamily.name,
            "boundary": self._fBoundary.name,
            "n_qubits": self._fNumQubits,
            "depth": self._fDepth,
        }


    @staticmethod
    def FromDictionary(record:dict) -> 'SSAnsatzSpec':
        """
        Creates a spec from a json record; boundary defaults to PBC.

        Raises:
            SSArgumentOutOfRangeException:
                A field is missing or invalid.
        """
        for key in ("family", "n_qubits", "depth"):
            if (key not in record):
                raise SSArgumentOutOfRangeException(key, "Ansatz record is missing the \"{0}\" field.".format(key))
        return SSAnsatzSpec(record["family"], record.get("boundary", "PBC"), record["n_qubits"], record["depth"])
