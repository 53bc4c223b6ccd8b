# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSParameterDescriptor:
    """
    Describes one entry of a flat parameter vector.

    Layer is 0 for the initial rotation layer, k = 1..2p for the rotation layers
    of the alternating layered ansatz (k = 1..p for the analog ansatz), and l = 1..p
    for per-layer entanglers and evolution times; shared entanglers use layer 0.
    Target names the sublattice ("odd", "even"), the site ("q3"), "all", or the
    entangler layer ("E1", "E2").
    """

    def __init__(self, index:int, block:str, layer:int, target:str, name:str) -> None:
        """
        Initializes a new instance of the class.

        Args:
            index (int):
                Position in the parameter vector.
            block (str):
                "init", "rotation", "entangler", "time" or "ising".
            layer (int):
                Layer number (see class description).
            target (str):
                Sublattice, site, "all" or entangler layer.
            name (str):
                Angle or time name ("omega1", "theta", "t", ...).
        """
        self._fIndex:int = index
        self._fBlock:str = block
        self._fLayer:int = layer
        self._fTarget:str = target
        self._fName:str = name


    def __repr__(self) -> str:
        return "{0}: {1}".format(self._fIndex, self.Label)


    def __eq__(self, other) -> bool:
        if not isinstance(other, SSParameterDescriptor):
            return NotImplemented
        return self.ToDictionary() == other.ToDictionary()


    @property
    def Block(self) -> str:
        """ Gets the block kind. """
        return self._fBlock


    @property
    def Index(self) -> int:
        """ Gets the position in the parameter vector. """
        return self._fIndex


    @property
    def Label(self) -> str:
        """ Gets a readable label such as "rotation[3].odd.omega2". """
        return "{0}[{1}].{2}.{3}".format(self._fBlock, self._fLayer, self._fTarget, self._fName)


    @property
    def Layer(self) -> int:
        """ Gets the layer number. """
        return self._fLayer


    @property
    def Name(self) -> str:
        """ Gets the angle or time name. """
        return self._fName


    @property
    def Target(self) -> str:
        """ Gets the sublattice, site or entangler layer. """
        return self._fTarget


    def ToDictionary(self) -> dict:
        """
        Returns a json-friendly record of the descriptor.
        """
        return {
            "index": self._fIndex,
            "block": self._fBlock,
            "layer": self._fLayer,
            "target": self._fTarget,
            "name": self._fName,
        }
