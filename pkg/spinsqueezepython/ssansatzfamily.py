# our package imports.
from .ssenumcomparable import SSEnumComparable

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


@export
class SSAnsatzFamily(SSEnumComparable):
    """
    Parameterized circuit families.
    """

    ALA_SHARED = 0
    """
    Alternating layered ansatz: FSIM entangler layers with one shared (theta, phi),
    single-qubit rotations shared per sublattice (odd qubits alpha, even qubits beta).
    12p + 6 parameters.
    """

    ALA_GLOBAL = 1
    """
    Alternating layered ansatz with the same rotation on every qubit.  6p + 4 parameters.
    """

    ALA_SITE_DEPENDENT = 2
    """
    Alternating layered ansatz with an independent rotation on every qubit and layer.
    2N + 6Np + 2 parameters.
    """

    ALA_LAYER_ENTANGLERS = 3
    """
    Alternating layered ansatz whose two entangler layers of every depth step carry
    their own (theta, phi).  12p + 4 + 4p parameters.
    """

    ANALOG_HEA = 4
    """
    Analog hardware-efficient ansatz: global XY evolution for a time t_l between
    sublattice rotation layers.  7p + 4 parameters.
    """

    ANALOG_HEA_ISING = 5
    """
    Analog hardware-efficient ansatz with a global Ising evolution for a time T_l
    before every XY evolution.  8p + 4 parameters.
    """


    @property
    def IsAnalog(self) -> bool:
        """
        Gets whether the family entangles with Hamiltonian evolutions (ring geometry only).
        """
        return self.value in (4, 5)


    @property
    def IsSizeIndependent(self) -> bool:
        """
        Gets whether the parameter count is independent of the number of qubits.
        """
        return self.value != 2
