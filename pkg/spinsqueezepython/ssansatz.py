"""
Module: ssansatz.py

Builds the final state of every circuit family from a flat parameter vector.

Parameter layout (normative for checkpoints and warm starts):

    [init block][shared entangler block][rotation blocks, in application order][per-layer entangler / time blocks]

- ALA_SHARED:           init (alpha1, alpha2, beta1, beta2), (theta, phi), then for
                        k = 1..2p: alpha^(k) (3 angles), beta^(k) (3 angles).
- ALA_GLOBAL:           init (omega1, omega2), (theta, phi), then 3 angles per layer k = 1..2p.
- ALA_SITE_DEPENDENT:   init (omega1, omega2) per qubit, (theta, phi), then 3 angles per qubit and layer.
- ALA_LAYER_ENTANGLERS: init (4), rotations as ALA_SHARED, then (theta1, phi1, theta2, phi2) per l = 1..p.
- ANALOG_HEA:           init (4), alpha^(l), beta^(l) for l = 1..p, then t_l for l = 1..p.
- ANALOG_HEA_ISING:     init (4), rotations as ANALOG_HEA, then (t_l, T_l) for l = 1..p.

Odd qubits take the alpha angles and even qubits the beta angles.  The initial
layer applies exp(-i sigma^z a1) exp(-i sigma^x a2) (X rotation first) and the
rotation layers apply exp(-i sigma^z w1) exp(-i sigma^x w2) exp(-i sigma^z w3).
"""

# external package imports.
import logging

import numpy as np
from smartinspectpython.siauto import SIAuto, SISession

# our package imports.
from .ssansatzfamily import SSAnsatzFamily
from .ssansatzspec import SSAnsatzSpec
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssboundary import SSBoundary
from .ssdynamics import SSDynamics
from .ssevolutionconfig import SSEvolutionConfig
from .ssgates import SSGates
from .ssparameterdescriptor import SSParameterDescriptor
from .ssstatevector import SSStateVector

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


_SUBLATTICES:tuple = ("odd", "even")
_ROTATION_NAMES:tuple = ("omega1", "omega2", "omega3")


@export
class SSAnsatz:
    """
    Parameter layouts and state construction (static methods only).

    Threadsafety:
        All members are pure; every build returns a fresh state.
    """

    @staticmethod
    def ParamCount(spec:SSAnsatzSpec) -> int:
        """
        Returns the parameter vector length of a spec.
        """
        if (spec is None):
            raise SSArgumentNullException("spec")
        return spec.ParamCount


    @staticmethod
    def EntanglerPairs(nQubits:int, layer:int, boundary:SSBoundary) -> list:
        """
        Returns the qubit pairs of an entangler layer.

        Args:
            nQubits (int):
                Number of qubits N (even).
            layer (int):
                1 for (1,2), (3,4), ...; 2 for (2,3), (4,5), ... plus (N,1) under PBC.
            boundary (SSBoundary):
                Boundary condition.

        Returns:
            A list of (qubitA, qubitB) tuples; the gate basis' first ket is qubitA.
        """
        if (layer == 1):
            return [(2 * i - 1, 2 * i) for i in range(1, nQubits // 2 + 1)]
        pairs:list = [(2 * i, 2 * i + 1) for i in range(1, nQubits // 2)]
        if (SSBoundary.Parse(boundary) == SSBoundary.PBC):
            pairs.append((nQubits, 1))
        return pairs


    @staticmethod
    def BondIndex(pair:tuple, nQubits:int) -> int:
        """
        Returns the bond number n of a nearest-neighbour pair (n, n + 1), with bond N the pair (N, 1).

        Raises:
            SSArgumentOutOfRangeException:
                The pair is not a nearest-neighbour bond of an N-qubit ring.
        """
        a, b = int(pair[0]), int(pair[1])
        if ((1 <= a < nQubits) and (b == a + 1)) or ((a == nQubits) and (b == 1)):
            return a
        raise SSArgumentOutOfRangeException("pair", "({0}, {1}) is not a bond of a {2}-qubit ring.".format(a, b, nQubits))


    @staticmethod
    def ParameterLayout(spec:SSAnsatzSpec) -> list:
        """
        Returns the ordered list of SSParameterDescriptor entries of a spec.

        The list length always equals spec.ParamCount.
        """
        if (spec is None):
            raise SSArgumentNullException("spec")

        family = spec.Family
        n:int = spec.NumQubits
        p:int = spec.Depth
        entries:list = []

        def add(block:str, layer:int, target:str, name:str) -> None:
            entries.append(SSParameterDescriptor(len(entries), block, layer, target, name))

        # init block.
        if (family == SSAnsatzFamily.ALA_GLOBAL):
            add("init", 0, "all", "omega1")
            add("init", 0, "all", "omega2")
        elif (family == SSAnsatzFamily.ALA_SITE_DEPENDENT):
            for q in range(1, n + 1):
                add("init", 0, "q{0}".format(q), "omega1")
                add("init", 0, "q{0}".format(q), "omega2")
        else:
            for sub in _SUBLATTICES:
                add("init", 0, sub, "omega1")
                add("init", 0, sub, "omega2")

        # shared entangler block.
        if (family in (SSAnsatzFamily.ALA_SHARED, SSAnsatzFamily.ALA_GLOBAL, SSAnsatzFamily.ALA_SITE_DEPENDENT)):
            add("entangler", 0, "all", "theta")
            add("entangler", 0, "all", "phi")

        # rotation blocks.
        layers:int = p if (family.IsAnalog) else 2 * p
        for k in range(1, layers + 1):
            if (family == SSAnsatzFamily.ALA_GLOBAL):
                targets = ("all",)
            elif (family == SSAnsatzFamily.ALA_SITE_DEPENDENT):
                targets = tuple("q{0}".format(q) for q in range(1, n + 1))
            else:
                targets = _SUBLATTICES
            for target in targets:
                for name in _ROTATION_NAMES:
                    add("rotation", k, target, name)

        # per-layer entangler / time blocks.
        for l in range(1, p + 1):
            if (family == SSAnsatzFamily.ALA_LAYER_ENTANGLERS):
                add("entangler", l, "E1", "theta")
                add("entangler", l, "E1", "phi")
                add("entangler", l, "E2", "theta")
                add("entangler", l, "E2", "phi")
            elif (family == SSAnsatzFamily.ANALOG_HEA):
                add("time", l, "all", "t")
            elif (family == SSAnsatzFamily.ANALOG_HEA_ISING):
                add("time", l, "all", "t")
                add("ising", l, "all", "T")

        return entries


    @staticmethod
    def _RotationMatrices(spec:SSAnsatzSpec, block:np.ndarray) -> list:
        """
        Returns the per-qubit 2x2 rotations of one rotation block (index q-1 for qubit q).
        """
        n:int = spec.NumQubits
        family = spec.Family
        if (family == SSAnsatzFamily.ALA_GLOBAL):
            u = SSGates.RotationZXZ(*block[0:3])
            return [u] * n
        if (family == SSAnsatzFamily.ALA_SITE_DEPENDENT):
            return [SSGates.RotationZXZ(*block[3 * q:3 * q + 3]) for q in range(n)]
        ua = SSGates.RotationZXZ(*block[0:3])
        ub = SSGates.RotationZXZ(*block[3:6])
        return [ua if (q % 2 == 0) else ub for q in range(n)]    # index 0 is qubit 1 (odd).


    @staticmethod
    def _InitMatrices(spec:SSAnsatzSpec, block:np.ndarray) -> list:
        """
        Returns the per-qubit 2x2 initial rotations exp(-i sigma^z a1) exp(-i sigma^x a2).
        """
        n:int = spec.NumQubits
        family = spec.Family
        if (family == SSAnsatzFamily.ALA_GLOBAL):
            return [SSGates.RotationZXZ(block[0], block[1], 0.0)] * n
        if (family == SSAnsatzFamily.ALA_SITE_DEPENDENT):
            return [SSGates.RotationZXZ(block[2 * q], block[2 * q + 1], 0.0) for q in range(n)]
        ua = SSGates.RotationZXZ(block[0], block[1], 0.0)
        ub = SSGates.RotationZXZ(block[2], block[3], 0.0)
        return [ua if (q % 2 == 0) else ub for q in range(n)]


    @staticmethod
    def _ApplyLayer(state:SSStateVector, matrices:list) -> None:
        for q, u in enumerate(matrices):
            state.Apply1Q(q + 1, u)


    @staticmethod
    def _ApplyEntangler(state:SSStateVector, spec:SSAnsatzSpec, layer:int, gate:np.ndarray, bondGates:list) -> None:
        for pair in SSAnsatz.EntanglerPairs(spec.NumQubits, layer, spec.Boundary):
            u = gate if (bondGates is None) else bondGates[SSAnsatz.BondIndex(pair, spec.NumQubits) - 1]
            state.Apply2Q(pair[0], pair[1], u)


    @staticmethod
    def CheckParameters(spec:SSAnsatzSpec, x) -> np.ndarray:
        """
        Validates a parameter vector against a spec and returns it as a float array.

        Raises:
            SSArgumentOutOfRangeException:
                The vector length does not match the parameter count of the family.
        """
        if (spec is None):
            raise SSArgumentNullException("spec")
        if (x is None):
            raise SSArgumentNullException("x")
        x = np.asarray(x, dtype=float).reshape(-1)
        if (x.shape[0] != spec.ParamCount):
            raise SSArgumentOutOfRangeException("x", "Parameter vector has length {0}; {1} expects {2}.".format(x.shape[0], spec, spec.ParamCount))
        return x


    @staticmethod
    def BuildState(spec:SSAnsatzSpec, x, bondGates:list=None, evolution:SSEvolutionConfig=None) -> SSStateVector:
        """
        Builds the final state |psi(x)> of a circuit family applied to |0...0>.

        Args:
            spec (SSAnsatzSpec):
                Circuit family descriptor.
            x (array-like):
                Parameter vector laid out as described by ParameterLayout.
            bondGates (list):
                Optional list of N two-qubit gates; bond n couples qubits (n, n + 1)
                and bond N the wrap pair (N, 1).  When supplied, the gate of a bond
                replaces the FSIM gate on that pair in every entangler layer.
                Alternating layered families only.
            evolution (SSEvolutionConfig):
                Propagator settings for the analog families.

        Returns:
            A new SSStateVector.

        Raises:
            SSArgumentOutOfRangeException:
                The parameter vector length does not match, or bond gates were
                supplied for an analog family or with the wrong count.

        Alternating layered families apply the initial layer, then for l = 1..p:
        entangler layer 1, rotation layer 2l-1, entangler layer 2, rotation layer 2l.
        Analog families apply the initial layer, then for l = 1..p: (Ising evolution
        T_l,) XY evolution t_l, rotation layer l.
        """
        x = SSAnsatz.CheckParameters(spec, x)
        family = spec.Family
        n:int = spec.NumQubits
        p:int = spec.Depth

        if (bondGates is not None):
            if (family.IsAnalog):
                raise SSArgumentOutOfRangeException("bondGates", "Bond gates apply to the alternating layered families only.")
            if (len(bondGates) != n):
                raise SSArgumentOutOfRangeException("bondGates", "Expected {0} bond gates, got {1}.".format(n, len(bondGates)))

        state:SSStateVector = SSStateVector.ZeroState(n)

        if (family.IsAnalog):
            rotStart:int = 4
            timeStart:int = rotStart + 6 * p
            timeBlock:int = 1 if (family == SSAnsatzFamily.ANALOG_HEA) else 2
            SSAnsatz._ApplyLayer(state, SSAnsatz._InitMatrices(spec, x[0:4]))
            for l in range(1, p + 1):
                times = x[timeStart + (l - 1) * timeBlock: timeStart + l * timeBlock]
                if (family == SSAnsatzFamily.ANALOG_HEA_ISING):
                    SSDynamics.ApplyZZEvolution(state, times[1])
                SSDynamics.ApplyXYEvolution(state, times[0], evolution)
                block = x[rotStart + 6 * (l - 1): rotStart + 6 * l]
                SSAnsatz._ApplyLayer(state, SSAnsatz._RotationMatrices(spec, block))
            return state

        # alternating layered families.
        if (family == SSAnsatzFamily.ALA_GLOBAL):
            initLen, rotLen = 2, 3
        elif (family == SSAnsatzFamily.ALA_SITE_DEPENDENT):
            initLen, rotLen = 2 * n, 3 * n
        else:
            initLen, rotLen = 4, 6

        sharedEntangler:bool = (family != SSAnsatzFamily.ALA_LAYER_ENTANGLERS)
        rotStart = initLen + (2 if sharedEntangler else 0)
        entStart:int = rotStart + 2 * p * rotLen

        SSAnsatz._ApplyLayer(state, SSAnsatz._InitMatrices(spec, x[0:initLen]))

        for l in range(1, p + 1):
            if (sharedEntangler):
                gate1 = gate2 = SSGates.Fsim(x[initLen], x[initLen + 1])
            else:
                angles = x[entStart + 4 * (l - 1): entStart + 4 * l]
                gate1 = SSGates.Fsim(angles[0], angles[1])
                gate2 = SSGates.Fsim(angles[2], angles[3])

            for layer, gate in ((1, gate1), (2, gate2)):
                SSAnsatz._ApplyEntangler(state, spec, layer, gate, bondGates)
                k:int = 2 * (l - 1) + layer
                block = x[rotStart + (k - 1) * rotLen: rotStart + k * rotLen]
                SSAnsatz._ApplyLayer(state, SSAnsatz._RotationMatrices(spec, block))

        return state


    @staticmethod
    def EmbedParameters(fromSpec:SSAnsatzSpec, x, toSpec:SSAnsatzSpec) -> np.ndarray:
        """
        Maps a parameter vector of a restricted family onto a more general family
        so that both specs build the same state.

        Supported maps (same boundary, number of qubits and depth):
        ALA_GLOBAL -> ALA_SHARED -> ALA_SITE_DEPENDENT, ALA_GLOBAL -> ALA_SITE_DEPENDENT,
        ALA_SHARED -> ALA_LAYER_ENTANGLERS, ANALOG_HEA -> ANALOG_HEA_ISING (T_l = 0).
        Identical families return a copy.

        Raises:
            SSArgumentOutOfRangeException:
                The specs differ in size or depth, or the map is not supported.
        """
        x = SSAnsatz.CheckParameters(fromSpec, x)
        if (toSpec is None):
            raise SSArgumentNullException("toSpec")
        if (fromSpec.NumQubits != toSpec.NumQubits) or (fromSpec.Depth != toSpec.Depth) or (fromSpec.Boundary != toSpec.Boundary):
            raise SSArgumentOutOfRangeException("toSpec", "Embedding needs equal number of qubits, depth and boundary.")

        src = fromSpec.Family
        dst = toSpec.Family
        n:int = fromSpec.NumQubits
        p:int = fromSpec.Depth

        if (src == dst):
            return x.copy()

        if (src == SSAnsatzFamily.ALA_GLOBAL) and (dst in (SSAnsatzFamily.ALA_SHARED, SSAnsatzFamily.ALA_SITE_DEPENDENT)):
            shared = np.concatenate([x[0:2], x[0:2], x[2:4]] + [np.concatenate([x[4 + 3 * k: 7 + 3 * k]] * 2) for k in range(2 * p)])
            return SSAnsatz.EmbedParameters(fromSpec.With(family=SSAnsatzFamily.ALA_SHARED), shared, toSpec)

        if (src == SSAnsatzFamily.ALA_SHARED) and (dst == SSAnsatzFamily.ALA_SITE_DEPENDENT):
            init = np.concatenate([x[0:2] if (q % 2 == 0) else x[2:4] for q in range(n)])
            rotations:list = []
            for k in range(2 * p):
                block = x[6 + 6 * k: 12 + 6 * k]
                rotations += [block[0:3] if (q % 2 == 0) else block[3:6] for q in range(n)]
            return np.concatenate([init, x[4:6]] + rotations)

        if (src == SSAnsatzFamily.ALA_SHARED) and (dst == SSAnsatzFamily.ALA_LAYER_ENTANGLERS):
            entanglers = np.tile(np.concatenate([x[4:6], x[4:6]]), p)
            return np.concatenate([x[0:4], x[6:], entanglers])

        if (src == SSAnsatzFamily.ANALOG_HEA) and (dst == SSAnsatzFamily.ANALOG_HEA_ISING):
            times = x[4 + 6 * p:]
            pairs = np.stack([times, np.zeros(p)], axis=1).reshape(-1)
            return np.concatenate([x[0:4 + 6 * p], pairs])

        raise SSArgumentOutOfRangeException("toSpec", "No parameter embedding from {0} to {1}.".format(src.name, dst.name))


    @staticmethod
    def EntanglerIndices(spec:SSAnsatzSpec) -> list:
        """
        Returns the parameter indexes of the FSIM angles (theta, phi) of a spec.
        """
        return [d.Index for d in SSAnsatz.ParameterLayout(spec) if (d.Block == "entangler")]


    @staticmethod
    def TranslateState(state:SSStateVector, shift:int) -> SSStateVector:
        """
        Returns a copy of a state with every qubit j relabelled as j + shift (mod N).
        """
        n:int = state.NumQubits
        t = state.Tensor()
        # axis a holds bit n-1-a; the new bit b' takes the old bit (b' - shift) mod n.
        perm = [n - 1 - ((n - 1 - a - shift) % n) for a in range(n)]
        return SSStateVector(n, np.ascontiguousarray(t.transpose(perm)).reshape(-1), copy=False)
