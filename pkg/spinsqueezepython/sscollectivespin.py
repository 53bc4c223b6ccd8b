"""
Module: sscollectivespin.py

Collective spin operators J_a = 1/2 sum_i sigma_a^i, the linear and nonlinear
squeezing parameters, the quantum Fisher information bound and the 
entanglement-depth witness.

The squeezing parameter is xi^2 = N / lambda_max(M), with M = C^T V^+ C,
V_ij = <{S_i, S_j}>/2 - <S_i><S_j> and C_ij = -i <[S_i, S_j]>.  By default
the columns of C are restricted to the linear generators (Jx, Jy, Jz), which
makes M a 3 x 3 matrix for both operator sets; for the linear set this is the
full matrix.  Pass fullGenerators=True to use every operator as a generator.
"""

# external package imports.
import numpy as np

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssaxis import SSAxis
from .ssconst import LAMBDA_ZERO_THRESHOLD, NORM_TOLERANCE, PINV_RELATIVE_THRESHOLD
from .ssgates import SSGates
from .sssqueezingkind import SSSqueezingKind
from .sssqueezingreport import SSSqueezingReport
from .ssstatevector import SSStateVector
from .sswitnessreport import SSWitnessReport

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export


_SQRT_HALF:float = np.sqrt(0.5)


@export
class SSCollectiveSpin:
    """
    Collective spin operations on state vectors (static methods only).

    Threadsafety:
        All members are pure functions of their inputs and are thread-safe.
    """

    @staticmethod
    def ApplyVector(psi:np.ndarray, nQubits:int, direction, scale:float=1.0) -> np.ndarray:
        """
        Returns c (n . J) psi for a raw amplitude vector, computed matrix-free.

        Args:
            psi (np.ndarray):
                Amplitudes of length 2^N.
            nQubits (int):
                Number of qubits N.
            direction (array-like):
                3-vector n (need not be normalized).
            scale (float):
                Scale c.

        Returns:
            A new (generally unnormalized) amplitude array.
        """
        nx, ny, nz = (float(v) for v in direction)
        out = np.zeros_like(psi)

        if (nx != 0.0) or (ny != 0.0):
            # sigma^x and sigma^y flip the qubit; the factor depends on the resulting bit.
            t = psi.reshape((2,) * nQubits)
            acc = np.zeros_like(t)
            coef = np.array([nx + 1j * ny, nx - 1j * ny])
            for axis in range(nQubits):
                shape = [1] * nQubits
                shape[axis] = 2
                acc += np.flip(t, axis=axis) * coef.reshape(shape)
            out += acc.reshape(-1)

        if (nz != 0.0):
            zsum = 2.0 * SSStateVector.PopCounts(nQubits) - nQubits    # sum_i sigma^z_i eigenvalues.
            out += nz * zsum * psi

        out *= 0.5 * scale
        return out


    @staticmethod
    def ApplyCollective(state:SSStateVector, axis:SSAxis) -> SSStateVector:
        """
        Returns c (n . J)|psi> as a new (unnormalized) state.

        Args:
            state (SSStateVector):
                Input state (not modified).
            axis (SSAxis):
                Axis c (n . J).

        Returns:
            A new SSStateVector holding the unnormalized result.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        if (axis is None):
            raise SSArgumentNullException("axis")
        amps = SSCollectiveSpin.ApplyVector(state.Amplitudes, state.NumQubits, axis.Direction, axis.Scale)
        return SSStateVector(state.NumQubits, amps, copy=False)


    @staticmethod
    def OperatorVectors(psi:np.ndarray, nQubits:int, kind:SSSqueezingKind, applyFunc=None) -> np.ndarray:
        """
        Returns the matrix whose columns are S_i|psi> for the operators of the set.

        Args:
            psi (np.ndarray):
                Normalized amplitude vector.
            nQubits (int):
                Number of qubits N.
            kind (SSSqueezingKind):
                Operator set.
            applyFunc (callable):
                Function (psi, direction) -> (n . J) psi; defaults to the full
                state-space action.  The Dicke-subspace code supplies its own.

        Returns:
            A (dim, d) complex array, columns ordered Jx, Jy, Jz, then (nonlinear)
            Jx^2, Jy^2, Jz^2, Jxy^2, Jyz^2, Jzx^2.
        """
        if (applyFunc is None):
            applyFunc = lambda v, n: SSCollectiveSpin.ApplyVector(v, nQubits, n)

        vx = applyFunc(psi, (1.0, 0.0, 0.0))
        vy = applyFunc(psi, (0.0, 1.0, 0.0))
        vz = applyFunc(psi, (0.0, 0.0, 1.0))
        columns:list = [vx, vy, vz]

        if (kind == SSSqueezingKind.NONLINEAR):
            columns.append(applyFunc(vx, (1.0, 0.0, 0.0)))
            columns.append(applyFunc(vy, (0.0, 1.0, 0.0)))
            columns.append(applyFunc(vz, (0.0, 0.0, 1.0)))
            diag = _SQRT_HALF
            for first, second, n in ((vx, vy, (diag, diag, 0.0)), (vy, vz, (0.0, diag, diag)), (vz, vx, (diag, 0.0, diag))):
                columns.append(applyFunc(diag * (first + second), n))

        return np.stack(columns, axis=1)


    @staticmethod
    def Moments(state:SSStateVector, kind:SSSqueezingKind) -> tuple:
        """
        Returns the means <S_i> and the Gram matrix G_ij = <S_i psi|S_j psi>.

        Args:
            state (SSStateVector):
                Normalized state.
            kind (SSSqueezingKind):
                Operator set (3 linear or 9 nonlinear operators).

        Returns:
            A (means, gram) tuple; V = Re G - means means^T and C = 2 Im G.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        kind = SSSqueezingKind.Parse(kind)
        W = SSCollectiveSpin.OperatorVectors(state.Amplitudes, state.NumQubits, kind)
        return SSCollectiveSpin.MomentsFromVectors(state.Amplitudes, W)


    @staticmethod
    def MomentsFromVectors(psi:np.ndarray, W:np.ndarray) -> tuple:
        """
        Returns (means, gram) from the state and the operator vectors S_i|psi>.
        """
        means = np.real(psi.conj() @ W)
        gram = W.conj().T @ W
        return means, gram


    @staticmethod
    def CovarianceMatrices(means:np.ndarray, gram:np.ndarray) -> tuple:
        """
        Returns (V, C) with V = Re G - means means^T (symmetrized) and C = 2 Im G (antisymmetrized).
        """
        V = np.real(gram) - np.outer(means, means)
        V = 0.5 * (V + V.T)
        C = 2.0 * np.imag(gram)
        C = 0.5 * (C - C.T)
        return V, C


    @staticmethod
    def PseudoInverse(V:np.ndarray) -> tuple:
        """
        Returns (V^+, rank) using an eigendecomposition; eigenvalues below
        1e-12 * max(lambda_max(V), 1) are treated as zero.
        """
        evals, evecs = np.linalg.eigh(V)
        threshold:float = PINV_RELATIVE_THRESHOLD * max(float(evals[-1]), 1.0)
        keep = evals > threshold
        inv = (evecs[:, keep] / evals[keep]) @ evecs[:, keep].T
        return inv, int(np.count_nonzero(keep))


    @staticmethod
    def SqueezingFromMatrices(nQubits:int, kind:SSSqueezingKind, means:np.ndarray, V:np.ndarray, C:np.ndarray,
                              fullGenerators:bool=False) -> SSSqueezingReport:
        """
        Builds a squeezing report from the covariance and commutator matrices.

        Args:
            nQubits (int):
                Number of qubits N.
            kind (SSSqueezingKind):
                Operator set the matrices belong to.
            means (np.ndarray):
                Expectation values <S_i>.
            V (np.ndarray):
                Covariance matrix.
            C (np.ndarray):
                Commutator matrix.
            fullGenerators (bool):
                False to restrict the generators to Jx, Jy, Jz (3 x 3 M);
                True to use every operator as a generator (d x d M).

        Returns:
            The SSSqueezingReport.
        """
        Vplus, rank = SSCollectiveSpin.PseudoInverse(V)
        gen = C if fullGenerators else C[:, :3]
        M = gen.T @ Vplus @ gen
        M = 0.5 * (M + M.T)
        lambdaMax:float = max(float(np.linalg.eigvalsh(M)[-1]), 0.0)

        if (lambdaMax <= LAMBDA_ZERO_THRESHOLD):
            xi2:float = float("inf")
        else:
            xi2 = nQubits / lambdaMax

        return SSSqueezingReport(nQubits, kind, xi2, lambdaMax, means, V, C, M, rank)


    @staticmethod
    def CheckNormalized(state:SSStateVector) -> None:
        """
        Raises SSArgumentOutOfRangeException if the state norm deviates from 1 by more than 1e-8.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        norm:float = state.Norm()
        if (abs(norm - 1.0) > NORM_TOLERANCE):
            raise SSArgumentOutOfRangeException("state", "State must be normalized (norm {0:.12f}).".format(norm))


    @staticmethod
    def Squeezing(state:SSStateVector, kind:SSSqueezingKind=SSSqueezingKind.LINEAR, fullGenerators:bool=False) -> SSSqueezingReport:
        """
        Computes the squeezing parameter of a state.

        Args:
            state (SSStateVector):
                Normalized state.
            kind (SSSqueezingKind):
                LINEAR or NONLINEAR operator set.
            fullGenerators (bool):
                True to use every operator of the set as a generator.

        Returns:
            The SSSqueezingReport; Xi2 is inf when lambda_max(M) = 0.

        Raises:
            SSArgumentOutOfRangeException:
                The state is not normalized (norm deviation above 1e-8).
        """
        SSCollectiveSpin.CheckNormalized(state)
        kind = SSSqueezingKind.Parse(kind)
        means, gram = SSCollectiveSpin.Moments(state, kind)
        V, C = SSCollectiveSpin.CovarianceMatrices(means, gram)
        return SSCollectiveSpin.SqueezingFromMatrices(state.NumQubits, kind, means, V, C, fullGenerators)


    @staticmethod
    def QfiLinearBound(state:SSStateVector) -> float:
        """
        Returns F = 4 lambda_max(V_linear), the pure-state quantum Fisher information
        maximized over linear collective generators n . J.
        """
        SSCollectiveSpin.CheckNormalized(state)
        means, gram = SSCollectiveSpin.Moments(state, SSSqueezingKind.LINEAR)
        V, C = SSCollectiveSpin.CovarianceMatrices(means, gram)
        return 4.0 * max(float(np.linalg.eigvalsh(V)[-1]), 0.0)


    @staticmethod
    def Witness(reportNl:SSSqueezingReport, qfi:float=None) -> SSWitnessReport:
        """
        Returns the entanglement-depth witness of a nonlinear squeezing report.

        Args:
            reportNl (SSSqueezingReport):
                Report computed with the NONLINEAR operator set.
            qfi (float):
                Optional quantum Fisher information bound F (not divided by N).

        Raises:
            SSArgumentOutOfRangeException:
                The report was not computed with the nonlinear operator set.
        """
        if (reportNl is None):
            raise SSArgumentNullException("reportNl")
        if (reportNl.Kind != SSSqueezingKind.NONLINEAR):
            raise SSArgumentOutOfRangeException("reportNl", "The witness needs a nonlinear squeezing report.")
        qfiOverN = None if (qfi is None) else qfi / reportNl.NumQubits
        return SSWitnessReport(reportNl.InverseXi2, qfiOverN)


    @staticmethod
    def WitnessFromState(state:SSStateVector) -> SSWitnessReport:
        """
        Returns the entanglement-depth witness of a state together with its F / N bound.
        """
        report:SSSqueezingReport = SSCollectiveSpin.Squeezing(state, SSSqueezingKind.NONLINEAR)
        return SSCollectiveSpin.Witness(report, SSCollectiveSpin.QfiLinearBound(state))


    @staticmethod
    def FundamentalLimit(nQubits:int) -> float:
        """
        Returns 2 / (N + 2), the lowest linear squeezing parameter reachable by N qubits.
        """
        return 2.0 / (nQubits + 2.0)


    @staticmethod
    def Expectation(state:SSStateVector, axis:SSAxis, power:int=1) -> float:
        """
        Returns <(c n . J)^k> computed by repeated collective applications.
        """
        w = state.Amplitudes
        for _ in range(power):
            w = SSCollectiveSpin.ApplyVector(w, state.NumQubits, axis.Direction, axis.Scale)
        return float(np.real(np.vdot(state.Amplitudes, w)))


    @staticmethod
    def SampleAxis(state:SSStateVector, axis:SSAxis, shots:int, seed) -> np.ndarray:
        """
        Simulates single-shot readouts of the collective operator c (n . J).

        Args:
            state (SSStateVector):
                Normalized state (not modified).
            axis (SSAxis):
                Readout axis.
            shots (int):
                Number of readouts (>= 1).
            seed (int | np.random.Generator):
                Seed (or generator) of the Born-rule sampler.

        Returns:
            An array of outcomes m = c (sum_i s_i) / 2, s_i = +/-1 the per-qubit results.

        Every qubit is rotated by the unitary mapping n . sigma to sigma^z, a
        computational basis index is drawn with the Born rule, and its number of
        set bits k gives m = c (k - N/2).
        """
        if (state is None):
            raise SSArgumentNullException("state")
        if (shots is None) or (shots < 1):
            raise SSArgumentOutOfRangeException("shots", "At least one shot is required.")

        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        rotated:SSStateVector = state.Copy().ApplyAll1Q(SSGates.AxisRotationToZ(axis.Direction))
        indices = rng.choice(rotated.Dimension, size=int(shots), p=rotated.Probabilities())
        counts = SSStateVector.PopCounts(state.NumQubits)[indices]
        return axis.Scale * (counts - 0.5 * state.NumQubits)
