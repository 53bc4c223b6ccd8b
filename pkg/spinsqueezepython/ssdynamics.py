"""
Module: ssdynamics.py

Exact time evolution for the analog entanglers on the qubit ring:

- XY evolution exp(-i H_T t), H_T = sum_i (sigma^x_i sigma^x_{i+1} + sigma^y_i sigma^y_{i+1}),
  applied with a matrix-free Lanczos propagator and adaptive time substeps.
- Ising evolution exp(-i T sum_i sigma^z_i sigma^z_{i+1}), applied as a diagonal phase.

Both sums run over the ring bonds (i, i + 1), i = 1..N, with N + 1 identified with 1.

The Lanczos propagator keeps its Krylov basis dense: krylov_dim x 2^N complex
amplitudes, 16 bytes each.  At N = 24 with the default dimension of 30 this is
about 8 GB on top of the state itself; lower krylov_dim for large rings.
"""

# external package imports.
from functools import lru_cache
import logging

import numpy as np
import scipy.linalg
from smartinspectpython.siauto import SIAuto, SISession

# our package imports.
from .ssargumentnullexception import SSArgumentNullException
from .ssconst import KRYLOV_BASIS_WARN_BYTES
from .ssevolutionconfig import SSEvolutionConfig
from .ssgates import SSGates
from .ssnumericalexception import SSNumericalException
from .ssstatevector import SSStateVector

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


# hopping term of one bond in the {|00>, |01>, |10>, |11>} basis.
XY_BOND:np.ndarray = np.array([[0, 0, 0, 0],
                               [0, 0, 2, 0],
                               [0, 2, 0, 0],
                               [0, 0, 0, 0]], dtype=complex)


def _RingBonds(nQubits:int) -> list:
    return [(i, i % nQubits + 1) for i in range(1, nQubits + 1)]


@lru_cache(maxsize=32)
def _IsingEnergies(nQubits:int) -> np.ndarray:
    """
    Returns E(b) = sum_i s_i s_{i+1} for every basis index, s = 2 bit - 1 (read-only).
    """
    idx = np.arange(2 ** nQubits, dtype=np.int64)
    energies = np.zeros(2 ** nQubits, dtype=np.int64)
    for qa, qb in _RingBonds(nQubits):
        sa = 2 * ((idx >> (qa - 1)) & 1) - 1
        sb = 2 * ((idx >> (qb - 1)) & 1) - 1
        energies += sa * sb
    energies.setflags(write=False)
    return energies


@export
class SSDynamics:
    """
    Analog entangler propagators (static methods only).

    Threadsafety:
        All members are pure; scratch buffers are allocated per call.
    """

    @staticmethod
    def ApplyXYHamiltonian(psi:np.ndarray, nQubits:int) -> np.ndarray:
        """
        Returns H_T psi for a raw amplitude vector, computed bond by bond.
        """
        t = psi.reshape((2,) * nQubits)
        out = np.zeros_like(t)
        for qa, qb in _RingBonds(nQubits):
            axes = (nQubits - qa, nQubits - qb)
            src = np.moveaxis(t, axes, (0, 1))
            dst = np.moveaxis(out, axes, (0, 1))    # view into out.
            dst[0, 1] += 2.0 * src[1, 0]
            dst[1, 0] += 2.0 * src[0, 1]
        return out.reshape(-1)


    @staticmethod
    def IsingEnergies(nQubits:int) -> np.ndarray:
        """
        Returns the cached Ising energies sum_i s_i s_{i+1} of every basis index.
        """
        return _IsingEnergies(int(nQubits))


    @staticmethod
    def BasisBytes(nQubits:int, cfg:SSEvolutionConfig=None) -> int:
        """
        Returns the memory taken by the dense Krylov basis of one substep, in bytes.
        """
        cfg = cfg or SSEvolutionConfig()
        dim:int = 2 ** int(nQubits)
        return min(cfg.KrylovDim, dim) * dim * np.dtype(complex).itemsize


    @staticmethod
    def _LanczosBasis(v:np.ndarray, nQubits:int, krylovDim:int) -> tuple:
        """
        Builds an orthonormal Krylov basis of H_T starting from v.

        Returns:
            (basis, alpha, beta, betaNext) where basis has m rows, alpha and beta are
            the diagonal and off-diagonal of the tridiagonal projection, and betaNext
            is the coupling to the next (unbuilt) vector (0 on breakdown).
        """
        norm:float = np.linalg.norm(v)
        basis = np.zeros((krylovDim, v.shape[0]), dtype=complex)
        basis[0] = v / norm
        alpha = np.zeros(krylovDim)
        beta = np.zeros(krylovDim)
        breakdown:float = 1e-14 * max(norm, 1.0)

        for j in range(krylovDim):
            w = SSDynamics.ApplyXYHamiltonian(basis[j], nQubits)
            alpha[j] = np.real(np.vdot(basis[j], w))
            # full reorthogonalization keeps the basis orthonormal to round-off.
            w -= basis[:j + 1].T @ (basis[:j + 1].conj() @ w)
            beta[j] = np.linalg.norm(w)
            if (beta[j] <= breakdown):
                return basis[:j + 1], alpha[:j + 1], beta[:j], 0.0
            if (j + 1 < krylovDim):
                basis[j + 1] = w / beta[j]

        return basis, alpha, beta[:krylovDim - 1], beta[krylovDim - 1]


    @staticmethod
    def ApplyXYEvolution(state:SSStateVector, t:float, cfg:SSEvolutionConfig=None) -> SSStateVector:
        """
        Applies exp(-i H_T t) to a state in place.

        Args:
            state (SSStateVector):
                State to evolve (updated in place).
            t (float):
                Evolution time (may be negative).
            cfg (SSEvolutionConfig):
                Propagator settings; defaults are used if None.

        Returns:
            The same state instance.

        Raises:
            SSNumericalException:
                The error estimate could not be met within cfg.MaxSubsteps substeps.

        Each substep projects the current vector onto a Krylov space of H_T and
        exponentiates the tridiagonal projection.  The step is halved until the
        a-posteriori estimate |v| beta_m |e_m^T exp(-i dt T) e_1| is below
        tolerance * |dt / t|, so the accumulated estimate stays below the tolerance.
        """
        if (state is None):
            raise SSArgumentNullException("state")
        if (t == 0.0):
            return state
        cfg = cfg or SSEvolutionConfig()

        nQubits:int = state.NumQubits
        basisBytes:int = SSDynamics.BasisBytes(nQubits, cfg)
        if (basisBytes > KRYLOV_BASIS_WARN_BYTES):
            _logsi.LogWarning("XY evolution at N=%d keeps a %.1f GB Krylov basis (krylov_dim=%d).",
                              nQubits, basisBytes / 1e9, cfg.KrylovDim)
        v = state.Amplitudes.copy()
        remaining:float = float(t)
        substeps:int = 0
        dt:float = remaining

        while (remaining != 0.0):

            if (substeps >= cfg.MaxSubsteps):
                raise SSNumericalException("XY evolution did not converge within the allowed substeps.",
                    {"t": t, "remaining": remaining, "substeps": substeps, "krylov_dim": cfg.KrylovDim, "last_dt": dt})

            norm:float = np.linalg.norm(v)
            basis, alpha, beta, betaNext = SSDynamics._LanczosBasis(v, nQubits, min(cfg.KrylovDim, v.shape[0]))
            evals, evecs = scipy.linalg.eigh_tridiagonal(alpha, beta) if (alpha.shape[0] > 1) else (alpha, np.ones((1, 1)))

            # try the full remaining time first, halving until the estimate is met.
            dt = remaining
            while True:
                coef = evecs @ (np.exp(-1j * dt * evals) * evecs[0, :])
                estimate:float = norm * betaNext * abs(coef[-1])
                if (estimate <= cfg.Tolerance * abs(dt / t)):
                    break
                dt *= 0.5
                if (abs(dt) < 1e-300):
                    raise SSNumericalException("XY evolution step size underflow.", {"t": t, "remaining": remaining, "estimate": estimate})

            v = norm * (basis.T @ coef)
            remaining = remaining - dt if (dt != remaining) else 0.0
            substeps += 1

        _logsi.LogDebug("XY evolution t=%g finished in %d substeps.", t, substeps)
        state.Amplitudes[:] = v
        return state


    @staticmethod
    def ApplyZZEvolution(state:SSStateVector, T:float) -> SSStateVector:
        """
        Applies exp(-i T sum_i sigma^z_i sigma^z_{i+1}) to a state in place.

        Every amplitude b is multiplied by exp(-i T E(b)), with E(b) = sum_i s_i s_{i+1}
        and s_i = -1 for |0> (sigma^z eigenvalue convention of the library).
        """
        if (state is None):
            raise SSArgumentNullException("state")
        if (T == 0.0):
            return state
        return state.ApplyDiagonal(np.exp(-1j * T * SSDynamics.IsingEnergies(state.NumQubits)))


    @staticmethod
    def DenseXYHamiltonian(nQubits:int) -> np.ndarray:
        """
        Returns the dense 2^N x 2^N matrix of H_T (small N only).
        """
        dim:int = 2 ** nQubits
        H = np.zeros((dim, dim), dtype=complex)
        for qa, qb in _RingBonds(nQubits):
            H += SSGates.DenseTwo(nQubits, qa, qb, XY_BOND)
        return H
