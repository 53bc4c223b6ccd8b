"""
Module: ssnoisestudy.py

Squeezing with coherent FSIM errors: for every error level r and realization,
one error gate is sampled per bond, the FSIM angles are frozen at their
error-free optimum and only the single-qubit rotations are re-optimized.
"""

# external package imports.
import logging

import numpy as np
from smartinspectpython.siauto import SIAuto, SILevel, SISession

# our package imports.
from .ssansatzfamily import SSAnsatzFamily
from .ssansatzspec import SSAnsatzSpec
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssboundary import SSBoundary
from .sscoherenterror import SSCoherentError
from .ssobjective import SSObjective
from .ssoptimizer import SSOptimizer
from .ssoptimizerconfig import SSOptimizerConfig
from .sssqueezingkind import SSSqueezingKind

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


_DEFAULT_FAMILIES:tuple = (SSAnsatzFamily.ALA_SHARED, SSAnsatzFamily.ALA_SITE_DEPENDENT)


@export
class SSNoiseStudy:
    """
    Coherent-error sweeps of the alternating layered families (static methods only).

    Threadsafety:
        Pure given the seed; restarts may run concurrently through the optimizer settings.
    """

    @staticmethod
    def EntanglerAngles(nQubits:int, depth:int, cfg:SSOptimizerConfig, kind:SSSqueezingKind=SSSqueezingKind.LINEAR,
                        boundary:SSBoundary=SSBoundary.PBC) -> tuple:
        """
        Returns the error-free optimal FSIM angles (theta, phi) of the shared family:
        the tabulated values for periodic boundaries when available, otherwise the
        result of a multi-start optimization.
        """
        boundary = SSBoundary.Parse(boundary)
        if (boundary == SSBoundary.PBC):
            try:
                return SSObjective.TableAngles(depth, nQubits)
            except SSArgumentOutOfRangeException:
                pass
        spec = SSAnsatzSpec(SSAnsatzFamily.ALA_SHARED, boundary, nQubits, depth)
        best = SSOptimizer.MultiStart(SSObjective(spec, kind), cfg).Best
        return float(best.XOpt[4]), float(best.XOpt[5])


    @staticmethod
    def NoiseSweep(nQubits:int, depth:int, rList, realizations:int=5, cfg:SSOptimizerConfig=None,
                   families=_DEFAULT_FAMILIES, kind:SSSqueezingKind=SSSqueezingKind.LINEAR,
                   thetaOpt:float=None, phiOpt:float=None, boundary:SSBoundary=SSBoundary.PBC) -> dict:
        """
        Re-optimizes the single-qubit rotations under sampled coherent FSIM errors.

        Args:
            nQubits (int):
                Number of qubits N.
            depth (int):
                Depth p.
            rList (list):
                Error levels r, each in [0, 0.5).
            realizations (int):
                Error realizations per level (>= 1).
            cfg (SSOptimizerConfig):
                Optimizer settings; cfg.Seed also seeds the error gates.
            families (list):
                Alternating layered families to re-optimize; every family sees the
                same gate realizations.
            kind (SSSqueezingKind):
                Squeezing parameter to minimize.
            thetaOpt (float):
                Target swap angle; defaults to the error-free optimum.
            phiOpt (float):
                Target phase angle; defaults to the error-free optimum.
            boundary (SSBoundary):
                Boundary condition of every re-optimized circuit and of the error-free
                reference.  Bond N carries a sampled gate under OBC too, but is never applied.

        Returns:
            A dictionary {boundary, theta_opt, phi_opt, r, rows, medians, gates}: rows holds
            {r, realization, family, xi2_opt} entries, medians maps a family name to its
            median xi2_opt per r, and gates maps the r index to the sampled gate
            parameters of every realization.

        Realization m of level index i draws its gates from the random stream
        (cfg.Seed, i, m).
        """
        cfg = cfg or SSOptimizerConfig()
        rList = [float(r) for r in rList]
        families = [SSAnsatzFamily.Parse(f) for f in families]
        boundary = SSBoundary.Parse(boundary)
        if (realizations is None) or (realizations < 1):
            raise SSArgumentOutOfRangeException("realizations", "At least one realization is required, got {0}.".format(realizations))
        for family in families:
            if (family.IsAnalog):
                raise SSArgumentOutOfRangeException("families", "{0} has no FSIM gates.".format(family.name))

        _logsi.EnterMethod(SILevel.Debug)
        try:
            if (thetaOpt is None) or (phiOpt is None):
                thetaOpt, phiOpt = SSNoiseStudy.EntanglerAngles(nQubits, depth, cfg, kind, boundary)
            _logsi.LogMessage("Noise sweep N=%d p=%d %s around FSIM(%.6f, %.6f).", nQubits, depth, boundary.name, thetaOpt, phiOpt)

            rows:list = []
            gates:dict = {}
            for i, r in enumerate(rList):
                gates[i] = []
                for m in range(int(realizations)):
                    params = SSCoherentError.SampleErrorGates(thetaOpt, phiOpt, r, nQubits, seed=[cfg.Seed, i, m])
                    gates[i].append([p.ToDictionary() for p in params])
                    bondGates = SSCoherentError.BondGates(params)
                    for family in families:
                        spec = SSAnsatzSpec(family, boundary, nQubits, depth)
                        objective = SSObjective(spec, kind, SSObjective.FrozenEntanglers(spec, thetaOpt, phiOpt), bondGates)
                        best = SSOptimizer.MultiStart(objective, cfg).Best
                        rows.append({"r": r, "realization": m, "family": family.name, "xi2_opt": best.FOpt})
                        _logsi.LogVerbose("r=%g realization %d %s: xi2_opt=%.8f", r, m, family.name, best.FOpt)

            medians:dict = {}
            for family in families:
                medians[family.name] = [float(np.median([row["xi2_opt"] for row in rows if (row["r"] == r) and (row["family"] == family.name)]))
                                        for r in rList]

            return {"boundary": boundary.name, "theta_opt": float(thetaOpt), "phi_opt": float(phiOpt), "r": rList, "rows": rows, "medians": medians, "gates": gates}
        finally:
            _logsi.LeaveMethod(SILevel.Debug)
