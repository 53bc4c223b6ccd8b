"""
Module: ssoptimizer.py

BFGS minimization with forward finite-difference gradients, random multi-start,
warm-start chaining across system sizes and depth sweeps.
"""

# external package imports.
from concurrent.futures import ThreadPoolExecutor
import logging
import warnings

import numpy as np
from scipy.optimize import line_search
from smartinspectpython.siauto import SIAuto, SILevel, SISession

# our package imports.
from .ssansatzfamily import SSAnsatzFamily
from .ssansatzspec import SSAnsatzSpec
from .ssargumentnullexception import SSArgumentNullException
from .ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from .ssboundary import SSBoundary
from .ssevolutionconfig import SSEvolutionConfig
from .ssmultistartresult import SSMultiStartResult
from .ssnumericalexception import SSNumericalException
from .ssobjective import SSObjective
from .ssoptimizationtrace import SSOptimizationTrace
from .ssoptimizerconfig import SSOptimizerConfig
from .sssqueezingkind import SSSqueezingKind
from .ssterminationreason import SSTerminationReason
from .sstwisting import SSTwisting
from .ssunsupportedconfigurationexception import SSUnsupportedConfigurationException

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


class _CachedProblem:
    """
    Objective values and gradients of one BFGS run, cached by the exact point.
    """

    def __init__(self, f, epsilon:float, gradient=None) -> None:
        self._fFunc = f
        self._fEpsilon:float = epsilon
        self._fGradient = gradient
        self._fValues:dict = {}
        self._fGradients:dict = {}
        self.Evaluations:int = 0

    def _Counted(self, x:np.ndarray) -> float:
        self.Evaluations += 1
        return float(self._fFunc(x))

    def Value(self, x:np.ndarray) -> float:
        key = x.tobytes()
        if (key not in self._fValues):
            self._fValues[key] = self._Counted(x)
        return self._fValues[key]

    def Gradient(self, x:np.ndarray) -> np.ndarray:
        key = x.tobytes()
        if (key not in self._fGradients):
            if (self._fGradient is not None):
                self._fGradients[key] = np.asarray(self._fGradient(x), dtype=float)
            else:
                self._fGradients[key] = SSOptimizer.FdGradient(self._Counted, x, self._fEpsilon, fx=self.Value(x))
        return self._fGradients[key]


@export
class SSOptimizer:
    """
    Gradient-based minimization of squeezing objectives (static methods only).

    Threadsafety:
        Runs own their state; restarts may execute concurrently.
    """

    @staticmethod
    def FdGradient(f, x, epsilon:float, fx:float=None) -> np.ndarray:
        """
        Returns the forward finite-difference gradient [f(x + eps e_j) - f(x)] / eps.

        Args:
            f (callable):
                Objective taking a float array.
            x (array-like):
                Point of evaluation.
            epsilon (float):
                Step (> 0).
            fx (float):
                Known value f(x); when omitted it is evaluated, for m + 1 calls in total.

        Returns:
            The gradient array.

        Raises:
            SSArgumentOutOfRangeException:
                epsilon is not positive.
            SSNumericalException:
                The objective returned a non-finite value; the diagnostics name the
                parameter index (-1 for the base point).
        """
        if (epsilon is None) or not (epsilon > 0):
            raise SSArgumentOutOfRangeException("epsilon", "Finite-difference step must be positive, got {0}.".format(epsilon))
        x = np.asarray(x, dtype=float).reshape(-1)
        f0:float = float(f(x)) if (fx is None) else float(fx)
        if not np.isfinite(f0):
            raise SSNumericalException("Objective is not finite at the base point.", {"index": -1, "value": f0})

        gradient = np.empty_like(x)
        for j in range(x.shape[0]):
            xj = x.copy()
            xj[j] += epsilon
            fj:float = float(f(xj))
            if not np.isfinite(fj):
                raise SSNumericalException("Objective is not finite at parameter {0}.".format(j), {"index": j, "value": fj})
            gradient[j] = (fj - f0) / epsilon
        return gradient


    @staticmethod
    def BfgsMinimize(f, x0, cfg:SSOptimizerConfig=None, gradient=None) -> SSOptimizationTrace:
        """
        Minimizes a function with BFGS and a strong Wolfe line search.

        Args:
            f (callable):
                Objective taking a float array.
            x0 (array-like):
                Starting point.
            cfg (SSOptimizerConfig):
                Settings; defaults when None.
            gradient (callable):
                Optional exact gradient; forward differences with cfg.FdEpsilon otherwise.

        Returns:
            The SSOptimizationTrace; row 0 is the starting point and every accepted
            step adds a row.

        Raises:
            SSNumericalException:
                The objective is not finite at x0.

        A failed line search is retried once from a steepest descent direction
        before the run stops with the best point so far.
        """
        cfg = cfg or SSOptimizerConfig()
        x = np.array(x0, dtype=float).reshape(-1)
        trace = SSOptimizationTrace(x)
        problem = _CachedProblem(f, cfg.FdEpsilon, gradient)

        fx:float = problem.Value(x)
        if not np.isfinite(fx):
            raise SSNumericalException("Objective is not finite at the starting point.", {"value": fx})
        gx = problem.Gradient(x)
        trace.Record(x, fx, gx)

        n:int = x.shape[0]
        identity = np.eye(n)
        H = identity.copy()
        fPrev:float = fx + np.linalg.norm(gx) / 2.0    # initial step of about unit length.
        updated:bool = False
        reason = SSTerminationReason.MAX_ITERATIONS

        for _ in range(cfg.MaxIterations):
            if (n == 0) or (np.max(np.abs(gx)) <= cfg.GradTolerance):
                reason = SSTerminationReason.GRADIENT_TOLERANCE
                break

            alpha = None
            for attempt in range(2):
                direction = -H @ gx
                try:
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore", RuntimeWarning)    # scipy LineSearchWarning.
                        alpha, _, _, fNew, _, gNew = line_search(problem.Value, problem.Gradient, x, direction, gx, fx, fPrev,
                                                                 c1=cfg.WolfeC1, c2=cfg.WolfeC2)
                except SSNumericalException as ex:
                    _logsi.LogVerbose("Line search hit a non-finite objective: %s", ex)
                    alpha = None
                if (alpha is not None) and (fNew is not None) and (fNew <= fx):
                    break
                alpha = None
                if not updated:
                    break
                H = identity.copy()    # retry along -g.
                updated = False

            if (alpha is None):
                reason = SSTerminationReason.LINE_SEARCH_FAILURE
                _logsi.LogVerbose("BFGS line search failed after %d iterations (f=%.10g).", trace.Iterations, fx)
                break

            s = alpha * direction
            xNew = x + s
            if (gNew is None):
                gNew = problem.Gradient(xNew)
            y = gNew - gx
            fPrev, x, fx, gx = fx, xNew, float(fNew), gNew
            trace.Record(x, fx, gx)

            sy:float = float(s @ y)
            if (sy > 0):
                if not updated:
                    H = (sy / float(y @ y)) * identity
                rho:float = 1.0 / sy
                A = identity - rho * np.outer(s, y)
                H = A @ H @ A.T + rho * np.outer(s, s)
                updated = True
        else:
            if (n == 0) or (np.max(np.abs(gx)) <= cfg.GradTolerance):
                reason = SSTerminationReason.GRADIENT_TOLERANCE

        trace.Reason = reason
        trace.Evaluations = problem.Evaluations
        return trace


    @staticmethod
    def InitialPoint(cfg:SSOptimizerConfig, restartIndex:int, nParams:int) -> np.ndarray:
        """
        Returns the starting point of a restart: uniform in [-initRange, initRange],
        drawn from the random stream (seed, restartIndex).
        """
        rng = np.random.default_rng([cfg.Seed, int(restartIndex)])
        return rng.uniform(-cfg.InitRange, cfg.InitRange, size=int(nParams))


    @staticmethod
    def MultiStart(f, cfg:SSOptimizerConfig=None, nParams:int=None, gradient=None, restarts:int=None,
                   firstIndex:int=0) -> SSMultiStartResult:
        """
        Runs BFGS from independent random starting points and keeps the best run.

        Args:
            f (callable):
                Objective; an SSObjective supplies its own parameter count.
            cfg (SSOptimizerConfig):
                Settings; restart i draws from the stream (cfg.Seed, i).
            nParams (int):
                Number of parameters (required unless f is an SSObjective).
            gradient (callable):
                Optional exact gradient.
            restarts (int):
                Number of runs; defaults to cfg.Restarts.
            firstIndex (int):
                Restart index of the first run.

        Returns:
            The SSMultiStartResult; runs are listed in restart order and the winner
            does not depend on the number of threads.
        """
        if (f is None):
            raise SSArgumentNullException("f")
        cfg = cfg or SSOptimizerConfig()
        if (nParams is None):
            if not isinstance(f, SSObjective):
                raise SSArgumentNullException("nParams")
            nParams = f.FreeCount
        restarts = cfg.Restarts if (restarts is None) else int(restarts)
        indices:list = list(range(int(firstIndex), int(firstIndex) + restarts))

        def run(index:int) -> SSOptimizationTrace:
            trace:SSOptimizationTrace = SSOptimizer.BfgsMinimize(f, SSOptimizer.InitialPoint(cfg, index, nParams), cfg, gradient)
            trace.RestartIndex = index
            _logsi.LogVerbose("Restart %d: f_opt=%.10g after %d iterations (%s).", index, trace.FOpt, trace.Iterations, trace.Reason.name)
            return trace

        _logsi.EnterMethod(SILevel.Debug)
        try:
            if (cfg.Threads > 1) and (restarts > 1):
                with ThreadPoolExecutor(max_workers=cfg.Threads) as executor:
                    traces:list = list(executor.map(run, indices))
            else:
                traces = [run(index) for index in indices]

            nQubits = f.Spec.NumQubits if isinstance(f, SSObjective) else None
            result = SSMultiStartResult(traces, nQubits)
            _logsi.LogMessage("Multi-start best of %d runs: f_opt=%.10g (restart %d).", restarts, result.Best.FOpt, result.Best.RestartIndex)
            return result
        finally:
            _logsi.LeaveMethod(SILevel.Debug)


    @staticmethod
    def WarmStartChain(family:SSAnsatzFamily, depth:int, nQubitsList, cfg:SSOptimizerConfig=None,
                       kind:SSSqueezingKind=SSSqueezingKind.LINEAR, boundary:SSBoundary=SSBoundary.PBC,
                       evolution:SSEvolutionConfig=None) -> list:
        """
        Optimizes a family over increasing system sizes, starting each size from the
        optimum of the previous one.

        Args:
            family (SSAnsatzFamily):
                Circuit family whose parameter count does not depend on N.
            depth (int):
                Depth p.
            nQubitsList (list):
                Numbers of qubits, strictly increasing in steps of 2.
            cfg (SSOptimizerConfig):
                Settings; the first size runs cfg.Restarts random starts, later sizes run
                the warm start plus cfg.WarmStartRestarts random starts.
            kind (SSSqueezingKind):
                Squeezing parameter to minimize.
            boundary (SSBoundary):
                Boundary condition.
            evolution (SSEvolutionConfig):
                Propagator settings for analog families.

        Returns:
            A list with one SSMultiStartResult per size; the warm start run has restart index -1.

        Raises:
            SSUnsupportedConfigurationException:
                The family's parameter count depends on N.
            SSArgumentOutOfRangeException:
                The size list is empty or does not step by 2.
        """
        family = SSAnsatzFamily.Parse(family)
        cfg = cfg or SSOptimizerConfig()
        if not family.IsSizeIndependent:
            raise SSUnsupportedConfigurationException("Warm starts need a parameter layout independent of N; {0} is not.".format(family.name))
        sizes:list = [int(n) for n in (nQubitsList or [])]
        if (len(sizes) == 0):
            raise SSArgumentOutOfRangeException("nQubitsList", "At least one system size is required.")
        for a, b in zip(sizes, sizes[1:]):
            if (b - a != 2):
                raise SSArgumentOutOfRangeException("nQubitsList", "System sizes must increase in steps of 2, got {0}.".format(sizes))

        _logsi.EnterMethod(SILevel.Debug)
        try:
            results:list = []
            previous:np.ndarray = None
            for n in sizes:
                objective = SSObjective(SSAnsatzSpec(family, boundary, n, depth), kind, evolution=evolution)
                if (previous is None):
                    result = SSOptimizer.MultiStart(objective, cfg)
                else:
                    warm:SSOptimizationTrace = SSOptimizer.BfgsMinimize(objective, previous, cfg)
                    warm.RestartIndex = -1
                    traces:list = [warm]
                    if (cfg.WarmStartRestarts > 0):
                        traces += SSOptimizer.MultiStart(objective, cfg, restarts=cfg.WarmStartRestarts).Traces
                    result = SSMultiStartResult(traces, n)
                    _logsi.LogMessage("Warm start N=%d: initial f=%.10g, final f=%.10g.", n, warm.Rows[0][1], warm.FOpt)
                results.append(result)
                previous = result.Best.XOpt
            return results
        finally:
            _logsi.LeaveMethod(SILevel.Debug)


    @staticmethod
    def DepthSweep(spec:SSAnsatzSpec, depths, cfg:SSOptimizerConfig=None, kind:SSSqueezingKind=SSSqueezingKind.LINEAR,
                   evolution:SSEvolutionConfig=None, reference:float=None) -> dict:
        """
        Optimizes a family at several depths and finds the smallest depth beating two-axis twisting.

        Args:
            spec (SSAnsatzSpec):
                Circuit family; its depth is replaced by every entry of depths.
            depths (list):
                Depths to optimize, in increasing order.
            cfg (SSOptimizerConfig):
                Settings.
            kind (SSSqueezingKind):
                Squeezing parameter to minimize.
            evolution (SSEvolutionConfig):
                Propagator settings for analog families.
            reference (float):
                Reference squeezing parameter; defaults to the two-axis twisting minimum for N.

        Returns:
            A dictionary {reference, p_star, rows: [{depth, xi2_opt, ratio, result}]};
            p_star is the smallest depth with xi2_opt / reference < 1, or None.
        """
        if (spec is None):
            raise SSArgumentNullException("spec")
        cfg = cfg or SSOptimizerConfig()
        if (reference is None):
            reference = SSTwisting.TatReference(spec.NumQubits)

        rows:list = []
        pStar:int = None
        for depth in depths:
            objective = SSObjective(spec.With(depth=int(depth)), kind, evolution=evolution)
            result:SSMultiStartResult = SSOptimizer.MultiStart(objective, cfg)
            ratio:float = result.Best.FOpt / reference
            rows.append({"depth": int(depth), "xi2_opt": result.Best.FOpt, "ratio": ratio, "result": result})
            if (pStar is None) and (ratio < 1.0):
                pStar = int(depth)
            _logsi.LogMessage("Depth %d: xi2_opt=%.8f, ratio to reference=%.6f.", int(depth), result.Best.FOpt, ratio)
        return {"reference": reference, "p_star": pStar, "rows": rows}
