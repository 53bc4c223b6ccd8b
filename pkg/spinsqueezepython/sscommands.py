"""
Module: sscommands.py

Experiment commands run by the command line: optimize, twist and the analyze
tasks.  Every command validates its configuration, runs, and writes a json
result record plus csv tables into the output folder.
"""

# external package imports.
import logging
import math
import os

import numpy as np
from smartinspectpython.siauto import SIAuto, SILevel, SISession

# our package imports.
from .ssansatz import SSAnsatz
from .ssansatzfamily import SSAnsatzFamily
from .ssansatzspec import SSAnsatzSpec
from .ssboundary import SSBoundary
from .sscollectivespin import SSCollectiveSpin
from .ssconfiguration import SSConfiguration
from .ssconfigurationexception import SSConfigurationException
from .ssentanglementpower import SSEntanglementPower
from .ssevolutionconfig import SSEvolutionConfig
from .ssexpressibility import SSExpressibility
from .ssfilehelper import SSFileHelper
from .sshusimi import SSHusimi
from .ssmultistartresult import SSMultiStartResult
from .ssnoisestudy import SSNoiseStudy
from .ssobjective import SSObjective
from .ssoptimizer import SSOptimizer
from .ssoptimizerconfig import SSOptimizerConfig
from .ssresultrecord import SSResultRecord
from .sssqueezingkind import SSSqueezingKind
from .ssstatevector import SSStateVector
from .sstwisting import SSTwisting
from .sstwistmodel import SSTwistModel

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


# keys every command accepts.
_COMMON_SCHEMA:dict = {
    "seed": int,
    "threads": int,
    "out": str,
}

_ANSATZ_SCHEMA:dict = {
    "ansatz.family": str,
    "ansatz.boundary": str,
    "ansatz.n_qubits": int,
    "ansatz.depth": int,
}

_OBJECTIVE_SCHEMA:dict = {
    "objective.kind": str,
    "objective.full_generators": bool,     # default false: 3 x 3 squeezing matrix; true: d x d.
}

_OPTIMIZER_SCHEMA:dict = {
    "optimizer.fd_epsilon": float,
    "optimizer.max_iterations": int,
    "optimizer.grad_tolerance": float,
    "optimizer.restarts": int,
    "optimizer.init_range": float,
    "optimizer.wolfe_c1": float,
    "optimizer.wolfe_c2": float,
    "optimizer.warm_start_restarts": int,
}

_EVOLUTION_SCHEMA:dict = {
    "evolution.krylov_dim": int,
    "evolution.tolerance": float,
    "evolution.max_substeps": int,
}

# keys that do not change results; left out of the configuration hash.
_RUNTIME_KEYS:tuple = ("out", "threads")

# two-qubit gates with known entanglement power, for the Monte Carlo check.
_REFERENCE_GATES:dict = {
    "identity": (np.eye(4, dtype=complex), 0.0),
    "swap": (np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex), 0.0),
    "cnot": (np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex), 2.0 / 9.0),
}

ANALYZE_TASKS:tuple = ("expressibility", "entanglement_power", "husimi", "noise_sweep")
""" Names of the analyze tasks. """


@export
class SSCommands:
    """
    Experiment commands (static methods only).

    Each command takes a loaded SSConfiguration and an output folder and returns the
    finished SSResultRecord after its files were written.  Command payloads depend
    only on the configuration and the seed.

    Threadsafety:
        Commands may run restarts on worker threads (key "threads"); the payload
        does not depend on the number of threads.
    """

    @staticmethod
    def Schema(command:str) -> dict:
        """
        Returns the configuration schema of a command.

        Args:
            command (str):
                "optimize", "twist" or "analyze.<task>".

        Raises:
            SSConfigurationException:
                The command is unknown.
        """
        schema:dict = dict(_COMMON_SCHEMA)
        if (command == "optimize"):
            schema.update(_ANSATZ_SCHEMA)
            schema.update(_OBJECTIVE_SCHEMA)
            schema.update(_OPTIMIZER_SCHEMA)
            schema.update(_EVOLUTION_SCHEMA)
            schema.update({
                "optimize.chain": list,
                "optimize.depth_sweep": list,
                "optimize.freeze_fsim": (bool, list),
                "optimize.reference": float,
            })
        elif (command == "twist"):
            schema.update({
                "twist.models": list,
                "twist.n_qubits": (int, list),
                "twist.kind": str,
                "twist.tau_max": float,
                "twist.grid_points": int,
            })
        elif (command == "analyze.expressibility"):
            schema.update(_ANSATZ_SCHEMA)
            schema.update(_EVOLUTION_SCHEMA)
            schema.update({
                "expressibility.families": list,
                "expressibility.n_samples": int,
                "expressibility.n_bins": int,
            })
        elif (command == "analyze.entanglement_power"):
            schema.update({
                "entanglement_power.points": list,
                "entanglement_power.gates": list,
                "entanglement_power.n_samples": int,
            })
        elif (command == "analyze.husimi"):
            schema.update(_ANSATZ_SCHEMA)
            schema.update(_OBJECTIVE_SCHEMA)
            schema.update(_OPTIMIZER_SCHEMA)
            schema.update(_EVOLUTION_SCHEMA)
            schema.update({
                "husimi.n_theta": int,
                "husimi.n_phi": int,
                "husimi.params": list,
                "husimi.state_file": str,
            })
        elif (command == "analyze.noise_sweep"):
            # families come from noise_sweep.families
            schema.update({k: v for k, v in _ANSATZ_SCHEMA.items() if (k != "ansatz.family")})
            schema.update(_OBJECTIVE_SCHEMA)
            schema.update(_OPTIMIZER_SCHEMA)
            schema.update({
                "noise_sweep.r_list": list,
                "noise_sweep.realizations": int,
                "noise_sweep.families": list,
                "noise_sweep.theta_opt": float,
                "noise_sweep.phi_opt": float,
            })
        else:
            raise SSConfigurationException("Unknown command \"{0}\".".format(command))
        return schema


    @staticmethod
    def ConfigHash(config:SSConfiguration) -> str:
        """
        Returns the configuration digest, leaving out keys that do not change results
        (output folder and thread count).
        """
        values:dict = {k: v for k, v in config.ToDictionary().items() if (k not in _RUNTIME_KEYS)}
        return JsonHelper.Sha256(values)


    @staticmethod
    def _Begin(command:str, config:SSConfiguration) -> SSResultRecord:
        config.Validate(SSCommands.Schema(command))
        seed:int = config.ReadInteger("seed", 0)
        record = SSResultRecord(command, config.ToDictionary(), SSCommands.ConfigHash(config), seed)
        _logsi.LogMessage("Command %s: config_hash=%s seed=%d.", command, record.ConfigHash, seed)
        return record


    @staticmethod
    def _Parse(enumType, key:str, value, fileName:str=None):
        try:
            return enumType.Parse(value)
        except ValueError as ex:
            raise SSConfigurationException("Configuration key \"{0}\": {1}".format(key, ex), fileName) from ex


    @staticmethod
    def _Kind(config:SSConfiguration, key:str="objective.kind") -> SSSqueezingKind:
        return SSCommands._Parse(SSSqueezingKind, key, config.ReadString(key, "LINEAR"), config.FileName)


    @staticmethod
    def _Spec(config:SSConfiguration, defaultFamily:str=None) -> SSAnsatzSpec:
        section:dict = config.ReadSection("ansatz")
        if (defaultFamily is not None):
            section.setdefault("family", defaultFamily)
        return SSAnsatzSpec.FromDictionary(section)


    @staticmethod
    def _OptimizerConfig(config:SSConfiguration, seed:int) -> SSOptimizerConfig:
        return SSOptimizerConfig.FromDictionary(config.ReadSection("optimizer"), seed=seed).With(threads=config.ReadInteger("threads", 1))


    @staticmethod
    def _Evolution(config:SSConfiguration) -> SSEvolutionConfig:
        section:dict = config.ReadSection("evolution")
        return SSEvolutionConfig.FromDictionary(section) if (section) else None


    @staticmethod
    def _WriteTrace(fileName:str, result:SSMultiStartResult, record:SSResultRecord) -> str:
        return SSFileHelper.WriteCsv(fileName, ["iteration", "objective", "grad_norm"], result.Best.Rows, record.Provenance())


    @staticmethod
    def _Winner(objective:SSObjective, result:SSMultiStartResult) -> dict:
        best = result.Best
        spec:SSAnsatzSpec = objective.Spec
        n:int = spec.NumQubits
        summary:dict = {
            "ansatz": spec.ToDictionary(),
            "kind": objective.Kind.name,
            "xi2_opt": best.FOpt,
            "x_opt": objective.FullVector(best.XOpt),
            "parameter_layout": [d.Label for d in SSAnsatz.ParameterLayout(spec)],
            "frozen": {str(k): v for k, v in sorted(objective.Frozen.items())},
            "restart_index": best.RestartIndex,
            "termination": best.Reason.name,
            "fundamental_limit": SSCollectiveSpin.FundamentalLimit(n),
            "objective_values": result.ObjectiveValues(),
        }
        state:SSStateVector = objective.State(best.XOpt)
        if (objective.Kind == SSSqueezingKind.LINEAR):
            reference:float = SSTwisting.TatReference(n)
            summary["xi2_tat"] = reference
            summary["ratio_tat"] = best.FOpt / reference
            summary["report"] = SSCollectiveSpin.Squeezing(state, SSSqueezingKind.LINEAR).ToDictionary()
        else:
            summary["witness"] = SSCollectiveSpin.WitnessFromState(state).ToDictionary()
        return summary


    @staticmethod
    def Optimize(config:SSConfiguration, outDir:str) -> SSResultRecord:
        """
        Optimizes a circuit family.

        Args:
            config (SSConfiguration):
                Sections "ansatz", "objective", "optimizer", "evolution" and "optimize".
                With "optimize.chain" (list of N) a warm start chain runs; with
                "optimize.depth_sweep" (list of p) a depth sweep runs and reports p*;
                otherwise one multi-start optimization runs, optionally with the FSIM
                angles frozen ("optimize.freeze_fsim": true for the tabulated angles or
                [theta, phi]).
            outDir (str):
                Output folder.

        Returns:
            The finished result record.  Files: optimize.json and one trace csv
            (iteration, objective, grad_norm) per optimized problem.

        Raises:
            SSConfigurationException:
                The configuration is invalid.
            SSUnsupportedConfigurationException:
                A chain was configured for a family whose layout depends on N.
            SSNumericalException:
                The objective became non-finite.
        """
        record:SSResultRecord = SSCommands._Begin("optimize", config)
        _logsi.EnterMethod(SILevel.Debug)
        try:
            spec:SSAnsatzSpec = SSCommands._Spec(config)
            kind:SSSqueezingKind = SSCommands._Kind(config)
            fullGenerators:bool = config.ReadBoolean("objective.full_generators", False)
            cfg:SSOptimizerConfig = SSCommands._OptimizerConfig(config, record.Seed)
            evolution:SSEvolutionConfig = SSCommands._Evolution(config)
            chain:list = config.ReadList("optimize.chain", None)
            depths:list = config.ReadList("optimize.depth_sweep", None)
            payload:dict = record.Payload
            payload["optimizer"] = cfg.ToDictionary()

            if (chain is not None) and (depths is not None):
                raise SSConfigurationException("\"optimize.chain\" and \"optimize.depth_sweep\" cannot be combined.", config.FileName)

            if (chain is not None):
                payload["mode"] = "chain"
                payload["chain"] = []
                results:list = SSOptimizer.WarmStartChain(spec.Family, spec.Depth, chain, cfg, kind, spec.Boundary, evolution)
                for result in results:
                    objective = SSObjective(spec.With(nQubits=result.NumQubits), kind, evolution=evolution)
                    payload["chain"].append(SSCommands._Winner(objective, result))
                    SSCommands._WriteTrace(os.path.join(outDir, "optimize_trace_N{0}.csv".format(result.NumQubits)), result, record)

            elif (depths is not None):
                payload["mode"] = "depth_sweep"
                sweep:dict = SSOptimizer.DepthSweep(spec, depths, cfg, kind, evolution, config.ReadFloat("optimize.reference", None))
                payload["reference"] = sweep["reference"]
                payload["p_star"] = sweep["p_star"]
                payload["rows"] = []
                for row in sweep["rows"]:
                    result:SSMultiStartResult = row["result"]
                    payload["rows"].append({"depth": row["depth"], "xi2_opt": row["xi2_opt"], "ratio": row["ratio"],
                                            "x_opt": result.Best.XOpt, "restart_index": result.Best.RestartIndex})
                    SSCommands._WriteTrace(os.path.join(outDir, "optimize_trace_p{0}.csv".format(row["depth"])), result, record)
                SSFileHelper.WriteCsv(os.path.join(outDir, "depth_sweep.csv"), ["depth", "xi2_opt", "ratio"],
                                      [(r["depth"], r["xi2_opt"], r["ratio"]) for r in payload["rows"]], record.Provenance())

            else:
                payload["mode"] = "multi_start"
                frozen:dict = None
                freeze = config.ReadList("optimize.freeze_fsim", [False])
                if (freeze != [False]):
                    if (freeze == [True]):
                        theta, phi = SSObjective.TableAngles(spec.Depth, spec.NumQubits)
                    elif (len(freeze) == 2):
                        theta, phi = float(freeze[0]), float(freeze[1])
                    else:
                        raise SSConfigurationException("\"optimize.freeze_fsim\" must be true, false or [theta, phi].", config.FileName)
                    frozen = SSObjective.FrozenEntanglers(spec, theta, phi)
                objective = SSObjective(spec, kind, frozen, evolution=evolution, fullGenerators=fullGenerators)
                result = SSOptimizer.MultiStart(objective, cfg)
                payload["winner"] = SSCommands._Winner(objective, result)
                payload["runs"] = [t.ToDictionary(includeRows=False) for t in result.Traces]
                SSCommands._WriteTrace(os.path.join(outDir, "optimize_trace.csv"), result, record)

            record.Finish()
            record.WriteToFile(os.path.join(outDir, "optimize.json"))
            return record

        except Exception as ex:
            _logsi.LogException(None, ex)
            raise

        finally:
            _logsi.LeaveMethod(SILevel.Debug)


    @staticmethod
    def Twist(config:SSConfiguration, outDir:str) -> SSResultRecord:
        """
        Finds the twisting minima of one-axis and two-axis twisting.

        Args:
            config (SSConfiguration):
                Section "twist": models (default ["OAT", "TAT"]), n_qubits (int or
                list), kind, tau_max and grid_points.
            outDir (str):
                Output folder.

        Returns:
            The finished result record.  Files: twist.json, one curve csv (tau, xi2) per
            model and N, and twist_table.csv when both models ran.
        """
        record:SSResultRecord = SSCommands._Begin("twist", config)
        _logsi.EnterMethod(SILevel.Debug)
        try:
            models:list = [SSCommands._Parse(SSTwistModel, "twist.models", m, config.FileName)
                           for m in config.ReadList("twist.models", ["OAT", "TAT"])]
            sizes:list = config.ReadList("twist.n_qubits", [20])
            kind:SSSqueezingKind = SSCommands._Kind(config, "twist.kind")
            tauMax:float = config.ReadFloat("twist.tau_max", None)
            gridPoints:int = config.ReadInteger("twist.grid_points", None)
            kwargs:dict = {}
            if (tauMax is not None):
                kwargs["tauMax"] = tauMax
            if (gridPoints is not None):
                kwargs["gridPoints"] = gridPoints

            results:dict = {}
            for n in sizes:
                if isinstance(n, bool) or not isinstance(n, int):
                    raise SSConfigurationException("\"twist.n_qubits\" must hold integers, got {0!r}.".format(n), config.FileName)
                for model in models:
                    result = SSTwisting.MinimizeTwist(model, n, kind, **kwargs)
                    results[(model, n)] = result
                    SSFileHelper.WriteCsv(os.path.join(outDir, "twist_{0}_N{1}.csv".format(model.name, n)),
                                          ["tau", "xi2"], result.TraceRows(), record.Provenance())

            record.Payload["results"] = [r.ToDictionary() for r in results.values()]
            if (SSTwistModel.OAT in models) and (SSTwistModel.TAT in models):
                table:list = []
                for n in sizes:
                    oat, tat = results[(SSTwistModel.OAT, n)], results[(SSTwistModel.TAT, n)]
                    table.append((n, oat.TauStar, oat.Xi2Min, tat.TauStar, tat.Xi2Min, SSCollectiveSpin.FundamentalLimit(n)))
                header:list = ["n_qubits", "tau_oat", "xi2_oat", "tau_tat", "xi2_tat", "limit"]
                record.Payload["table"] = [dict(zip(header, row)) for row in table]
                SSFileHelper.WriteCsv(os.path.join(outDir, "twist_table.csv"), header, table, record.Provenance())

            record.Finish()
            record.WriteToFile(os.path.join(outDir, "twist.json"))
            return record

        except Exception as ex:
            _logsi.LogException(None, ex)
            raise

        finally:
            _logsi.LeaveMethod(SILevel.Debug)


    @staticmethod
    def Analyze(task:str, config:SSConfiguration, outDir:str) -> SSResultRecord:
        """
        Runs an analysis task.

        Args:
            task (str):
                One of "expressibility", "entanglement_power", "husimi", "noise_sweep".
            config (SSConfiguration):
                Configuration; the task reads the section named after it.
            outDir (str):
                Output folder.

        Returns:
            The finished result record, written to "<task>.json".

        Raises:
            SSConfigurationException:
                The task is unknown or the configuration is invalid.
        """
        if (task not in ANALYZE_TASKS):
            raise SSConfigurationException("Unknown analyze task \"{0}\"; expected one of {1}.".format(task, ", ".join(ANALYZE_TASKS)))
        record:SSResultRecord = SSCommands._Begin("analyze." + task, config)
        _logsi.EnterMethod(SILevel.Debug)
        try:
            runner = getattr(SSCommands, "_Analyze" + "".join(p.capitalize() for p in task.split("_")))
            runner(config, outDir, record)
            record.Finish()
            record.WriteToFile(os.path.join(outDir, task + ".json"))
            return record

        except Exception as ex:
            _logsi.LogException(None, ex)
            raise

        finally:
            _logsi.LeaveMethod(SILevel.Debug)


    @staticmethod
    def _AnalyzeExpressibility(config:SSConfiguration, outDir:str, record:SSResultRecord) -> None:
        spec:SSAnsatzSpec = SSCommands._Spec(config, SSAnsatzFamily.ALA_SHARED.name)
        families:list = [SSCommands._Parse(SSAnsatzFamily, "expressibility.families", f, config.FileName)
                         for f in config.ReadList("expressibility.families", ["ALA_SITE_DEPENDENT", "ALA_SHARED", "ALA_GLOBAL"])]
        nSamples:int = config.ReadInteger("expressibility.n_samples", 20000)
        nBins:int = config.ReadInteger("expressibility.n_bins", 75)
        evolution:SSEvolutionConfig = SSCommands._Evolution(config)

        rows:list = []
        for family in families:
            result = SSExpressibility.Expressibility(spec.With(family=family), nSamples, nBins, record.Seed, evolution)
            entry:dict = result.ToDictionary()
            entry["family"] = family.name
            rows.append(entry)
            SSFileHelper.WriteCsv(os.path.join(outDir, "expressibility_{0}.csv".format(family.name)),
                                  ["bin_low", "bin_high", "count", "probability", "haar_probability"],
                                  result.HistogramRows(), record.Provenance())
        record.Payload["ansatz"] = spec.ToDictionary()
        record.Payload["results"] = rows


    @staticmethod
    def _AnalyzeEntanglementPower(config:SSConfiguration, outDir:str, record:SSResultRecord) -> None:
        points:list = config.ReadList("entanglement_power.points", [[0.0, 0.0], [math.pi / 2.0, 0.0], [math.pi / 4.0, math.pi / 2.0]])
        gates:list = config.ReadList("entanglement_power.gates", list(_REFERENCE_GATES.keys()))
        nSamples:int = config.ReadInteger("entanglement_power.n_samples", 100000)

        reports:list = []
        for i, point in enumerate(points):
            if not isinstance(point, list) or (len(point) != 2):
                raise SSConfigurationException("\"entanglement_power.points\" must hold [theta, phi] pairs, got {0!r}.".format(point), config.FileName)
            reports.append(SSEntanglementPower.Report(float(point[0]), float(point[1]), nSamples, seed=[record.Seed, i]))

        references:list = []
        for j, name in enumerate(gates):
            if (name not in _REFERENCE_GATES):
                raise SSConfigurationException("Unknown reference gate \"{0}\"; expected one of {1}.".format(name, ", ".join(_REFERENCE_GATES)), config.FileName)
            u, expected = _REFERENCE_GATES[name]
            mean, stderr = SSEntanglementPower.MonteCarlo(u, nSamples, seed=[record.Seed, len(points) + j])
            references.append({"gate": name, "expected": expected, "mc_mean": mean, "mc_stderr": stderr,
                               "deviation_sigma": abs(mean - expected) / stderr if (stderr > 0) else abs(mean - expected)})
            _logsi.LogMessage("Entanglement power of %s: %.6f +- %.6f (expected %.6f).", name, mean, stderr, expected)

        header:list = ["theta", "phi", "formula", "mc_mean", "mc_stderr", "discrepancy", "discrepancy_sigma"]
        SSFileHelper.WriteCsv(os.path.join(outDir, "entanglement_power.csv"), header,
                              [[r[k] for k in header] for r in reports], record.Provenance())
        record.Payload["fsim"] = reports
        record.Payload["reference_gates"] = references


    @staticmethod
    def _AnalyzeHusimi(config:SSConfiguration, outDir:str, record:SSResultRecord) -> None:
        nTheta:int = config.ReadInteger("husimi.n_theta", 91)
        nPhi:int = config.ReadInteger("husimi.n_phi", 180)
        stateFile:str = config.ReadString("husimi.state_file", None)
        params:list = config.ReadList("husimi.params", None)

        if (stateFile is not None):
            state:SSStateVector = SSStateVector.LoadFromFile(stateFile)
            record.Payload["source"] = "state_file"
        else:
            spec:SSAnsatzSpec = SSCommands._Spec(config)
            evolution:SSEvolutionConfig = SSCommands._Evolution(config)
            if (params is not None):
                state = SSAnsatz.BuildState(spec, params, evolution=evolution)
                record.Payload["source"] = "params"
            else:
                objective = SSObjective(spec, SSCommands._Kind(config), evolution=evolution,
                                        fullGenerators=config.ReadBoolean("objective.full_generators", False))
                result:SSMultiStartResult = SSOptimizer.MultiStart(objective, SSCommands._OptimizerConfig(config, record.Seed))
                params = objective.FullVector(result.Best.XOpt)
                state = objective.State(result.Best.XOpt)
                record.Payload["source"] = "optimized"
            record.Payload["ansatz"] = spec.ToDictionary()
            record.Payload["params"] = params
            SSFileHelper.EnsureDirectory(outDir)
            state.SaveToFile(os.path.join(outDir, "husimi_state.json"), record.Provenance())

        grid = SSHusimi.Husimi(state, nTheta, nPhi)
        record.Payload["xi2"] = SSCollectiveSpin.Squeezing(state, SSSqueezingKind.LINEAR).Xi2
        record.Payload["q_max"] = grid.MaxValue
        record.Payload["argmax"] = list(grid.ArgMax())
        record.Payload["n_theta"] = nTheta
        record.Payload["n_phi"] = nPhi
        SSFileHelper.WriteCsv(os.path.join(outDir, "husimi.csv"), ["theta", "phi", "q"], grid.Rows(), record.Provenance())


    @staticmethod
    def _AnalyzeNoiseSweep(config:SSConfiguration, outDir:str, record:SSResultRecord) -> None:
        for key in ("ansatz.n_qubits", "ansatz.depth"):
            if not config.Contains(key):
                raise SSConfigurationException("Noise sweeps need the \"{0}\" key.".format(key), config.FileName)
        nQubits:int = config.ReadInteger("ansatz.n_qubits", None)
        depth:int = config.ReadInteger("ansatz.depth", None)
        rList:list = config.ReadList("noise_sweep.r_list", [0.0, 0.001, 0.005, 0.01])
        families:list = [SSCommands._Parse(SSAnsatzFamily, "noise_sweep.families", f, config.FileName)
                         for f in config.ReadList("noise_sweep.families", ["ALA_SHARED", "ALA_SITE_DEPENDENT"])]

        sweep:dict = SSNoiseStudy.NoiseSweep(
            nQubits, depth, rList,
            realizations=config.ReadInteger("noise_sweep.realizations", 5),
            cfg=SSCommands._OptimizerConfig(config, record.Seed),
            families=families,
            kind=SSCommands._Kind(config),
            thetaOpt=config.ReadFloat("noise_sweep.theta_opt", None),
            phiOpt=config.ReadFloat("noise_sweep.phi_opt", None),
            boundary=SSCommands._Parse(SSBoundary, "ansatz.boundary", config.ReadString("ansatz.boundary", "PBC"), config.FileName))

        gates:dict = {str(k): v for k, v in sweep.pop("gates").items()}
        SSFileHelper.WriteJson(os.path.join(outDir, "noise_sweep_gates.json"),
                               {"config_hash": record.ConfigHash, "seed": record.Seed, "r": sweep["r"], "gates": gates})
        SSFileHelper.WriteCsv(os.path.join(outDir, "noise_sweep.csv"), ["r", "realization", "family", "xi2_opt"],
                              [(row["r"], row["realization"], row["family"], row["xi2_opt"]) for row in sweep["rows"]],
                              record.Provenance())
        record.Payload.update(sweep)
