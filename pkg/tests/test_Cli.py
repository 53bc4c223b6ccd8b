# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import contextlib
import io
import os
import unittest

# our package imports.
from spinsqueezepython.sscli import EXIT_CONFIGURATION, EXIT_NUMERICAL, EXIT_SUCCESS, main
from spinsqueezepython.ssfilehelper import SSFileHelper
from spinsqueezepython.ssstatevector import SSStateVector

# import classes used for test scenarios.
from testClassDefinitions import SSTempFolderTestCase


class Test_Cli(SSTempFolderTestCase):
    """
    Test the command line entry point and its exit codes.
    """

    def _Run(self, *argv) -> int:
        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
            return main(list(argv))


    def test_TwistWritesResults(self):
        out = self.TempPath("twist")
        code = self._Run("twist", "--out", out, "--seed", "3",
                         "--set", "twist.n_qubits=[4, 6]", "--set", "twist.grid_points=200")
        self.assertEqual(code, EXIT_SUCCESS)
        for name in ("twist.json", "twist_table.csv", "twist_OAT_N4.csv", "twist_TAT_N6.csv"):
            self.assertTrue(os.path.isfile(os.path.join(out, name)), name)

        record = SSFileHelper.ReadJson(os.path.join(out, "twist.json"))
        self.assertEqual(record["command"], "twist")
        self.assertEqual(record["seed"], 3)
        self.assertEqual([row["n_qubits"] for row in record["payload"]["table"]], [4, 6])
        provenance = SSFileHelper.ReadCsvProvenance(os.path.join(out, "twist_table.csv"))
        self.assertEqual(provenance["config_hash"], record["config_hash"])
        self.assertEqual(provenance["seed"], "3")


    def test_OutputFolderDoesNotChangeHash(self):
        first, second = self.TempPath("a"), self.TempPath("b")
        args = ["--set", "twist.n_qubits=4", "--set", "twist.grid_points=100", "--set", "twist.models=[\"OAT\"]"]
        self.assertEqual(self._Run("twist", "--out", first, *args), EXIT_SUCCESS)
        self.assertEqual(self._Run("twist", "--out", second, "--threads", "2", *args), EXIT_SUCCESS)
        self.assertEqual(SSFileHelper.ReadJson(os.path.join(first, "twist.json"))["config_hash"],
                         SSFileHelper.ReadJson(os.path.join(second, "twist.json"))["config_hash"])


    def test_UnknownKeyIsConfigurationError(self):
        code = self._Run("twist", "--out", self.TempPath("x"), "--set", "twist.gridpoints=200")
        self.assertEqual(code, EXIT_CONFIGURATION)


    def test_MissingConfigFile(self):
        code = self._Run("optimize", "--out", self.TempPath("x"), "--config", self.TempPath("missing.json"))
        self.assertEqual(code, EXIT_CONFIGURATION)


    def test_BadFamilyIsConfigurationError(self):
        code = self._Run("optimize", "--out", self.TempPath("x"), "--set", "ansatz.family=BAD",
                         "--set", "ansatz.n_qubits=4", "--set", "ansatz.depth=1")
        self.assertEqual(code, EXIT_CONFIGURATION)


    def test_EvolutionFailureIsNumericalError(self):
        """
        A Krylov budget that cannot reach its tolerance ends the run with the numerical exit code.
        """
        code = self._Run("optimize", "--out", self.TempPath("x"),
                         "--set", "ansatz.family=ANALOG_HEA", "--set", "ansatz.n_qubits=6", "--set", "ansatz.depth=1",
                         "--set", "optimizer.restarts=1",
                         "--set", "evolution.krylov_dim=4", "--set", "evolution.tolerance=1e-14",
                         "--set", "evolution.max_substeps=1")
        self.assertEqual(code, EXIT_NUMERICAL)


    def test_SmallOptimization(self):
        out = self.TempPath("optimize")
        code = self._Run("optimize", "--out", out, "--seed", "1",
                         "--set", "ansatz.family=ALA_GLOBAL", "--set", "ansatz.n_qubits=4", "--set", "ansatz.depth=1",
                         "--set", "optimizer.restarts=2", "--set", "optimizer.max_iterations=30")
        self.assertEqual(code, EXIT_SUCCESS)
        record = SSFileHelper.ReadJson(os.path.join(out, "optimize.json"))
        winner = record["payload"]["winner"]
        self.assertEqual(record["payload"]["mode"], "multi_start")
        self.assertEqual(len(winner["x_opt"]), 10)
        self.assertEqual(len(winner["parameter_layout"]), 10)
        self.assertLessEqual(winner["xi2_opt"], max(winner["objective_values"]))
        self.assertTrue(os.path.isfile(os.path.join(out, "optimize_trace.csv")))


    def test_EntanglementPowerTask(self):
        out = self.TempPath("power")
        code = self._Run("analyze", "entanglement_power", "--out", out,
                         "--set", "entanglement_power.points=[[0.0, 0.0]]",
                         "--set", "entanglement_power.gates=[\"identity\"]",
                         "--set", "entanglement_power.n_samples=1000")
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertTrue(os.path.isfile(os.path.join(out, "entanglement_power.json")))


    def test_HusimiFilesCarryProvenance(self):
        """
        Every file of a husimi run holds the configuration hash and the seed.
        """
        out = self.TempPath("husimi")
        code = self._Run("analyze", "husimi", "--out", out, "--seed", "5",
                         "--set", "ansatz.family=ALA_GLOBAL", "--set", "ansatz.n_qubits=4", "--set", "ansatz.depth=1",
                         "--set", "husimi.params=[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]",
                         "--set", "husimi.n_theta=10", "--set", "husimi.n_phi=12")
        self.assertEqual(code, EXIT_SUCCESS)
        configHash = SSFileHelper.ReadJson(os.path.join(out, "husimi.json"))["config_hash"]
        names = sorted(os.listdir(out))
        self.assertEqual(names, ["husimi.csv", "husimi.json", "husimi_state.json"])
        for name in names:
            fileName = os.path.join(out, name)
            if name.endswith(".csv"):
                provenance = SSFileHelper.ReadCsvProvenance(fileName)
                self.assertEqual(provenance, {"config_hash": configHash, "seed": "5"}, name)
            else:
                record = SSFileHelper.ReadJson(fileName)
                self.assertEqual(record["config_hash"], configHash, name)
                self.assertEqual(record["seed"], 5, name)
        state = SSStateVector.LoadFromFile(os.path.join(out, "husimi_state.json"))
        self.assertEqual(state.NumQubits, 4)


    def test_NoiseSweepBoundary(self):
        args = ["--set", "ansatz.n_qubits=4", "--set", "ansatz.depth=1", "--set", "ansatz.boundary=OBC",
                "--set", "noise_sweep.r_list=[0.0]", "--set", "noise_sweep.realizations=1",
                "--set", "noise_sweep.families=[\"ALA_SHARED\"]",
                "--set", "noise_sweep.theta_opt=0.5", "--set", "noise_sweep.phi_opt=0.3",
                "--set", "optimizer.restarts=1", "--set", "optimizer.max_iterations=10"]
        out = self.TempPath("sweep")
        self.assertEqual(self._Run("analyze", "noise_sweep", "--out", out, *args), EXIT_SUCCESS)
        self.assertEqual(SSFileHelper.ReadJson(os.path.join(out, "noise_sweep.json"))["payload"]["boundary"], "OBC")

        # families come from noise_sweep.families only
        code = self._Run("analyze", "noise_sweep", "--out", self.TempPath("y"), "--set", "ansatz.family=ALA_GLOBAL", *args)
        self.assertEqual(code, EXIT_CONFIGURATION)


if __name__ == '__main__':
    unittest.main()
