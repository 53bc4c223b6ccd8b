# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import glob
import os
import unittest

# our package imports.
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.sscommands import SSCommands
from spinsqueezepython.ssconfiguration import SSConfiguration
from spinsqueezepython.ssconfigurationexception import SSConfigurationException

# import classes used for test scenarios.
from testClassDefinitions import SSTempFolderTestCase

CONFIGS_FOLDER:str = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "configs")


class Test_Configuration(SSTempFolderTestCase):
    """
    Test SSConfiguration loading, overrides and validation.
    """

    def test_ParseReadsJsonLiterals(self):
        config = SSConfiguration()
        config.Parse("optimizer.restarts=7")
        config.Parse("ansatz.family=ALA_SHARED")
        config.Parse("twist.n_qubits=[10, 20]")
        config.Parse("Objective.Full_Generators=true")
        self.assertEqual(config.Count, 4)
        self.assertEqual(config.ReadInteger("optimizer.restarts", 0), 7)
        self.assertEqual(config.ReadString("ansatz.family", None), "ALA_SHARED")
        self.assertEqual(config.ReadList("twist.n_qubits", None), [10, 20])
        self.assertTrue(config.ReadBoolean("objective.full_generators", False))
        with self.assertRaises(SSConfigurationException):
            config.Parse("no-equals-sign")
        config.Clear()
        self.assertEqual(config.Count, 0)


    def test_NestedFileIsFlattened(self):
        fileName = self.TempPath("run.json")
        with open(fileName, "w", encoding="utf-8") as writer:
            writer.write('{"seed": 3, "ansatz": {"family": "ALA_GLOBAL", "n_qubits": 6, "depth": 2}}')
        config = SSConfiguration()
        config.LoadFromFile(fileName)
        self.assertEqual(config.FileName, fileName)
        self.assertEqual(config.Keys, sorted(["seed", "ansatz.family", "ansatz.n_qubits", "ansatz.depth"]))
        self.assertEqual(config.ReadSection("ansatz"), {"family": "ALA_GLOBAL", "n_qubits": 6, "depth": 2})
        self.assertEqual(config.ReadKey(0), "ansatz.depth")
        with self.assertRaises(SSArgumentOutOfRangeException):
            config.ReadKey(4)


    def test_OverrideReplacesNestedKeys(self):
        config = SSConfiguration()
        config.LoadFromDictionary({"optimizer": {"restarts": 5, "max_iterations": 10}})
        config.Parse('optimizer={"restarts": 2}')
        self.assertEqual(config.ReadSection("optimizer"), {"restarts": 2})


    def test_MissingKeysReturnDefaults(self):
        config = SSConfiguration()
        self.assertEqual(config.ReadFloat("twist.tau_max", 1.5), 1.5)
        self.assertEqual(config.ReadInteger("seed", 0), 0)
        self.assertEqual(config.ReadList("optimize.chain", None), None)
        self.assertFalse(config.Contains("seed"))


    def test_TypeErrors(self):
        config = SSConfiguration()
        config.Parse("seed=1.5")
        config.Parse("optimizer.fd_epsilon=small")
        with self.assertRaises(SSConfigurationException):
            config.ReadInteger("seed", 0)
        with self.assertRaises(SSConfigurationException):
            config.ReadFloat("optimizer.fd_epsilon", 1e-8)


    def test_BadFiles(self):
        with self.assertRaises(SSConfigurationException):
            SSConfiguration().LoadFromFile(self.TempPath("missing.json"))
        fileName = self.TempPath("bad.json")
        with open(fileName, "w", encoding="utf-8") as writer:
            writer.write("{not json")
        with self.assertRaises(SSConfigurationException):
            SSConfiguration().LoadFromFile(fileName)
        with open(fileName, "w", encoding="utf-8") as writer:
            writer.write("[1, 2]")
        with self.assertRaises(SSConfigurationException):
            SSConfiguration().LoadFromFile(fileName)


    def test_Validate(self):
        config = SSConfiguration()
        config.Parse("seed=1")
        config.Parse("twist.grid_points=400")
        config.Validate(SSCommands.Schema("twist"))
        config.Parse("twist.gridpoints=400")
        with self.assertRaises(SSConfigurationException):
            config.Validate(SSCommands.Schema("twist"))

        typed = SSConfiguration()
        typed.Parse("twist.grid_points=\"many\"")
        with self.assertRaises(SSConfigurationException):
            typed.Validate(SSCommands.Schema("twist"))
        with self.assertRaises(SSConfigurationException):
            SSCommands.Schema("simulate")


    def test_ConfigHash(self):
        first = SSConfiguration()
        first.LoadFromDictionary({"seed": 1, "ansatz": {"n_qubits": 8, "depth": 2}})
        second = SSConfiguration()
        second.Parse("ansatz.depth=2")
        second.Parse("ansatz.n_qubits=8")
        second.Parse("seed=1")
        self.assertEqual(first.ConfigHash(), second.ConfigHash())
        self.assertEqual(len(first.ConfigHash()), 64)
        second.Parse("seed=2")
        self.assertNotEqual(first.ConfigHash(), second.ConfigHash())


    def test_CommandHashIgnoresRuntimeKeys(self):
        first = SSConfiguration()
        first.Parse("seed=4")
        second = SSConfiguration()
        second.Parse("seed=4")
        second.Parse("threads=8")
        second.Parse("out=\"elsewhere\"")
        self.assertEqual(SSCommands.ConfigHash(first), SSCommands.ConfigHash(second))


    def test_ShippedConfigurationsValidate(self):
        """
        Every configuration in the configs folder passes its command schema.
        """
        files = sorted(glob.glob(os.path.join(CONFIGS_FOLDER, "*.json")))
        self.assertGreater(len(files), 0)
        for fileName in files:
            name = os.path.splitext(os.path.basename(fileName))[0]
            if name.startswith("optimize_"):
                command = "optimize"
            elif name.startswith("twist"):
                command = "twist"
            else:
                task = name[len("analyze_"):]
                command = "analyze." + next(t for t in ("expressibility", "entanglement_power", "husimi", "noise_sweep") if task.startswith(t))
            config = SSConfiguration()
            config.LoadFromFile(fileName)
            config.Validate(SSCommands.Schema(command))


if __name__ == '__main__':
    unittest.main()
