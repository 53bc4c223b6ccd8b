# add project drectory to python search paths for relative references
import sys
sys.path.append(".")
sys.path.append("..")

import csv
import os
import unittest

import numpy as np

# our package imports.
from spinsqueezepython.ssconfigurationexception import SSConfigurationException
from spinsqueezepython.ssconst import SCHEMA_VERSION, VERSION
from spinsqueezepython.ssfilehelper import SSFileHelper
from spinsqueezepython.ssresultrecord import SSResultRecord

# import classes used for test scenarios.
from testClassDefinitions import SSTempFolderTestCase


class Test_FileHelper(SSTempFolderTestCase):
    """
    Test result files.
    """

    def test_CsvWithProvenance(self):
        fileName = self.TempPath("nested", "trace.csv")
        SSFileHelper.WriteCsv(fileName, ["iteration", "objective"], [(0, 0.5), (1, 0.25)], {"config_hash": "abc", "seed": 7})
        self.assertEqual(SSFileHelper.ReadCsvProvenance(fileName), {"config_hash": "abc", "seed": "7"})
        with open(fileName, "r", encoding="utf-8") as reader:
            rows = list(csv.reader(line for line in reader if not line.startswith("#")))
        self.assertEqual(rows[0], ["iteration", "objective"])
        self.assertEqual([float(v) for v in rows[2]], [1.0, 0.25])


    def test_JsonConvertsNumpyValues(self):
        fileName = self.TempPath("record.json")
        SSFileHelper.WriteJson(fileName, {"x": np.array([1.0, 2.0]), "n": np.int64(3)})
        self.assertEqual(SSFileHelper.ReadJson(fileName), {"n": 3, "x": [1.0, 2.0]})


    def test_ReadJsonErrors(self):
        with self.assertRaises(SSConfigurationException):
            SSFileHelper.ReadJson(self.TempPath("missing.json"))
        fileName = self.TempPath("broken.json")
        with open(fileName, "w", encoding="utf-8") as writer:
            writer.write("{")
        with self.assertRaises(SSConfigurationException):
            SSFileHelper.ReadJson(fileName)


    def test_EnsureDirectory(self):
        folder = self.TempPath("a", "b")
        self.assertEqual(SSFileHelper.EnsureDirectory(folder), folder)
        self.assertTrue(os.path.isdir(folder))


class Test_ResultRecord(SSTempFolderTestCase):
    """
    Test the json result record.
    """

    def test_RecordFields(self):
        record = SSResultRecord("twist", {"seed": 5}, "f" * 64, 5)
        record.Payload["xi2"] = np.float64(0.5)
        self.assertIsNone(record.WallTime)
        record.Finish()
        self.assertGreaterEqual(record.WallTime, 0.0)
        self.assertEqual(record.Provenance(), {"config_hash": "f" * 64, "seed": 5})

        fileName = record.WriteToFile(self.TempPath("twist.json"))
        values = SSFileHelper.ReadJson(fileName)
        self.assertEqual(sorted(values.keys()), sorted(["schema_version", "software_version", "command", "config",
                                                        "config_hash", "seed", "wall_time", "payload"]))
        self.assertEqual(values["schema_version"], SCHEMA_VERSION)
        self.assertEqual(values["software_version"], VERSION)
        self.assertEqual(values["payload"], {"xi2": 0.5})


if __name__ == '__main__':
    unittest.main()
