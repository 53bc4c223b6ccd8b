"""
Module: sscli.py

Command line entry point:

    spinsqueeze optimize --config shared_n10_p2.json --seed 7 --out results/
    spinsqueeze twist --set twist.n_qubits=[10,20]
    spinsqueeze analyze husimi --config husimi_n12_p3.json --threads 4

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

# external package imports.
import argparse
import logging
import os
import sys

from smartinspectpython.siauto import SIAuto, SILevel, SISession

# our package imports.
from .sscommands import ANALYZE_TASKS, SSCommands
from .ssconfiguration import SSConfiguration
from .ssconst import VERSION
from .ssnumericalexception import SSNumericalException
from .spinsqueezeexception import SpinSqueezeException

# get smartinspect logger reference; create a new session for this module name.
_logsi:SISession = SIAuto.Si.GetSession(__name__)
if (_logsi == None):
    _logsi = SIAuto.Si.AddSession(__name__, True)
_logsi.SystemLogger = logging.getLogger(__name__)


EXIT_SUCCESS:int = 0
EXIT_CONFIGURATION:int = 2
EXIT_NUMERICAL:int = 3

LOG_FILENAME:str = "spinsqueeze.log"


def BuildParser() -> argparse.ArgumentParser:
    """
    Returns the argument parser with the optimize, twist and analyze subcommands.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", default=None, help="json experiment configuration")
    common.add_argument("--seed", type=int, default=None, help="seed overriding the configuration (default 0)")
    common.add_argument("--threads", type=int, default=None, help="worker threads for restarts (1 = serial)")
    common.add_argument("--out", metavar="DIR", default=None, help="output folder (default \"results\")")
    common.add_argument("--set", metavar="KEY=VALUE", action="append", default=[], dest="overrides",
                        help="override a dotted configuration key; may be repeated "
                        "(objective.full_generators=true builds the nonlinear squeezing matrix over all "
                        "operators instead of the default Jx, Jy, Jz generators)")
    common.add_argument("--logconfig", metavar="PATH", default=None, help="SmartInspect configuration file")
    common.add_argument("--verbose", action="store_true", help="trace to a text log in the output folder")

    parser = argparse.ArgumentParser(prog="spinsqueeze", description="Variational spin squeezing experiments")
    parser.add_argument("--version", action="version", version="%(prog)s " + VERSION)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    commands.add_parser("optimize", parents=[common], help="optimize a circuit family")
    commands.add_parser("twist", parents=[common], help="one-axis and two-axis twisting minima")
    analyze = commands.add_parser("analyze", parents=[common], help="expressibility, entanglement power, husimi, noise sweep")
    analyze.add_argument("task", choices=ANALYZE_TASKS)
    return parser


def LoadConfiguration(args:argparse.Namespace) -> SSConfiguration:
    """
    Loads the configuration file and applies --set, --seed, --threads and --out in that order.
    """
    config = SSConfiguration()
    if (args.config is not None):
        config.LoadFromFile(args.config)
    for pair in args.overrides:
        config.Parse(pair)
    if (args.seed is not None):
        config.Parse("seed={0}".format(int(args.seed)))
    if (args.threads is not None):
        config.Parse("threads={0}".format(int(args.threads)))
    if (args.out is not None):
        config.Parse("out=\"{0}\"".format(args.out.replace("\\", "/")))
    return config


def _StartLogging(args:argparse.Namespace, outDir:str) -> None:
    if (args.logconfig is not None):
        SIAuto.Si.LoadConfiguration(args.logconfig)
    if (args.verbose):
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
        fileName:str = os.path.join(outDir, LOG_FILENAME).replace("\\", "/")
        SIAuto.Si.Connections = "text(filename=\"{0}\", append=true)".format(fileName)
        SIAuto.Si.Level = SILevel.Verbose
        SIAuto.Si.DefaultLevel = SILevel.Verbose
        SIAuto.Si.Enabled = True


def main(argv:list=None) -> int:
    """
    Runs a command and returns its exit code.

    Args:
        argv (list):
            Arguments without the program name; defaults to sys.argv[1:].
    """
    args = BuildParser().parse_args(argv)
    try:
        config:SSConfiguration = LoadConfiguration(args)
        outDir:str = config.ReadString("out", "results")
        if (args.verbose) or (args.logconfig is not None):
            os.makedirs(outDir, exist_ok=True)
        _StartLogging(args, outDir)

        if (args.command == "optimize"):
            record = SSCommands.Optimize(config, outDir)
        elif (args.command == "twist"):
            record = SSCommands.Twist(config, outDir)
        else:
            record = SSCommands.Analyze(args.task, config, outDir)

        print("{0}: done in {1:.1f} s, config_hash={2}, results in {3}".format(
            record.Command, record.WallTime, record.ConfigHash, os.path.abspath(outDir)))
        return EXIT_SUCCESS

    except SSNumericalException as ex:
        print("spinsqueeze: numerical failure: {0}".format(ex), file=sys.stderr)
        return EXIT_NUMERICAL

    except SpinSqueezeException as ex:
        print("spinsqueeze: configuration error: {0}".format(ex), file=sys.stderr)
        return EXIT_CONFIGURATION

    except OSError as ex:
        print("spinsqueeze: {0}".format(ex), file=sys.stderr)
        return EXIT_CONFIGURATION

    finally:
        if (SIAuto.Si.Enabled):
            SIAuto.Si.Enabled = False


if __name__ == "__main__":
    sys.exit(main())
