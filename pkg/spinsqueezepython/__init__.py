# include the README.md file for pdoc documentation generation.
"""
.. include:: ../README.md

_________________

<details>
  <summary>View Change Log</summary>
.. include:: ../CHANGELOG.md
</details>
"""

# our package imports.
from spinsqueezepython.spinsqueezeexception import SpinSqueezeException
from spinsqueezepython.ssansatz import SSAnsatz
from spinsqueezepython.ssansatzfamily import SSAnsatzFamily
from spinsqueezepython.ssansatzspec import SSAnsatzSpec
from spinsqueezepython.ssargumentnullexception import SSArgumentNullException
from spinsqueezepython.ssargumentoutofrangeexception import SSArgumentOutOfRangeException
from spinsqueezepython.ssaxis import SSAxis
from spinsqueezepython.ssboundary import SSBoundary
from spinsqueezepython.sscoherenterror import SSCoherentError
from spinsqueezepython.sscoherentfsimparams import SSCoherentFsimParams
from spinsqueezepython.sscollectivespin import SSCollectiveSpin
from spinsqueezepython.sscommands import SSCommands
from spinsqueezepython.ssconfiguration import SSConfiguration
from spinsqueezepython.ssconfigurationexception import SSConfigurationException
from spinsqueezepython.ssdickevector import SSDickeVector
from spinsqueezepython.ssdynamics import SSDynamics
from spinsqueezepython.ssentanglementpower import SSEntanglementPower
from spinsqueezepython.ssevolutionconfig import SSEvolutionConfig
from spinsqueezepython.ssexpressibility import SSExpressibility
from spinsqueezepython.ssexpressibilityresult import SSExpressibilityResult
from spinsqueezepython.ssfilehelper import SSFileHelper
from spinsqueezepython.ssgates import SSGates
from spinsqueezepython.sshusimi import SSHusimi
from spinsqueezepython.sshusimigrid import SSHusimiGrid
from spinsqueezepython.ssmomentalgebra import SSMomentAlgebra
from spinsqueezepython.ssmultistartresult import SSMultiStartResult
from spinsqueezepython.ssnoisestudy import SSNoiseStudy
from spinsqueezepython.ssnumericalexception import SSNumericalException
from spinsqueezepython.ssobjective import SSObjective
from spinsqueezepython.ssoptimizationtrace import SSOptimizationTrace
from spinsqueezepython.ssoptimizer import SSOptimizer
from spinsqueezepython.ssoptimizerconfig import SSOptimizerConfig
from spinsqueezepython.ssparameterdescriptor import SSParameterDescriptor
from spinsqueezepython.ssresultrecord import SSResultRecord
from spinsqueezepython.ssshotestimator import SSShotEstimator
from spinsqueezepython.sssqueezingkind import SSSqueezingKind
from spinsqueezepython.sssqueezingreport import SSSqueezingReport
from spinsqueezepython.ssstatevector import SSStateVector
from spinsqueezepython.ssterminationreason import SSTerminationReason
from spinsqueezepython.sstwisting import SSTwisting
from spinsqueezepython.sstwistmodel import SSTwistModel
from spinsqueezepython.sstwistresult import SSTwistResult
from spinsqueezepython.ssunsupportedconfigurationexception import SSUnsupportedConfigurationException
from spinsqueezepython.sswitnessreport import SSWitnessReport

# all classes to import when "import *" is specified.
__all__ = [
    'SSAnsatz',
    'SSAnsatzFamily',
    'SSAnsatzSpec',
    'SSArgumentNullException',
    'SSArgumentOutOfRangeException',
    'SSAxis',
    'SSBoundary',
    'SSCoherentError',
    'SSCoherentFsimParams',
    'SSCollectiveSpin',
    'SSCommands',
    'SSConfiguration',
    'SSConfigurationException',
    'SSDickeVector',
    'SSDynamics',
    'SSEntanglementPower',
    'SSEvolutionConfig',
    'SSExpressibility',
    'SSExpressibilityResult',
    'SSFileHelper',
    'SSGates',
    'SSHusimi',
    'SSHusimiGrid',
    'SSMomentAlgebra',
    'SSMultiStartResult',
    'SSNoiseStudy',
    'SSNumericalException',
    'SSObjective',
    'SSOptimizationTrace',
    'SSOptimizer',
    'SSOptimizerConfig',
    'SSParameterDescriptor',
    'SSResultRecord',
    'SSShotEstimator',
    'SSSqueezingKind',
    'SSSqueezingReport',
    'SSStateVector',
    'SSTerminationReason',
    'SSTwistModel',
    'SSTwistResult',
    'SSTwisting',
    'SSUnsupportedConfigurationException',
    'SSWitnessReport',
    'SpinSqueezeException',
]
