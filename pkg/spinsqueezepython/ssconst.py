# constants are placed in this file if they are used across multiple files.
# the only exception to this is for the VERSION constant, which is placed here for convenience.

VERSION:str = "1.0.0"
""" 
Current version of the Spin Squeeze Python3 Library. 
"""

PACKAGENAME:str = "spinsqueezepython"
"""
Name of our package (used by PDoc Documentation build).
"""

SCHEMA_VERSION:int = 1
"""
Version of the json result record layout written by the command-line interface.
"""


# properties used in PDOC documentation build.

PDOC_BRAND_ICON_URL:str = "__init__.html"
"""
PDoc Documentation brand icon link url that is displayed in the help document TOC.
"""

PDOC_BRAND_ICON_URL_SRC:str = "spinsqueeze.ico"
"""
PDoc Documentation brand icon link url that is displayed in the help document TOC.
"""

PDOC_BRAND_ICON_URL_TITLE:str = "Spin Squeeze Python"
"""
PDoc Documentation brand icon link title that is displayed in the help document TOC.
"""


# State vector related constants:

MAX_QUBITS:int = 24
"""
Largest number of qubits a state vector can hold (2^24 complex amplitudes).
"""

NORM_TOLERANCE:float = 1e-8
"""
Largest deviation of a state norm from one that is accepted as "normalized".

Value: 
    1e-8
"""


# Collective spin related constants:

PINV_RELATIVE_THRESHOLD:float = 1e-12
"""
Eigenvalues of the covariance matrix below this value times max(largest eigenvalue, 1)
are treated as zero when forming the pseudo-inverse.

Value: 
    1e-12
"""

LAMBDA_ZERO_THRESHOLD:float = 1e-12
"""
Largest eigenvalue of the squeezing matrix below this value is treated as zero,
which reports an infinite squeezing parameter.

Value: 
    1e-12
"""

MIN_SHOTS_PER_AXIS:int = 100
"""
Smallest number of shots per measurement axis accepted by the shot estimators.
"""


# Dynamics related constants:

KRYLOV_DIM_DEFAULT:int = 30
""" 
Default Krylov subspace dimension of the Lanczos propagator. 
"""

KRYLOV_TOLERANCE_DEFAULT:float = 1e-10
""" 
Default a-posteriori error tolerance of the Lanczos propagator. 
"""

KRYLOV_MAX_SUBSTEPS_DEFAULT:int = 64
""" 
Default maximum number of time substeps taken by the Lanczos propagator. 
"""

KRYLOV_BASIS_WARN_BYTES:int = 2 ** 30
""" 
Krylov basis size above which the Lanczos propagator logs a memory warning. 
"""


# Twisting related constants:

TWIST_TAU_MAX_DEFAULT:float = 1.0
""" 
Default end of the twisting time grid. 
"""

TWIST_GRID_POINTS_DEFAULT:int = 2000
""" 
Default number of twisting time grid points. 
"""

TWIST_TAU_RELATIVE_TOLERANCE:float = 1e-6
""" 
Relative precision of the refined optimal twisting time. 
"""


# Optimizer related constants:

FD_EPSILON_DEFAULT:float = 1e-8
""" 
Default forward finite-difference step. 
"""

MAX_ITERATIONS_DEFAULT:int = 500
""" 
Default BFGS iteration cap. 
"""

GRAD_TOLERANCE_DEFAULT:float = 1e-6
""" 
Default BFGS gradient tolerance (infinity norm). 
"""

RESTARTS_DEFAULT:int = 50
""" 
Default number of random restarts. 
"""

WOLFE_C1_DEFAULT:float = 1e-4
""" 
Default sufficient-decrease constant of the strong Wolfe line search. 
"""

WOLFE_C2_DEFAULT:float = 0.9
""" 
Default curvature constant of the strong Wolfe line search. 
"""

INIT_RANGE_DEFAULT:float = 3.141592653589793
""" 
Default half width of the uniform random initial parameters. 
"""


# Analysis related constants:

EXPRESSIBILITY_BINS_DEFAULT:int = 75
""" 
Default number of fidelity histogram bins used by the expressibility estimator. 
"""

ERROR_GATE_MAX_RETRIES:int = 100
""" 
Maximum number of fresh directions drawn when a coherent-error gate cannot be scaled to the target error. 
"""

ERROR_GATE_MAX_SCALE:float = 3.141592653589793
""" 
Largest scale factor searched when scaling a coherent-error direction to the target error. 
"""

FSIM_OPTIMIZED_ANGLES:dict = {
    1: {10: (0.7380, 0.5256), 12: (0.7380, 0.5256), 14: (0.7380, 0.5256), 16: (0.7380, 0.5256), 18: (0.7380, 0.5256), 20: (0.7380, 0.5256)},
    2: {10: (0.7468, 0.2542), 12: (0.7474, 0.2543), 14: (0.7470, 0.2544), 16: (0.7470, 0.2544), 18: (0.7470, 0.2544), 20: (0.7470, 0.2544)},
    3: {10: (1.3200, 3.1449), 12: (1.3242, 3.1494), 14: (1.3287, 3.1408), 16: (1.3287, 3.1408), 18: (1.3287, 3.1408), 20: (1.3288, 3.1439)},
    4: {10: (1.8320, 3.2124), 12: (1.7906, 3.1775), 14: (1.7746, 3.1589), 16: (1.7693, 3.1614), 18: (1.7683, 3.1614), 20: (1.7683, 3.1614)},
    5: {10: (1.3175, 3.1379), 12: (1.3482, 3.0976), 14: (1.3778, 3.0768), 16: (1.3928, 3.1018), 18: (1.3955, 3.0865), 20: (1.3955, 3.0865)},
}
"""
Optimized FSIM angles (theta, phi) of the shared alternating layered ansatz with
periodic boundaries, keyed by depth and then by number of qubits.
"""
