import os
from setuptools import setup, find_packages

# our package constants.
from spinsqueezepython.ssconst import (
    VERSION
)

# setup constants.
NAME = 'spinsqueezePython'
DESCRIPTION = 'Variational Spin Squeezing Python3 Library'
#VERSION = '0.0.1'   # pulled from package constants above.

# if installing using less than Python v3.8, then stop the install!
import sys
if sys.version_info < (3,8):
    sys.exit('Sorry, Python < 3.8 is not supported.')

# function to read the contents of the README.md file, and return it to the caller.
def readme(pathName:str):
    with open(pathName) as f:
        return f.read()

# function to build a list of files in a directory.
def getDirFilesList(pathName:str) -> list:
    print(str.format("getting list of files in path \"{0}\" ...", pathName))
    if not os.path.isdir(pathName):
        return []
    dir_list = os.listdir(pathName)
    files:list = []
    for file in dir_list:                       # process all matches.
        if os.path.isfile(pathName + file):     # only include files (not directories)
            files.append(str(pathName + file))
    return files

# package setup.
setup(
    # basic package information.
    name=NAME,
    version=VERSION,
    description=DESCRIPTION,
    # use the README.md markdown file for the description.
    long_description_content_type='text/markdown',
    long_description=readme('README.md'),
    # find and include all packages in the project (anything with an '__init__.py' file).
    packages=find_packages(exclude=['tests', 'tests.*']),
    # place documentation folder named "docs" in the package folder.
    data_files=[
        ('../../spinsqueezepython/docs', getDirFilesList('docspdoc/build/')),
        ('../../spinsqueezepython/docs/spinsqueezepython', getDirFilesList('docspdoc/build/spinsqueezepython/')),
    ],
    # set minimum python version requirement.
    python_requires='>=3.8',
    # set minimum dependencies requirements.
    install_requires=[
        'numpy >= 1.22',
        'scipy >= 1.8',
        'smartinspectPython >= 3.0.33',
    ],
    # command-line entry point.
    entry_points={
        'console_scripts': [
            'spinsqueeze=spinsqueezepython.sscli:main',
        ],
    },
    # set keywords to associate this package with on Pypi.org.
    keywords=['python', 'quantum', 'spin squeezing', 'variational', 'metrology', 'simulation'],
    # set classifiers to associate this package with on Pypi.org.
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Physics',
        'Natural Language :: English',
    ],
)
