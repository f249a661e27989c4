#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
NLCalc:
    setup.py sets up the command-line interface for the
    NLCalc package.

    python setup.py install

    nl [options]
"""

import os
from setuptools import setup, find_packages


def read(fname):
    """
    Reads the README and prints it into the long_description in the setup
    routine.

    Parameters
    ----------
    fname : README file name

    Returns
    -------
    Rendered README

    """
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


classifiers = [
    "Development Status :: 4 - Beta",
    "Intended Audience :: Science/Research",
    "Programming Language :: Python",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Programming Language :: Python :: 3.11",
    "Topic :: Scientific/Engineering :: Mathematics",
]

requires = [
    'pytest>=4.6.0',
    'pytest-mock',
    'pytest_socket>=0.4.0',
    'pytest-cov',
    'hypothesis',
    'sympy'
]


def run_setup():
    """
    This functions holds the setup command. Rather than running setup directly,
    it is wrapped in a 'try-except' that will print out errors if they occur.
    """
    setup(
        name='NLCalc',
        version='1.0.0',
        description='NLCalc: Newell-Littlewood Numbers and the '
                    'Koike-Terada Basis',
        long_description=read('README.md'),
        long_description_content_type='text/markdown',
        classifiers=classifiers,
        packages=find_packages(),
        keywords=['combinatorics', 'symmetric functions', 'tableaux',
                  'littlewood-richardson', 'newell-littlewood'],
        install_requires=requires,
        python_requires='>=3.8',
        entry_points={'console_scripts': [
            'nl = nlcalc.main.main:main']}
    )


try:
    run_setup()
except SystemExit as e:
    print(e)
