"""BPS Rulings.

BPS Rulings computes BPS invariants of planar curve singularities as the
coefficients of normalized ruling polynomials of Legendrian rainbow closures,
checks them against closed forms for torus knots and ADE singularities, and
tests their coefficient sequences for log-concavity.

See more details in the [`README.md`](README.md).
"""

import os
import sys

from setuptools import find_packages
from setuptools import setup

# To enable importing version.py directly, we add its path to sys.path.
version_path = os.path.join(os.path.dirname(__file__), 'bpsrulings')
sys.path.append(version_path)
from version import __version__  # pylint: disable=g-import-not-at-top

setup(
    name='bpsrulings',
    version=__version__,
    description='BPS invariants from normal rulings',
    author='BPS Rulings Authors',
    license='Apache 2.0',
    packages=find_packages(),
    python_requires='>=3.6',
    install_requires=[
        'absl-py>=0.5.0',
        'networkx>=2.0',
        'numpy>=1.7',
        'scipy>=1.0.0',
    ],
    extras_require={
        'tests': [
            'pylint>=1.9.0',
            'pytest>=4.0.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'bpsrulings = bpsrulings.cli:run',
        ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='legendrian knots normal rulings bps invariants log-concavity',
)
