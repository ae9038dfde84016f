#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""setup for ncdirac package distribution.

Final changes to version numbers and such::

    ncdirac/__init__.py  # edit version number
    tools/conda.recipe/meta.yaml  # edit version number
    README.md  # add release description

To prepare a distribution::

    python -m ncdirac.test
    python setup.py check
    python setup.py sdist bdist_wheel > dist_call_output.txt ; less dist_call_output.txt
    twine check dist/*

Finally upload the distribution::

    twine upload dist/*0.x.x*  # to not upload outdated stuff

Anaconda::

    conda-build -q tools/conda.recipe

"""
from setuptools import setup
from ncdirac import __version__  # assumes that the ncdirac folder is visible first in path
from ncdirac import __doc__ as long_description

setup(name="ncdirac",
      long_description=long_description,
      long_description_content_type='text/x-rst',
      version=__version__.split()[0],
      description="Exact computations with constant Dirac structures on "
                  "tori, the O(n,n|Z) action and noncommutative tori",
      license="BSD",
      classifiers=[
          "Intended Audience :: Science/Research",
          "Intended Audience :: Education",
          "Topic :: Scientific/Engineering",
          "Topic :: Scientific/Engineering :: Mathematics",
          "Programming Language :: Python :: 3",
          "Development Status :: 3 - Alpha",
          "Environment :: Console",
          "License :: OSI Approved :: BSD License",
      ],
      keywords=["Dirac structure", "noncommutative torus", "Morita equivalence",
                "exact linear algebra"],
      packages=["ncdirac", "ncdirac.utilities"],
      python_requires=">=3.5",
      install_requires=["numpy", "sympy>=1.12"],
      entry_points={
          "console_scripts": ["ncdirac = ncdirac.cli:console_main"],
      },
      )
