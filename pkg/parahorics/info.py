""" Define distribution parameters for parahorics, including package version

This file contains defines parameters for parahorics that we use to fill
settings in setup.py and the parahorics top-level docstring. In setup.py in
particular, we exec this file, so it cannot import parahorics
"""

CLASSIFIERS = ["Development Status :: 3 - Alpha",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: BSD License",
               "Operating System :: OS Independent",
               "Programming Language :: Python :: 3",
               "Topic :: Scientific/Engineering :: Mathematics"]

description  = 'Exact invariants of parahoric Bruhat-Tits group data on curves'

# Minimum package versions
# Check against requirements.txt
NUMPY_MIN_VERSION = '1.17'
SCIPY_MIN_VERSION = '1.1'

NAME                = 'parahorics'
MAINTAINER          = "parahorics developers"
MAINTAINER_EMAIL    = ""
DESCRIPTION         = description
URL                 = ""
DOWNLOAD_URL        = ""
LICENSE             = "BSD license"
AUTHOR              = "parahorics developers"
AUTHOR_EMAIL        = ""
PLATFORMS           = "OS Independent"
STATUS              = 'alpha'
PROVIDES            = ["parahorics"]
REQUIRES            = ["numpy (>=%s)" % NUMPY_MIN_VERSION,
                       "scipy (>=%s)" % SCIPY_MIN_VERSION]
INSTALL_REQUIRES    = ["numpy>=%s" % NUMPY_MIN_VERSION,
                       "scipy>=%s" % SCIPY_MIN_VERSION]

__version__ = '0.1.0'
