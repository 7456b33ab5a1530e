#!/usr/bin/env python
''' Installation script for parahorics package '''

from os.path import join as pjoin

from setuptools import setup


def read_vars_from(ver_file):
    """ Read variables from Python text file

    Parameters
    ----------
    ver_file : str
        Filename of file to read

    Returns
    -------
    info_vars : dict
        Variables defined in `ver_file`
    """
    ns = {}
    with open(ver_file, 'rt') as fobj:
        exec(fobj.read(), ns)
    return ns


# Get various parameters for this version, stored in parahorics/info.py
info = read_vars_from(pjoin('parahorics', 'info.py'))

extra_setuptools_args = dict(
    zip_safe=False,
    extras_require=dict(
        test=['pytest>=4.6', 'hypothesis>=4.0']))


def main(**extra_args):
    setup(name=info['NAME'],
          maintainer=info['MAINTAINER'],
          maintainer_email=info['MAINTAINER_EMAIL'],
          description=info['DESCRIPTION'],
          url=info['URL'],
          download_url=info['DOWNLOAD_URL'],
          license=info['LICENSE'],
          classifiers=info['CLASSIFIERS'],
          author=info['AUTHOR'],
          author_email=info['AUTHOR_EMAIL'],
          platforms=info['PLATFORMS'],
          version=info['__version__'],
          provides=info['PROVIDES'],
          install_requires=info['INSTALL_REQUIRES'],
          python_requires='>=3.6',
          packages=['parahorics',
                    'parahorics.tests',
                   ],
          entry_points={
              'console_scripts': ['parahorics = parahorics.cli:main'],
          },
          long_description=open('README.rst', 'rt').read(),
          **extra_args
         )

#simple way to test what setup will do
#python setup.py install --prefix=/tmp
if __name__ == "__main__":
    main(**extra_setuptools_args)
