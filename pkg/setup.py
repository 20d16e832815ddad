from __future__ import (
    absolute_import,
    print_function)
from setuptools import setup
import codecs
import os
import re


here = os.path.abspath(os.path.dirname(__file__))

def read(file_paths, default=""):
    # intentionally *not* adding an encoding option to open
    try:
        return codecs.open(os.path.join(here, *file_paths), 'r').read()
    except:
        return default


def find_version(file_paths):
    version_file = read(file_paths)
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]",
                              version_file, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string.")


description = 'Certified experiments on reduced group C*-algebras.'
long_description = read(['README.md'], default=description)

setup(
    name='redgrp',
    version=find_version(['redgrp', '__init__.py']),
    license='Apache Software License',
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.2',
        'six==1.13.0'
        ],
    python_requires='>=3.8',
    description=description,
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=['redgrp', 'redgrp.oracles'],
    entry_points={
        'console_scripts': [
            'redgrp = redgrp.cli:main',
            ],
        },
    include_package_data=True,
    platforms='any',
    zip_safe=False,
    classifiers = [
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Development Status :: 3 - Alpha',
        'Natural Language :: English',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics'
        ]
)
