#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages
from os import path

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

here = path.abspath(path.dirname(__file__))

with open(path.join(here, 'requirements.txt')) as f:
    requirements = f.read().split()

setup_requirements = [ ]

test_requirements = ['pytest']

setup(
    author="chaoslab developers",
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Exact simulation of a distributionally chaotic cylinder system and its factor.",
    install_requires=requirements,
    tests_require=test_requirements,
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='dynamical systems distributional chaos exact arithmetic',
    name='chaoslab',
    packages=find_packages(include=['chaoslab*']),
    entry_points={'console_scripts': ['chaoslab = chaoslab.cli:main']},
    python_requires='>=3.9',
    version='0.1.0',
    zip_safe=False,
)
