#!/usr/bin/env python

from setuptools import setup

setup(name='qil',
      version='0.1',
      description='Interferometric entanglement of qubits with coherent, twin-Fock and NOON light',
      author='qil developers',
      author_email='qil-dev@example.org',
      packages=['qil', 'qil.fock', 'qil.qubits', 'qil.interferometer', 'qil.budget', 'qil.protocols', 'qil.cli'],
      install_requires=['numpy', 'scipy', 'tqdm'],
      )
