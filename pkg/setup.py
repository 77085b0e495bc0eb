#!/usr/bin/env python

from setuptools import setup


version_file = "polygonal/__version__.py"
version_data = {}
with open(version_file) as f:
    code = compile(f.read(), version_file, 'exec')
    exec(code, globals(), version_data)

with open('./requirements.txt') as f:
    reqs = [line.strip() for line in f if line.strip() and not line.startswith('#')]


setup(name='polygonal-tools',
      version=version_data['__version__'],
      description='Negative type and polygonal equality analysis for finite metric spaces.',
      author='polygonal-tools contributors',
      packages=['polygonal', 'polygonal.common', 'polygonal.analysis'],
      license="GPLv2",
      install_requires=reqs)
