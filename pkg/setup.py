from setuptools import find_packages, setup

setup(
    name='taudirac',
    version='0.1.0',
    python_requires='>=3.10',
    install_requires=['numpy >=1.24', 'scipy >=1.10'],
    package_data={'taudirac': ['*.py', '*.pyi', '**/*.py', '**/*.pyi']},
    packages=find_packages(exclude=['tests']),
    entry_points={'console_scripts': ['taudirac=taudirac.cli:main']},
)
