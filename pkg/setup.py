from setuptools import find_packages, setup

setup(
    name='phin-linvariants',
    packages=find_packages(exclude=['tests', 'tests.*']),
    version='0.1.0',
    description='Exact computations with filtered (phi, N)-modules: refinements, critical indices, '
                'L-invariants, triangulation parameters and first-order deformation constraints.',
    author='Srikara S',
    license='MIT',
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'PyYAML',
        'click',
        'tabulate',
        'tqdm',
        'pydantic>=2',
        'sympy',
    ],
    extras_require={
        'test': ['hypothesis', 'pytest', 'flake8'],
    },
    entry_points={
        'console_scripts': ['phin=src.cli.app:main'],
    },
)
