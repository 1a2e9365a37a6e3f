import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()


setuptools.setup(
    name='snerve',
    version='0.1.0',
    packages=[
        'snerve',
        'snerve.types',
        'snerve.extras',
        'snerve.simplicial',
        'snerve.enriched',
        'snerve.nerves',
        'snerve.grothendieck',
        'snerve.monoidal',
        'snerve.harness',
        ],
    description="Nerves, Grothendieck constructions and operadic nerves of finite simplicial categories",
    long_description=long_description,
    install_requires=[
            'scipy>=1.9.1',
            'numpy>=1.23.3',
            'pandas>=1.5.0',
        ],
    extras_require={
            'tests': ['pytest>=7.0', 'hypothesis>=6.0'],
        },
    entry_points={
            'console_scripts': ['snerve=snerve.harness.cli:main'],
        },
    python_requires='>=3.8',
    long_description_content_type="text/markdown",
    license='Apache License 2.0',
    classifiers=[
     "Programming Language :: Python :: 3",
     'License :: OSI Approved :: Apache Software License',
    ],
 )
