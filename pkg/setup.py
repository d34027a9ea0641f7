from setuptools import setup

setup(
    name='topicalcore',
    packages=['topicalcore', 'topicalcore.tests'],  # this must be the same as the name above
    package_data={'topicalcore.tests': ['fixtures/*.tfn']},
    version='0.2.0',
    description='Topical functions: indecomposability graphs, eigenvectors, cycle times and slice-space certificates.',
    author='topicalcore authors',
    keywords=['perron-frobenius', 'topical functions', 'min-max functions', 'hilbert metric'],  # arbitrary keywords
    classifiers=[],
    python_requires='>=3.8',
    install_requires=['blinker', 'numpy', 'lark'],
    extras_require={'tests': ['hypothesis']},
    entry_points={'console_scripts': ['topical = topicalcore.cli:main']},
)
