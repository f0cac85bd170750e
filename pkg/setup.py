#!/usr/bin/env python
from setuptools import setup, find_packages

# Parse version number from berndt_closed_forms/__init__.py:
with open('berndt_closed_forms/__init__.py') as f:
    info = {}
    for line in f:
        if line.startswith('version'):
            exec(line, info)
            break

extra_test = [
    'pytest>=4',
    'pytest-cov>=2',
    'numpy',
    'scipy',
]

extra_dev = [
    *extra_test,
]

extra_ci = [
    *extra_test,
    'python-coveralls',
]

setup_info = dict(
    name='berndt_closed_forms',
    version=info['version'],
    description='Exact Gamma(1/4)/pi closed forms of hyperbolic series and Berndt-type integrals, '
                'with arbitrary-precision verification',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    # Package info
    packages=find_packages(exclude=['tests', 'tests.*']),

    # Add _ prefix to the names of temporary build dirs
    options={'build': {'build_base': '_build'}, },
    zip_safe=True,
    python_requires='>=3.8',

    install_requires=[
        'mpmath>=1.2',
    ],

    extras_require={
        'dev': extra_dev,
        'test': extra_test,
        'ci': extra_ci,
    },

    entry_points={
        'console_scripts': [
            'berndt-verify=berndt_closed_forms.cli.main:main',
        ],
    },
)

setup(**setup_info)
