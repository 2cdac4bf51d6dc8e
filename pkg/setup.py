from setuptools import setup, find_packages

setup(
    name="threshold-codes",
    version="0.1.0",
    description="Creation codes of threshold graphs: exact counting, extremal codes, local moves and exhaustive verification",
    packages=find_packages(exclude=["*.tests", "*.tests.*"]),
    install_requires=[
        "django>=5.2.1",
        "djangorestframework>=3.16.0",
        "networkx>=3.2",
        "pydot>=2.0.0",
    ],
    extras_require={
        "test": ["hypothesis>=6.100.0"],
    },
    entry_points={
        "console_scripts": ["threshold-codes=thresholds.cli:main"],
    },
    python_requires=">=3.10",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.11",
        "Framework :: Django",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="threshold graphs matchings independent sets extremal graph theory colex",
)
