from setuptools import setup, find_packages

setup(
    name="harmonic_series_tool",
    version="1.0.0",
    packages=find_packages(),
    install_requires=[
        "mpmath>=1.2.0",
        "pandas>=1.3.0",
        "numpy>=1.20.0",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "harmonic-cli=harmonic_series_tool.cli.main:main",
        ],
    },
    python_requires=">=3.8",
    author="Harmonic Series Tools",
    description="High-precision verification of harmonic-number series identities",
)
