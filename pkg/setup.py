from setuptools import setup, find_packages

setup(
    name="pcmax-causal-search",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*"]),
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.26.4",
        "pandas>=2.2.1",
        "python-dotenv>=1.0.0",
        "pydantic>=2.6.3",
        "pyyaml>=6.0.1",
        "scipy>=1.12.0",
        "networkx>=3.2.1",
    ],
    extras_require={
        "test": [
            "pytest>=8.0.0",
            "pytest-cov>=4.1.0",
        ],
    },
    entry_points={"console_scripts": ["pcmax=src.cli.main:run"]},
)
