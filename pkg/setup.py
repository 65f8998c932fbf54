from setuptools import setup, find_packages

setup(
    name="polyaccess",
    version="0.1.0",
    packages=find_packages(),
    py_modules=["polyaccess", "runner"],
    include_package_data=True,
    package_data={
        "polyaccess": ["systems/*.sys"]
    },
    install_requires=[
        "sympy>=1.12",
        "numpy",
        "pyparsing>=3.0",
    ],
    extras_require={
        "test": ["pytest"],
    },
    entry_points={
        "console_scripts": ["polyaccess=polyaccess:main"],
    },
)
