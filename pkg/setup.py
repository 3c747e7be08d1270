import setuptools

setuptools.setup(
    name="pymy",
    version="1.0.0",
    description="Evaluation of MY, the inverse of (z^3 + z^2) / 2, and real roots of cubics written with it",
    packages=setuptools.find_packages(),
    package_data={"pymy.tests": ["data/*.csv"]},
    python_requires=">=3.7",
    install_requires=["numpy", "colorama"],
    extras_require={"test": ["pytest", "scipy"]},
    entry_points={"console_scripts": ["pymy=pymy.app.cli:main"]}
)
