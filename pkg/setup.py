import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open('requirements.txt') as f:
    requirements = f.read().splitlines()

setuptools.setup(
    name="noninertial-tangles",
    use_scm_version=True,
    setup_requires=['setuptools_scm'],
    author="noninertial-tangles developers",
    description="Entanglement of W-class and GHZ states shared by accelerated observers.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests*"]),
    install_requires=requirements,
    entry_points={
        "console_scripts": ["noninertial-tangles = noninertial_tangles.cli:main"]
    },
    classifiers=[
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: Implementation :: CPython",
        "License :: OSI Approved :: GNU Affero General Public License v3",
        "Operating System :: OS Independent"
    ],
    license="AGPL-3.0"
)
