import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="PsInfo",
    version="0.3.0",
    author="lenforiee",
    author_email="lenforiee@misumi.me",
    description="Wigner and Husimi phase-space distributions with entropy, divergence and correlation measures",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("tests",)),
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.12",
    ],
    entry_points={
        "console_scripts": [
            "psinfo = psinfo.cli.main:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires='>=3.9',
)
